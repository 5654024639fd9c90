#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "regseq/groebner.hpp"
#include "regseq/hilbert.hpp"

using namespace regseq;
using testutil::hsym;
using testutil::poly;
using testutil::psym;
using testutil::rand_homog;

namespace {

// S-polynomial straight from the definition, for the Buchberger criterion check.
Polynomial s_poly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto [mf, cf] = leading_term(f, ord);
    auto [mg, cg] = leading_term(g, ord);
    Monomial L = lcm(mf, mg);
    return sub(mul_term(f, 1 / cf, quotient(L, mf)), mul_term(g, 1 / cg, quotient(L, mg)));
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("monomial ideal is its own reduced basis") {
    auto gb = buchberger({poly("x1", 2), poly("x2", 2)}, MonomialOrder::grevlex());
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.complete);
    // elements sorted ascending by leading monomial: x2 < x1 in grevlex
    CHECK(gb.elems[0] == poly("x2", 2));
    CHECK(gb.elems[1] == poly("x1", 2));
}

TEST_CASE("basis of (p1, p2) in 3 variables") {
    Ideal I({psym(1, 3), psym(2, 3)});
    // Leading-term ideal must carry the complete-intersection numerator (1-z)(1-z^2).
    auto hs = hs_from_groebner(I);
    CHECK(hs.numerator_at(3) == std::vector<mpz_class>{1, -1, -1, 1});
}

TEST_CASE("quotient numerator of (h1, h4, h5)") {
    Ideal I({hsym(1, 3), hsym(4, 3), hsym(5, 3)});
    auto hs = hs_from_groebner(I);
    CHECK(hs.numerator_at(3) == std::vector<mpz_class>{1, -1, 0, 0, -1, 0, 1, 1, -1});
}

TEST_CASE("normal form of generators is zero") {
    Ideal I({psym(2, 3), psym(3, 3)});
    for (const auto& g : I.generators()) CHECK(normal_form(g, I).is_zero());
    for (const auto& g : I.basis().elems) CHECK(normal_form(g, I).is_zero());
}

TEST_CASE("power sums reduce into (p1, p2) in 3 variables") {
    Ideal I({psym(1, 3), psym(2, 3)});
    CHECK(normal_form(psym(4, 3), I).is_zero());
    CHECK(normal_form(sub(psym(3, 3), scale(testutil::esym(3, 3), 3)), I).is_zero());
    CHECK(is_member(psym(5, 3), I));
}

TEST_CASE("membership examples") {
    Ideal H({hsym(1, 3), hsym(4, 3)});
    CHECK(!is_member(hsym(5, 3), H));
    CHECK(is_member(Polynomial(3), H));
    Ideal P({psym(1, 3), psym(2, 3)});
    CHECK(is_member(Polynomial(3), P));
}

TEST_CASE("reduced basis invariants") {
    std::vector<std::vector<Polynomial>> cases = {
        {psym(1, 3), psym(2, 3)},
        {hsym(1, 3), hsym(4, 3), hsym(5, 3)},
        {psym(2, 4), psym(3, 4)},
        {hsym(2, 3), hsym(3, 3)},
    };
    for (const auto& gens : cases) {
        auto gb = buchberger(gens, MonomialOrder::grevlex());
        REQUIRE(gb.complete);
        for (size_t i = 0; i < gb.elems.size(); ++i) {
            auto [mi, ci] = leading_term(gb.elems[i], gb.order);
            CHECK(ci == 1);
            CHECK(gb.elems[i].is_homogeneous());
            // no leading term divides another
            for (size_t j = 0; j < gb.elems.size(); ++j) {
                if (i == j) continue;
                auto [mj, cj] = leading_term(gb.elems[j], gb.order);
                CHECK(!divides(mi, mj));
            }
            // tails reduced: no non-leading monomial divisible by any leading term
            for (const auto& t : gb.elems[i].terms()) {
                if (t.m == mi) continue;
                for (size_t j = 0; j < gb.elems.size(); ++j) {
                    auto [mj, cj] = leading_term(gb.elems[j], gb.order);
                    CHECK(!divides(mj, t.m));
                }
            }
        }
    }
}

TEST_CASE("Buchberger criterion: S-polynomials reduce to zero") {
    auto gb = buchberger({psym(2, 3), psym(3, 3), psym(4, 3)}, MonomialOrder::grevlex());
    REQUIRE(gb.complete);
    for (size_t i = 0; i < gb.elems.size(); ++i)
        for (size_t j = i + 1; j < gb.elems.size(); ++j)
            CHECK(normal_form(s_poly(gb.elems[i], gb.elems[j], gb.order), gb).is_zero());
}

TEST_CASE("normal form is idempotent and path independent") {
    std::mt19937 rng(1618);
    Ideal I({psym(2, 3), psym(3, 3)});
    auto base = I.basis();
    for (int it = 0; it < 25; ++it) {
        auto f = rand_homog(rng, 3, 2 + it % 5);
        auto r = normal_form(f, I);
        CHECK(normal_form(r, I) == r);
        // shuffled copies of the reduced basis must give the same remainder
        GroebnerBasis shuffled = base;
        std::shuffle(shuffled.elems.begin(), shuffled.elems.end(), rng);
        CHECK(normal_form(f, shuffled) == r);
        std::shuffle(shuffled.elems.begin(), shuffled.elems.end(), rng);
        CHECK(normal_form(f, shuffled) == r);
    }
}

TEST_CASE("membership soundness on constructed combinations") {
    std::mt19937 rng(2718);
    auto g1 = psym(2, 3), g2 = hsym(3, 3);
    Ideal I({g1, g2});
    for (int it = 0; it < 20; ++it) {
        auto q1 = rand_homog(rng, 3, it % 3);
        auto q2 = rand_homog(rng, 3, it % 2);
        CHECK(is_member(add(mul(q1, g1), mul(q2, g2)), I));
    }
}

TEST_CASE("linearity of normal forms") {
    std::mt19937 rng(140);
    Ideal I({hsym(1, 3), hsym(4, 3)});
    for (int it = 0; it < 15; ++it) {
        auto f = rand_homog(rng, 3, 4), g = rand_homog(rng, 3, 4);
        CHECK(normal_form(add(f, g), I) == add(normal_form(f, I), normal_form(g, I)));
        CHECK(normal_form(scale(f, mpq_class(-3, 7)), I) == scale(normal_form(f, I), mpq_class(-3, 7)));
    }
}

TEST_CASE("lex order basis also works") {
    auto gb = buchberger({psym(1, 3), psym(2, 3)}, MonomialOrder::lex());
    CHECK(gb.complete);
    for (const auto& g : gb.elems) CHECK(normal_form(g, gb).is_zero());
    CHECK(normal_form(psym(4, 3), gb).is_zero());
}

TEST_CASE("degree cutoff produces a truncated but usable basis") {
    BuchbergerOptions opts;
    opts.cutoff = 4;
    auto gb = buchberger({hsym(1, 3), hsym(4, 3), hsym(5, 3)}, MonomialOrder::grevlex(), opts);
    if (!gb.complete) {
        CHECK(gb.valid_upto == 4);
        // degrees within the cutoff reduce as with the full basis
        Ideal I({hsym(1, 3), hsym(4, 3), hsym(5, 3)});
        std::mt19937 rng(99);
        for (int d = 1; d <= 4; ++d) {
            auto f = rand_homog(rng, 3, d);
            CHECK(normal_form(f, gb) == normal_form(f, I));
        }
        CHECK_THROWS_AS(normal_form(rand_homog(rng, 3, 9), gb), std::runtime_error);
    }
}

TEST_CASE("cutoff on non-homogeneous input is rejected") {
    BuchbergerOptions opts;
    opts.cutoff = 3;
    CHECK_THROWS_AS(buchberger({poly("x1^2 + x2", 2)}, MonomialOrder::grevlex(), opts),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(buchberger({}, MonomialOrder::grevlex()), std::invalid_argument);
    CHECK_THROWS_AS(buchberger({poly("x1", 2), poly("x1", 3)}, MonomialOrder::grevlex()),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ideal({Polynomial(3)}), std::invalid_argument);
}

}  // TEST_SUITE
