#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "regseq/hilbert.hpp"

using namespace regseq;
using testutil::hsym;
using testutil::poly;
using testutil::psym;

TEST_SUITE("hilbert") {

TEST_CASE("ci_series for Example 5.1 degrees") {
    auto hs = ci_series({1, 4, 5}, 3);
    CHECK(hs.numerator_at(3) == std::vector<mpz_class>{1, -1, 0, 0, -1, 0, 1, 0, 0, 1, -1});
}

TEST_CASE("ci_series of a single linear form in one variable") {
    auto hs = ci_series({1}, 1);
    CHECK(hs.num == std::vector<mpz_class>{1});
    CHECK(hs.den_exp == 0);
    CHECK(hs.expand(4) == std::vector<long long>{1, 0, 0, 0, 0});
}

TEST_CASE("ci_series (2,3) in 3 variables stabilizes at 6") {
    auto hs = ci_series({2, 3}, 3);
    CHECK(hs.expand(7) == std::vector<long long>{1, 3, 5, 6, 6, 6, 6, 6});
}

TEST_CASE("ci_series validates its arguments") {
    CHECK_THROWS_AS(ci_series({1, 2, 3, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(ci_series({0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(ci_series({-2}, 2), std::invalid_argument);
}

TEST_CASE("ci_series expansion is non-negative for k <= n") {
    for (int n = 2; n <= 4; ++n)
        for (int d1 = 1; d1 <= 4; ++d1)
            for (int d2 = d1; d2 <= 5; ++d2) {
                auto v = ci_series({d1, d2}, n).expand(12);
                for (auto c : v) CHECK(c >= 0);
            }
}

TEST_CASE("numerator_at raises and lowers the denominator exactly") {
    auto hs = ci_series({2}, 2);  // (1-z^2)/(1-z)^2 = (1+z)/(1-z)
    CHECK(hs.num == std::vector<mpz_class>{1, 1});
    CHECK(hs.den_exp == 1);
    CHECK(hs.numerator_at(2) == std::vector<mpz_class>{1, 0, -1});
    CHECK(hs.numerator_at(1) == std::vector<mpz_class>{1, 1});
    CHECK_THROWS_AS(hs.numerator_at(0), std::invalid_argument);
}

TEST_CASE("hf by linear algebra: socle vanishing for (p1,p2,p3)") {
    std::vector<Polynomial> gens{psym(1, 3), psym(2, 3), psym(3, 3)};
    CHECK(hf_single_degree(gens, 3, 4) == 0);
    CHECK(hf_linear_algebra(gens, 3, 4) == std::vector<long long>{1, 2, 2, 1, 0});
}

TEST_CASE("hf of the full ring") {
    CHECK(ring_dimension(3, 2) == 6);
    CHECK(ring_dimension(4, 30) == 5456);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(4, 0).size() == 1);
}

TEST_CASE("Example 5.1 table matches the series expansion") {
    std::vector<Polynomial> gens{hsym(1, 3), hsym(4, 3), hsym(5, 3)};
    auto table = hf_linear_algebra(gens, 3, 8);
    auto hs = hs_from_groebner(Ideal(gens));
    CHECK(table == hs.expand(8));
    CHECK(table == std::vector<long long>{1, 2, 3, 4, 4, 3, 2, 2, 2});
}

TEST_CASE("monomial complete intersection (x1^2, x2^2)") {
    auto hs = hs_from_groebner(Ideal({poly("x1^2", 2), poly("x2^2", 2)}));
    CHECK(hs.num == std::vector<mpz_class>{1, 2, 1});
    CHECK(hs.den_exp == 0);
    CHECK(hs.numerator_at(2) == std::vector<mpz_class>{1, 0, -2, 0, 1});
}

TEST_CASE("(p2, p3) is a complete intersection in 3 variables") {
    auto hs = hs_from_groebner(Ideal({psym(2, 3), psym(3, 3)}));
    CHECK(hs == ci_series({2, 3}, 3));
    CHECK(!(hs == ci_series({2, 2}, 3)));
}

TEST_CASE("route agreement on a mixed corpus") {
    std::mt19937 rng(808);
    std::vector<std::pair<std::vector<Polynomial>, int>> corpus = {
        {{psym(1, 3), psym(2, 3)}, 3},
        {{psym(2, 3), psym(4, 3)}, 3},
        {{hsym(2, 3), hsym(3, 3), hsym(4, 3)}, 3},
        {{poly("x1*x2", 3), poly("x2*x3^2", 3)}, 3},
        {{psym(2, 4), psym(3, 4)}, 4},
        {{testutil::rand_homog(rng, 3, 2), testutil::rand_homog(rng, 3, 3)}, 3},
    };
    for (const auto& [gens, n] : corpus) {
        auto hs = hs_from_groebner(Ideal(gens));
        CHECK(hf_linear_algebra(gens, n, 10) == hs.expand(10));
    }
}

TEST_CASE("ci coefficients never exceed the actual Hilbert function") {
    std::vector<std::vector<Polynomial>> tuples = {
        {psym(1, 3), psym(2, 3), psym(4, 3)},
        {hsym(1, 3), hsym(4, 3), hsym(5, 3)},
        {psym(2, 4), psym(4, 4)},
    };
    for (const auto& gens : tuples) {
        std::vector<int> degs;
        for (const auto& g : gens) degs.push_back(g.degree());
        int n = gens.front().nvars();
        auto ci = ci_series(degs, n).expand(12);
        auto hf = hf_linear_algebra(gens, n, 12);
        for (int d = 0; d <= 12; ++d) CHECK(ci[d] <= hf[d]);
    }
}

TEST_CASE("cancelled form re-expands to the pre-cancellation coefficients") {
    // (1-z)(1-z^4)(1-z^5)/(1-z)^3 expanded directly equals the cancelled expansion.
    auto hs = ci_series({1, 4, 5}, 3);
    auto raw = hs.numerator_at(3);
    // divide raw numerator by (1-z)^3 via repeated power-series division by (1-z)
    std::vector<long long> coef(raw.size() + 6, 0);
    for (size_t i = 0; i < raw.size(); ++i) coef[i] = raw[i].get_si();
    for (int rep = 0; rep < 3; ++rep)
        for (size_t i = 1; i < coef.size(); ++i) coef[i] += coef[i - 1];
    auto expanded = hs.expand(static_cast<int>(coef.size()) - 1);
    for (size_t i = 0; i < coef.size(); ++i) CHECK(coef[i] == expanded[i]);
}

TEST_CASE("hf_linear_algebra rejects non-homogeneous generators") {
    CHECK_THROWS_AS(hf_linear_algebra({poly("x1^2 + x2", 2)}, 2, 3), std::invalid_argument);
}

TEST_CASE("quotient by the whole ring is the zero series") {
    auto hs = hs_from_groebner(Ideal({poly("1", 2)}));
    CHECK(hs.num.empty());
    CHECK(hs.expand(3) == std::vector<long long>{0, 0, 0, 0});
}

}  // TEST_SUITE
