#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "regseq/symfun.hpp"

using namespace regseq;
using testutil::esym;
using testutil::hsym;
using testutil::poly;
using testutil::psym;

TEST_SUITE("symfun") {

TEST_CASE("small generators expand as expected") {
    CHECK(psym(0, 3) == Polynomial(3, 3));
    CHECK(hsym(0, 3) == Polynomial(3, 1));
    CHECK(esym(0, 3) == Polynomial(3, 1));
    CHECK(esym(4, 3).is_zero());
    CHECK(psym(2, 3) == poly("x1^2 + x2^2 + x3^2", 3));
    CHECK(esym(2, 3) == poly("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(hsym(2, 3) == poly("x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(hsym(1, 4) == psym(1, 4));
    CHECK(esym(1, 4) == psym(1, 4));
}

TEST_CASE("term counts and degrees") {
    // h_m(n) sums all monomials of degree m: C(m+n-1, m) terms.
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 8; ++m) {
            auto h = hsym(m, n);
            CHECK(h.is_homogeneous());
            CHECK(h.degree() == m);
            CHECK(static_cast<long long>(h.num_terms()) == ring_dimension(n, m));
            CHECK(static_cast<long long>(psym(m, n).num_terms()) == n);
        }
}

TEST_CASE("symmetry of the three families") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 10; ++m) {
            CHECK(is_symmetric(psym(m, n)));
            CHECK(is_symmetric(hsym(m, n)));
            if (m <= n) CHECK(is_symmetric(esym(m, n)));
        }
    CHECK(!is_symmetric(poly("x1", 3)));
    CHECK(!is_symmetric(poly("x1 + x2", 3)));
    CHECK(is_symmetric(poly("x1 + x2", 2)));
}

TEST_CASE("Newton identities hold exactly") {
    for (int n = 1; n <= 4; ++n) {
        auto v = verify_newton(n, 15);
        CHECK(v.pass);
        CHECK(v.first_failure == -1);
    }
}

TEST_CASE("elementary-basis rewrites of the classics") {
    auto e = [](const std::string& s, int n) { return parse_polynomial(s, n, 'e'); };
    CHECK(to_elementary(psym(2, 3)) == e("e1^2 - 2*e2", 3));
    CHECK(to_elementary(psym(3, 3)) == e("e1^3 - 3*e1*e2 + 3*e3", 3));
    CHECK(to_elementary(hsym(2, 3)) == e("e1^2 - e2", 3));
    CHECK(to_elementary(hsym(3, 3)) == e("e1^3 - 2*e1*e2 + e3", 3));
    CHECK(to_elementary(esym(3, 4)) == e("e3", 4));
    CHECK(to_elementary(Polynomial(3, mpq_class(7, 2))) == Polynomial(3, mpq_class(7, 2)));
}

TEST_CASE("to_elementary rejects non-symmetric input") {
    CHECK_THROWS_AS(to_elementary(poly("x1", 3)), std::invalid_argument);
}

TEST_CASE("expand_elementary inverts to_elementary") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 12; ++m) {
            CHECK(expand_elementary(to_elementary(psym(m, n)), n) == psym(m, n));
            CHECK(expand_elementary(to_elementary(hsym(m, n)), n) == hsym(m, n));
        }
}

TEST_CASE("roundtrip on random symmetric products") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> pick(1, 4);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + it % 3;
        auto f = mul(esym(pick(rng) % n + 1, n), hsym(pick(rng), n));
        f = add(f, psym(pick(rng), n));
        REQUIRE(is_symmetric(f));
        CHECK(expand_elementary(to_elementary(f), n) == f);
    }
}

TEST_CASE("expand_elementary validates e-variable range") {
    // e3 in a 2-variable ring has no expansion target.
    auto g = parse_polynomial("e3", 3, 'e');
    CHECK_THROWS_AS(expand_elementary(g, 2), std::invalid_argument);
}

}  // TEST_SUITE
