#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "regseq/cyclotomic.hpp"

using namespace regseq;

namespace {

std::vector<mpz_class> zp(std::initializer_list<long> cs) {
    std::vector<mpz_class> r;
    for (long c : cs) r.emplace_back(c);
    return r;
}

std::vector<mpz_class> zmul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("small orders match the closed forms") {
    CHECK(cyclotomic(1).coef == zp({-1, 1}));
    CHECK(cyclotomic(2).coef == zp({1, 1}));
    CHECK(cyclotomic(3).coef == zp({1, 1, 1}));
    CHECK(cyclotomic(4).coef == zp({1, 0, 1}));
    CHECK(cyclotomic(6).coef == zp({1, -1, 1}));
    CHECK(cyclotomic(7).coef == zp({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic(9).coef == zp({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic(12).coef == zp({1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("product over divisors recovers x^n - 1") {
    for (int n = 1; n <= 64; ++n) {
        std::vector<mpz_class> prod{mpz_class(1)};
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) prod = zmul(prod, cyclotomic(d).coef);
        }
        std::vector<mpz_class> expect(n + 1, mpz_class(0));
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("degree is Euler phi") {
    for (int n = 1; n <= 150; ++n) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("order 105 is the first with a coefficient outside -1..1") {
    for (int n = 1; n < 105; ++n) {
        for (const auto& c : cyclotomic(n).coef) CHECK(abs(c) <= 1);
    }
    const auto& c105 = cyclotomic(105).coef;
    CHECK(c105[7] == -2);
    CHECK(c105[41] == -2);
}

TEST_CASE("reduction modulo a cyclotomic") {
    CHECK(mod_cyclotomic(zp({1, 0, 0, 0, 1}), 4) == zp({2}));
    CHECK(mod_cyclotomic({}, 5).empty());
    SUBCASE("x^n reduces to 1") {
        for (int n : {3, 5, 8, 12}) {
            std::vector<mpz_class> p(n + 1, mpz_class(0));
            p[n] = 1;
            CHECK(mod_cyclotomic(std::move(p), n) == zp({1}));
        }
    }
    SUBCASE("the modulus reduces to zero") {
        auto phi = cyclotomic(9).coef;
        CHECK(mod_cyclotomic(std::move(phi), 9).empty());
    }
}

TEST_CASE("sixth roots give exactly three vanishing four-sums") {
    auto sums = four_root_zero_sums(6);
    REQUIRE(sums.size() == 3);
    CHECK(sums[0].exponents == std::array<int, 4>{0, 1, 3, 4});
    CHECK(sums[0].pairs[0] == std::array<int, 2>{0, 3});
    CHECK(sums[0].pairs[1] == std::array<int, 2>{1, 4});
    CHECK(sums[1].exponents == std::array<int, 4>{0, 2, 3, 5});
    CHECK(sums[1].pairs[0] == std::array<int, 2>{0, 3});
    CHECK(sums[1].pairs[1] == std::array<int, 2>{2, 5});
    CHECK(sums[2].exponents == std::array<int, 4>{1, 2, 4, 5});
    CHECK(sums[2].pairs[0] == std::array<int, 2>{1, 4});
    CHECK(sums[2].pairs[1] == std::array<int, 2>{2, 5});
}

TEST_CASE("eighth roots include the 0,1,4,5 sum") {
    auto sums = four_root_zero_sums(8);
    CHECK(sums.size() == 6);
    bool found = false;
    for (const auto& s : sums) found = found || s.exponents == std::array<int, 4>{0, 1, 4, 5};
    CHECK(found);
}

TEST_CASE("odd orders admit no vanishing four-sums") {
    for (int n = 5; n <= 15; n += 2) CHECK(four_root_zero_sums(n).empty());
}

TEST_CASE("even orders split into antipodal pairs") {
    for (int n = 6; n <= 16; n += 2) {
        auto sums = four_root_zero_sums(n);
        int half = n / 2;
        CHECK(static_cast<int>(sums.size()) == half * (half - 1) / 2);
        for (const auto& s : sums) {
            CHECK(s.pairs[0][1] - s.pairs[0][0] == half);
            CHECK(s.pairs[1][1] - s.pairs[1][0] == half);
            // pair elements recover the exponent list
            CHECK(s.exponents == std::array<int, 4>{s.pairs[0][0], s.pairs[1][0], s.pairs[0][1],
                                                    s.pairs[1][1]});
        }
    }
}

TEST_CASE("fewer than five roots is rejected") {
    CHECK_THROWS_AS(four_root_zero_sums(4), std::invalid_argument);
    CHECK_THROWS_AS(four_root_zero_sums(0), std::invalid_argument);
}

}  // TEST_SUITE
