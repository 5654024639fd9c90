#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

namespace regseq {

// Dense integer coefficients of the n-th cyclotomic polynomial, coef[i] for x^i.
struct CyclotomicPoly {
    int n = 0;
    std::vector<mpz_class> coef;

    int degree() const { return static_cast<int>(coef.size()) - 1; }
};

// Computed by exact division of x^n - 1 by the product of the lower Phi_d.
const CyclotomicPoly& cyclotomic(int n);

// Remainder of a dense integer polynomial modulo Phi_n (monic division).
std::vector<mpz_class> mod_cyclotomic(std::vector<mpz_class> p, int n);

// A vanishing sum of four distinct n-th roots of unity, exponents ascending,
// decomposed into the two antipodal pairs (exponents differing by n/2) that
// force the sum to zero.
struct FourSum {
    std::array<int, 4> exponents;
    std::array<std::array<int, 2>, 2> pairs;
};

// Every 4-subset {a,b,c,d} of {0..n-1} with zeta^a+zeta^b+zeta^c+zeta^d = 0,
// decided exactly by divisibility of x^a+x^b+x^c+x^d by Phi_n. Each returned
// subset is verified to split into two antipodal pairs; a zero sum that fails
// to split would be reported as an internal error.
std::vector<FourSum> four_root_zero_sums(int n);

}  // namespace regseq
