#pragma once

#include <gmpxx.h>

#include <vector>

#include "regseq/groebner.hpp"

namespace regseq {

// Rational Hilbert series num(z) / (1-z)^den_exp, kept cancelled: either
// den_exp == 0 or num(1) != 0. The zero series is the empty numerator.
struct HilbertSeries {
    std::vector<mpz_class> num;  // dense, num[j] is the z^j coefficient
    int den_exp = 0;

    void cancel();

    // Coefficients of the z-expansion through degree upto, inclusive.
    std::vector<long long> expand(int upto) const;

    // Numerator rewritten over (1-z)^e. Throws when the series cannot be
    // expressed exactly over that denominator, so equal exponents compare
    // coefficient lists directly.
    std::vector<mpz_class> numerator_at(int e) const;

    bool operator==(const HilbertSeries& o) const;
    bool operator!=(const HilbertSeries& o) const { return !(*this == o); }
};

// Complete intersection series: product of (1 - z^d) over degs, over (1-z)^nvars.
HilbertSeries ci_series(const std::vector<int>& degs, int nvars);

// Exact Hilbert series of S/I from a complete Groebner basis via the leading
// term ideal. Throws on a truncated basis.
HilbertSeries hs_from_groebner(const Ideal& I);
HilbertSeries hs_from_groebner(const GroebnerBasis& gb, int nvars);

// Hilbert function values of S/(gens) for degrees 0..upto by exact rank of
// the degree-d multiplication matrices. Generators must be homogeneous.
std::vector<long long> hf_linear_algebra(const std::vector<Polynomial>& gens, int nvars, int upto);

// One value HF(S/(gens))_d by the same route.
long long hf_single_degree(const std::vector<Polynomial>& gens, int nvars, int d);

// dim of the degree-d graded piece of the polynomial ring in nvars variables.
long long ring_dimension(int nvars, int d);

// All monomials of total degree d in nvars variables, fixed deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace regseq
