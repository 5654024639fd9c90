#pragma once

#include <string>

#include "regseq/polynomial.hpp"

namespace regseq {

enum class SymKind { P, H, E };

// A polynomial whose variables are read as e1..en instead of x1..xn.
using EPolynomial = Polynomial;

// Expanded power-sum / complete-homogeneous / elementary symmetric polynomial
// of degree m in n variables. p0(n) = n, h0 = e0 = 1, e_m = 0 for m > n.
Polynomial generate(SymKind kind, int m, int n);

// Checked with the two generating transpositions (swap x1,x2; cyclic shift).
bool is_symmetric(const Polynomial& f);

struct NewtonVerdict {
    bool pass;
    int first_failure;  // degree, -1 when pass
};

// Both classical recurrences, as exact polynomial identities in n variables:
//   k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
//   sum_{i=0..k} (-1)^i e_i h_{k-i} = 0
// for every k = 1..upto.
NewtonVerdict verify_newton(int n, int upto);

// Unique rewrite of a symmetric polynomial in the elementary basis, by
// lexicographic leading-term elimination.
EPolynomial to_elementary(const Polynomial& f);

// Substitutes each e_i by its expansion in n variables.
Polynomial expand_elementary(const EPolynomial& g, int n);

}  // namespace regseq
