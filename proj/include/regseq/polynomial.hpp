#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "regseq/monomial.hpp"

namespace regseq {

struct Term {
    Monomial m;
    mpq_class c;
};

// Sparse polynomial over Q. Terms are kept in a canonical form: sorted in
// descending graded reverse lexicographic order, no zero coefficients.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(check(nvars)) {}

    // Constant polynomial.
    Polynomial(int nvars, const mpq_class& c) : nvars_(check(nvars)) {
        if (c != 0) terms_.push_back({Monomial(nvars), c});
    }

    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    static int check(int n) {
        if (n < 0 || n > max_vars) throw std::invalid_argument("variable count out of range");
        return n;
    }

    int nvars_;
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);
Polynomial scale(const Polynomial& f, const mpq_class& c);
Polynomial mul(const Polynomial& f, const Polynomial& g);
// f * c * x^m
Polynomial mul_term(const Polynomial& f, const mpq_class& c, const Monomial& m);
Polynomial pow(const Polynomial& f, int k);

std::pair<Monomial, mpq_class> leading_term(const Polynomial& f, const MonomialOrder& ord);

mpq_class evaluate(const Polynomial& f, const std::vector<mpq_class>& point);

// x_{perm[i]} substituted for x_i.
Polynomial apply_permutation(const Polynomial& f, const std::vector<int>& perm);

}  // namespace regseq
