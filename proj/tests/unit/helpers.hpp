#pragma once

#include <random>
#include <string>
#include <vector>

#include "regseq/hilbert.hpp"
#include "regseq/parse.hpp"
#include "regseq/polynomial.hpp"
#include "regseq/symfun.hpp"

namespace testutil {

inline regseq::Polynomial poly(const std::string& text, int nvars) {
    return regseq::parse_polynomial(text, nvars);
}

inline regseq::Polynomial sym(regseq::SymKind kind, int m, int n) {
    return regseq::generate(kind, m, n);
}

inline regseq::Polynomial psym(int m, int n) { return sym(regseq::SymKind::P, m, n); }
inline regseq::Polynomial hsym(int m, int n) { return sym(regseq::SymKind::H, m, n); }
inline regseq::Polynomial esym(int m, int n) { return sym(regseq::SymKind::E, m, n); }

// Small dense-ish random polynomial, not necessarily homogeneous.
inline regseq::Polynomial rand_poly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> coef_dist(-9, 9);
    std::uniform_int_distribution<int> nterms_dist(1, 6);
    std::vector<regseq::Term> terms;
    int nterms = nterms_dist(rng);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> exps(nvars);
        for (auto& e : exps) e = exp_dist(rng);
        terms.push_back({regseq::Monomial(nvars, exps), mpq_class(coef_dist(rng))});
    }
    return regseq::Polynomial::from_terms(nvars, std::move(terms));
}

// Random homogeneous polynomial of the given degree, nonzero.
inline regseq::Polynomial rand_homog(std::mt19937& rng, int nvars, int degree) {
    auto monos = regseq::monomials_of_degree(nvars, degree);
    std::uniform_int_distribution<int> coef_dist(-5, 5);
    for (;;) {
        std::vector<regseq::Term> terms;
        for (const auto& m : monos) {
            int c = coef_dist(rng);
            if (c != 0) terms.push_back({m, mpq_class(c)});
        }
        auto f = regseq::Polynomial::from_terms(nvars, std::move(terms));
        if (!f.is_zero()) return f;
    }
}

}  // namespace testutil
