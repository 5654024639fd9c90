#include "regseq/symfun.hpp"

#include <numeric>

namespace regseq {

namespace {

// all exponent vectors of total degree m, n slots, nonincreasing slot bound
void enumerate_h(int n, int m, int slot, std::vector<int>& exps, std::vector<Term>& out) {
    if (slot == n - 1) {
        exps[slot] = m;
        out.push_back({Monomial(n, exps), mpq_class(1)});
        return;
    }
    for (int k = m; k >= 0; --k) {
        exps[slot] = k;
        enumerate_h(n, m - k, slot + 1, exps, out);
    }
    exps[slot] = 0;
}

void enumerate_e(int n, int m, int next, std::vector<int>& exps, std::vector<Term>& out) {
    if (m == 0) {
        out.push_back({Monomial(n, exps), mpq_class(1)});
        return;
    }
    if (n - next < m) return;
    for (int i = next; i <= n - m; ++i) {
        exps[i] = 1;
        enumerate_e(n, m - 1, i + 1, exps, out);
        exps[i] = 0;
    }
}

}  // namespace

Polynomial generate(SymKind kind, int m, int n) {
    if (n < 1 || n > max_vars) throw std::invalid_argument("variable count out of range");
    if (m < 0) throw std::invalid_argument("negative degree");
    if (m == 0) return Polynomial(n, mpq_class(kind == SymKind::P ? n : 1));
    std::vector<Term> terms;
    std::vector<int> exps(n, 0);
    switch (kind) {
        case SymKind::P:
            for (int i = 0; i < n; ++i) {
                exps.assign(n, 0);
                exps[i] = m;
                terms.push_back({Monomial(n, exps), mpq_class(1)});
            }
            break;
        case SymKind::H:
            enumerate_h(n, m, 0, exps, terms);
            break;
        case SymKind::E:
            if (m > n) return Polynomial(n);
            enumerate_e(n, m, 0, exps, terms);
            break;
    }
    return Polynomial::from_terms(n, std::move(terms));
}

bool is_symmetric(const Polynomial& f) {
    const int n = f.nvars();
    if (n <= 1) return true;
    std::vector<int> swap01(n), cyc(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return apply_permutation(f, swap01) == f && apply_permutation(f, cyc) == f;
}

NewtonVerdict verify_newton(int n, int upto) {
    if (n < 1 || upto < 1) throw std::invalid_argument("bad verify_newton arguments");
    for (int k = 1; k <= upto; ++k) {
        Polynomial lhs = scale(generate(SymKind::E, k, n), mpq_class(k));
        Polynomial rhs(n);
        for (int i = 1; i <= k; ++i) {
            Polynomial prod = mul(generate(SymKind::E, k - i, n), generate(SymKind::P, i, n));
            rhs = add(rhs, i % 2 == 1 ? prod : neg(prod));
        }
        if (lhs != rhs) return {false, k};
        Polynomial alt(n);
        for (int i = 0; i <= k; ++i) {
            Polynomial prod = mul(generate(SymKind::E, i, n), generate(SymKind::H, k - i, n));
            alt = add(alt, i % 2 == 0 ? prod : neg(prod));
        }
        if (!alt.is_zero()) return {false, k};
    }
    return {true, -1};
}

EPolynomial to_elementary(const Polynomial& f) {
    if (!is_symmetric(f)) throw std::invalid_argument("polynomial is not symmetric");
    const int n = f.nvars();
    const MonomialOrder lex = MonomialOrder::lex();
    Polynomial rest = f;
    std::vector<Term> eterms;
    while (!rest.is_zero()) {
        auto [lm, lc] = leading_term(rest, lex);
        // symmetric: lex leading exponents are nonincreasing
        std::vector<int> ee(n, 0);
        for (int i = 0; i < n; ++i) {
            int next = i + 1 < n ? lm[i + 1] : 0;
            if (lm[i] < next) throw std::logic_error("leading exponents not a partition");
            ee[i] = lm[i] - next;
        }
        Monomial emono(n, ee);
        Polynomial image(n, mpq_class(1));
        for (int i = 0; i < n; ++i)
            if (ee[i] > 0) image = mul(image, pow(generate(SymKind::E, i + 1, n), ee[i]));
        rest = sub(rest, scale(image, lc));
        if (!rest.is_zero() && order_compare(leading_term(rest, lex).first, lm, lex) >= 0)
            throw std::logic_error("leading term did not decrease");
        eterms.push_back({emono, lc});
    }
    return EPolynomial::from_terms(n, std::move(eterms));
}

Polynomial expand_elementary(const EPolynomial& g, int n) {
    if (n < 1 || n > max_vars) throw std::invalid_argument("variable count out of range");
    if (g.nvars() > n) {
        // referencing e_i with i > n is only an error if such a term exists
        for (const Term& t : g.terms())
            for (int i = n; i < g.nvars(); ++i)
                if (t.m[i] > 0) throw std::invalid_argument("reference to e_i beyond variable count");
    }
    Polynomial out(n);
    for (const Term& t : g.terms()) {
        Polynomial prod(n, t.c);
        for (int i = 0; i < std::min(g.nvars(), n); ++i)
            if (t.m[i] > 0) prod = mul(prod, pow(generate(SymKind::E, i + 1, n), t.m[i]));
        out = add(out, prod);
    }
    return out;
}

}  // namespace regseq
