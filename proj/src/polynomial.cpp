#include "regseq/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace regseq {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::grevlex();
    return ord;
}

bool term_before(const Term& a, const Term& b) {
    return order_compare(a.m, b.m, canonical_order()) > 0;
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
}

}  // namespace

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.m.nvars() != nvars) throw std::invalid_argument("variable count mismatch");
    std::sort(terms.begin(), terms.end(), term_before);
    Polynomial r(nvars);
    for (Term& t : terms) {
        if (t.c == 0) continue;
        if (!r.terms_.empty() && r.terms_.back().m == t.m)
            r.terms_.back().c += t.c;
        else
            r.terms_.push_back(std::move(t));
        if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
    }
    return r;
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.m.degree() != terms_[0].m.degree()) return false;
    return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    std::vector<Term> out;
    out.reserve(f.num_terms() + g.num_terms());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae && b != be) {
        const int cmp = order_compare(a->m, b->m, canonical_order());
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            out.push_back(*b++);
        } else {
            mpq_class c = a->c + b->c;
            if (c != 0) out.push_back({a->m, std::move(c)});
            ++a, ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial neg(const Polynomial& f) { return scale(f, mpq_class(-1)); }

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, neg(g)); }

Polynomial scale(const Polynomial& f, const mpq_class& c) {
    if (c == 0) return Polynomial(f.nvars());
    std::vector<Term> out = f.terms();
    for (Term& t : out) t.c *= c;
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial mul_term(const Polynomial& f, const mpq_class& c, const Monomial& m) {
    if (c == 0) return Polynomial(f.nvars());
    std::vector<Term> out;
    out.reserve(f.num_terms());
    for (const Term& t : f.terms()) out.push_back({mul(t.m, m), t.c * c});
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g);
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    acc.reserve(f.num_terms() + g.num_terms());
    for (const Term& a : f.terms())
        for (const Term& b : g.terms()) acc[mul(a.m, b.m)] += a.c * b.c;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial pow(const Polynomial& f, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r(f.nvars(), mpq_class(1));
    Polynomial base = f;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

std::pair<Monomial, mpq_class> leading_term(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
    const Term* best = &f.terms()[0];
    for (const Term& t : f.terms())
        if (order_compare(t.m, best->m, ord) > 0) best = &t;
    return {best->m, best->c};
}

mpq_class evaluate(const Polynomial& f, const std::vector<mpq_class>& point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw std::invalid_argument("point length mismatch");
    mpq_class total = 0;
    for (const Term& t : f.terms()) {
        mpq_class v = t.c;
        for (int i = 0; i < f.nvars(); ++i)
            for (int j = 0; j < t.m[i]; ++j) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial apply_permutation(const Polynomial& f, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != f.nvars())
        throw std::invalid_argument("permutation length mismatch");
    std::vector<Term> out;
    out.reserve(f.num_terms());
    for (const Term& t : f.terms()) {
        std::vector<int> e(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) e[perm[i]] = t.m[i];
        out.push_back({Monomial(f.nvars(), e), t.c});
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

}  // namespace regseq
