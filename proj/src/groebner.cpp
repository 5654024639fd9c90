#include "regseq/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace regseq {

namespace {

// Integer-primitive working form: parallel arrays sorted descending under the
// active order, no zero coefficients, positive leading coefficient.
struct IPoly {
    std::vector<Monomial> mono;
    std::vector<mpz_class> coef;

    bool zero() const { return mono.empty(); }
    const Monomial& lm() const { return mono.front(); }
    const mpz_class& lc() const { return coef.front(); }
    int degree() const { return mono.empty() ? -1 : mono.front().degree(); }
};

void make_primitive(IPoly& f) {
    if (f.mono.empty()) return;
    mpz_class g = 0;
    for (const auto& c : f.coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    bool flip = f.coef.front() < 0;
    if (flip) g = -g;
    if (g != 1) {
        for (auto& c : f.coef) c /= g;
    }
}

// Clears denominators and content; returns the exact scalar s with
// result == s * f, for callers that track scale. Result is primitive.
IPoly to_ipoly(const Polynomial& f, const MonomialOrder& ord, mpq_class* scale_out = nullptr) {
    std::vector<std::pair<Monomial, mpq_class>> ts;
    ts.reserve(f.num_terms());
    for (const auto& t : f.terms()) ts.push_back({t.m, t.c});
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return order_compare(a.first, b.first, ord) > 0;
    });
    mpz_class den = 1;
    for (const auto& [m, c] : ts) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    IPoly r;
    r.mono.reserve(ts.size());
    r.coef.reserve(ts.size());
    for (const auto& [m, c] : ts) {
        r.mono.push_back(m);
        mpq_class scaled = c * den;
        r.coef.push_back(scaled.get_num());
    }
    mpz_class content = 0;
    for (const auto& c : r.coef) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1) break;
    }
    if (content == 0) content = 1;
    if (!r.coef.empty() && r.coef.front() < 0) content = -content;
    if (content != 1) {
        for (auto& c : r.coef) c /= content;
    }
    if (scale_out) {
        *scale_out = mpq_class(den) / mpq_class(content);
    }
    return r;
}

Polynomial to_polynomial(const IPoly& f, int nvars, const mpq_class& divide_by) {
    std::vector<Term> ts;
    ts.reserve(f.mono.size());
    for (size_t i = 0; i < f.mono.size(); ++i) {
        ts.push_back({f.mono[i], mpq_class(f.coef[i]) / divide_by});
    }
    return Polynomial::from_terms(nvars, std::move(ts));
}

// r <- a*r - b*(m * g), merged in one pass. Preserves descending order.
IPoly combine(const IPoly& r, const mpz_class& a, const mpz_class& b, const Monomial& m,
              const IPoly& g, const MonomialOrder& ord) {
    IPoly out;
    out.mono.reserve(r.mono.size() + g.mono.size());
    out.coef.reserve(r.mono.size() + g.mono.size());
    size_t i = 0, j = 0;
    while (i < r.mono.size() || j < g.mono.size()) {
        if (j == g.mono.size()) {
            out.mono.push_back(r.mono[i]);
            out.coef.push_back(a * r.coef[i]);
            ++i;
            continue;
        }
        Monomial shifted = mul(m, g.mono[j]);
        if (i == r.mono.size()) {
            out.mono.push_back(shifted);
            out.coef.push_back(-b * g.coef[j]);
            ++j;
            continue;
        }
        int cmp = order_compare(r.mono[i], shifted, ord);
        if (cmp > 0) {
            out.mono.push_back(r.mono[i]);
            out.coef.push_back(a * r.coef[i]);
            ++i;
        } else if (cmp < 0) {
            out.mono.push_back(shifted);
            out.coef.push_back(-b * g.coef[j]);
            ++j;
        } else {
            mpz_class c = a * r.coef[i] - b * g.coef[j];
            if (c != 0) {
                out.mono.push_back(r.mono[i]);
                out.coef.push_back(std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

// Full normal form of f against basis, first-divisor reducer selection.
// Tracks the accumulated scalar multiplier when scale is non-null:
// on return, result == (*scale) * f  modulo the span of basis.
IPoly reduce_full(IPoly f, const std::vector<IPoly>& basis, const MonomialOrder& ord,
                  mpq_class* scale = nullptr) {
    size_t pos = 0;
    while (pos < f.mono.size()) {
        const Monomial& t = f.mono[pos];
        const IPoly* red = nullptr;
        for (const auto& g : basis) {
            if (!g.zero() && divides(g.lm(), t)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            ++pos;
            continue;
        }
        mpz_class gamma;
        mpz_gcd(gamma.get_mpz_t(), f.coef[pos].get_mpz_t(), red->lc().get_mpz_t());
        mpz_class a = red->lc() / gamma;
        mpz_class b = f.coef[pos] / gamma;
        Monomial shift = quotient(t, red->lm());
        f = combine(f, a, b, shift, *red, ord);
        if (scale) *scale *= mpq_class(a);
        mpz_class content = 0;
        for (const auto& c : f.coef) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            if (content == 1) break;
        }
        if (content > 1) {
            for (auto& c : f.coef) c /= content;
            if (scale) *scale /= mpq_class(content);
        }
    }
    return f;
}

IPoly s_polynomial(const IPoly& f, const IPoly& g, const MonomialOrder& ord) {
    Monomial L = lcm(f.lm(), g.lm());
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    mpz_class cf = g.lc() / gamma;
    mpz_class cg = f.lc() / gamma;
    IPoly uf;
    Monomial mf = quotient(L, f.lm());
    uf.mono.reserve(f.mono.size());
    uf.coef.reserve(f.mono.size());
    for (size_t i = 0; i < f.mono.size(); ++i) {
        uf.mono.push_back(mul(mf, f.mono[i]));
        uf.coef.push_back(cf * f.coef[i]);
    }
    Monomial mg = quotient(L, g.lm());
    IPoly s = combine(uf, 1, cg, mg, g, ord);
    make_primitive(s);
    return s;
}

struct PairKey {
    int deg;
    int i;
    int j;
    bool operator<(const PairKey& o) const {
        return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    int nvars = gens.front().nvars();
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("buchberger: mixed variable counts");
        if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    }
    bool truncated = opts.cutoff >= 0;
    if (truncated) {
        for (const auto& g : gens) {
            if (!g.is_homogeneous()) {
                throw std::invalid_argument(
                    "buchberger: degree cutoff requires homogeneous generators");
            }
        }
    }

    std::vector<IPoly> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(to_ipoly(g, ord));
    }

    std::set<PairKey> pending;
    std::set<std::pair<int, int>> settled;  // popped or criterion-dropped
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            PairKey key{lcm(G[i].lm(), G[k].lm()).degree(), i, k};
            pending.insert(key);
        }
    };
    for (size_t k = 1; k < G.size(); ++k) push_pairs(static_cast<int>(k));

    bool hit_cutoff = false;
    while (!pending.empty()) {
        PairKey key = *pending.begin();
        if (truncated && key.deg > opts.cutoff) {
            hit_cutoff = true;
            break;
        }
        pending.erase(pending.begin());
        settled.insert({key.i, key.j});
        const IPoly& fi = G[key.i];
        const IPoly& fj = G[key.j];
        if (coprime(fi.lm(), fj.lm())) continue;  // product criterion
        Monomial L = lcm(fi.lm(), fj.lm());
        bool chained = false;
        for (int k = 0; k < static_cast<int>(G.size()); ++k) {
            if (k == key.i || k == key.j || G[k].zero()) continue;
            if (!divides(G[k].lm(), L)) continue;
            auto ik = std::minmax(key.i, k);
            auto jk = std::minmax(key.j, k);
            if (settled.count({ik.first, ik.second}) && settled.count({jk.first, jk.second})) {
                chained = true;
                break;
            }
        }
        if (chained) continue;
        IPoly s = s_polynomial(fi, fj, ord);
        IPoly r = reduce_full(std::move(s), G, ord);
        if (r.zero()) continue;
        make_primitive(r);
        G.push_back(std::move(r));
        push_pairs(static_cast<int>(G.size()) - 1);
    }

    // Minimal basis: drop any element whose leading monomial is divisible by
    // another kept one. Process in (degree, leading monomial) order so ties
    // resolve deterministically.
    std::vector<int> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int da = G[a].lm().degree(), db = G[b].lm().degree();
        if (da != db) return da < db;
        return order_compare(G[a].lm(), G[b].lm(), ord) < 0;
    });
    std::vector<IPoly> kept;
    for (int i : idx) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (divides(k.lm(), G[i].lm())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(G[i]);
    }

    // Tail reduction: each element fully reduced against the others. Leading
    // terms are untouched because the kept set has pairwise non-divisible
    // leading monomials.
    std::vector<IPoly> reduced = kept;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<IPoly> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j) {
            if (j != i) others.push_back(kept[j]);
        }
        IPoly r = reduce_full(kept[i], others, ord);
        make_primitive(r);
        reduced[i] = std::move(r);
    }

    GroebnerBasis out;
    out.order = ord;
    out.complete = !hit_cutoff;
    out.valid_upto = hit_cutoff ? opts.cutoff : std::numeric_limits<int>::max();
    out.elems.reserve(reduced.size());
    for (const auto& g : reduced) {
        out.elems.push_back(to_polynomial(g, nvars, mpq_class(g.lc())));
    }
    return out;
}

struct Ideal::Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
    std::vector<IPoly> fast;  // primitive integer copies for reduction
};

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder ord)
    : gens_(std::move(gens)), ord_(ord), cache_(std::make_shared<Cache>()) {
    if (gens_.empty()) throw std::invalid_argument("Ideal: empty generator list");
    nvars_ = gens_.front().nvars();
    for (const auto& g : gens_) {
        if (g.nvars() != nvars_) throw std::invalid_argument("Ideal: mixed variable counts");
        if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
    }
}

const GroebnerBasis& Ideal::basis() const {
    std::call_once(cache_->once, [this] {
        cache_->gb = buchberger(gens_, ord_);
        cache_->fast.reserve(cache_->gb->elems.size());
        for (const auto& g : cache_->gb->elems) {
            cache_->fast.push_back(to_ipoly(g, ord_));
        }
    });
    return *cache_->gb;
}

namespace {

Polynomial normal_form_impl(const Polynomial& f, const std::vector<IPoly>& basis,
                            const MonomialOrder& ord, bool complete, int valid_upto) {
    if (f.is_zero()) return f;
    if (!complete && f.degree() > valid_upto) {
        throw std::runtime_error("normal_form: basis truncated at degree " +
                                 std::to_string(valid_upto) + " cannot decide degree " +
                                 std::to_string(f.degree()));
    }
    mpq_class scale;
    IPoly fi = to_ipoly(f, ord, &scale);
    IPoly r = reduce_full(std::move(fi), basis, ord, &scale);
    // r == scale * NF(f), so divide back out.
    return to_polynomial(r, f.nvars(), scale);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
    if (f.nvars() != I.nvars()) throw std::invalid_argument("normal_form: variable count mismatch");
    const GroebnerBasis& gb = I.basis();  // also fills the integer copies
    return normal_form_impl(f, I.cache_->fast, gb.order, gb.complete, gb.valid_upto);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.elems.empty() && f.nvars() != gb.elems.front().nvars()) {
        throw std::invalid_argument("normal_form: variable count mismatch");
    }
    std::vector<IPoly> fast;
    fast.reserve(gb.elems.size());
    for (const auto& g : gb.elems) fast.push_back(to_ipoly(g, gb.order));
    return normal_form_impl(f, fast, gb.order, gb.complete, gb.valid_upto);
}

bool is_member(const Polynomial& f, const Ideal& I) {
    return normal_form(f, I).is_zero();
}

}  // namespace regseq
