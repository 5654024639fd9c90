#include "regseq/prime.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "regseq/cyclotomic.hpp"

namespace regseq {

namespace {

// Scale to integer coefficients, content 1, positive leading coefficient.
// Vanishing loci and ideal membership are unchanged by the scaling.
Polynomial normalize_content(const Polynomial& f) {
    if (f.is_zero()) return f;
    mpz_class den = 1;
    for (const auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    mpz_class content = 0;
    for (const auto& t : f.terms()) {
        mpq_class scaled = t.c * den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num().get_mpz_t());
    }
    auto [lm, lc] = leading_term(f, MonomialOrder::grevlex());
    if (lc < 0) content = -content;
    return scale(f, mpq_class(den) / mpq_class(content));
}

int parity_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inv;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<Polynomial> minor_list(const std::vector<Polynomial>& gens, int nvars) {
    int m = static_cast<int>(gens.size());
    if (m == 0) throw std::invalid_argument("jacobian minors: empty generator list");
    if (m >= nvars) {
        throw std::invalid_argument("jacobian minors: need fewer generators than variables");
    }
    for (const auto& g : gens) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("jacobian minors: variable count mismatch");
        }
    }
    std::vector<std::vector<Polynomial>> jac(m);
    for (int r = 0; r < m; ++r) {
        for (int v = 0; v < nvars; ++v) jac[r].push_back(derivative(gens[r], v));
    }

    std::vector<Polynomial> minors;
    std::vector<int> cols(m);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        Polynomial det(nvars);
        do {
            Polynomial term(nvars, mpq_class(parity_sign(perm)));
            for (int r = 0; r < m; ++r) term = mul(term, jac[r][cols[perm[r]]]);
            det = add(det, term);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!det.is_zero()) minors.push_back(normalize_content(det));

        // next column combination
        int i = m - 1;
        while (i >= 0 && cols[i] == nvars - m + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
    }
    return minors;
}

using ZPoly = std::vector<mpz_class>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// If every minor is a two-term difference of pure powers x_j^c - x_i^c with a
// common c, coordinate ratios at singular points are c-th roots of unity.
// Otherwise the forced ratio is 1.
int ratio_root_order(const std::vector<Polynomial>& minors) {
    int c = 0;
    for (const auto& f : minors) {
        if (f.num_terms() != 2) return 1;
        int exps[2] = {0, 0};
        int vars[2] = {-1, -1};
        mpq_class coefs[2];
        for (int t = 0; t < 2; ++t) {
            const Term& term = f.terms()[t];
            coefs[t] = term.c;
            for (int v = 0; v < f.nvars(); ++v) {
                if (term.m[v] > 0) {
                    if (vars[t] >= 0) return 1;  // more than one variable
                    vars[t] = v;
                    exps[t] = term.m[v];
                }
            }
            if (vars[t] < 0) return 1;  // constant term
        }
        if (vars[0] == vars[1] || exps[0] != exps[1]) return 1;
        if (coefs[0] + coefs[1] != 0) return 1;
        if (c == 0) {
            c = exps[0];
        } else if (c != exps[0]) {
            return 1;
        }
    }
    return c == 0 ? 1 : c;
}

struct IntPoly {
    std::vector<Monomial> mono;
    std::vector<mpz_class> coef;
};

IntPoly integerize(const Polynomial& f) {
    IntPoly r;
    mpz_class den = 1;
    for (const auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    for (const auto& t : f.terms()) {
        r.mono.push_back(t.m);
        mpq_class scaled = t.c * den;
        r.coef.push_back(scaled.get_num());
    }
    return r;
}

// Exact evaluation in Z[x]/Phi_r at coordinates that are zero or x^k.
bool vanishes_at(const IntPoly& f, const std::vector<int>& coord_exp, int r) {
    ZPoly acc;
    for (size_t t = 0; t < f.mono.size(); ++t) {
        bool zero_factor = false;
        int exp_sum = 0;
        for (size_t v = 0; v < coord_exp.size(); ++v) {
            int e = f.mono[t][static_cast<int>(v)];
            if (e == 0) continue;
            if (coord_exp[v] < 0) {
                zero_factor = true;
                break;
            }
            exp_sum = (exp_sum + coord_exp[v] * e) % r;
        }
        if (zero_factor) continue;
        if (static_cast<int>(acc.size()) <= exp_sum) acc.resize(exp_sum + 1, mpz_class(0));
        acc[exp_sum] += f.coef[t];
    }
    return mod_cyclotomic(std::move(acc), r).empty();
}

}  // namespace

Polynomial derivative(const Polynomial& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("derivative: variable index");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        int e = t.m[var];
        if (e == 0) continue;
        std::vector<int> exps(f.nvars());
        for (int v = 0; v < f.nvars(); ++v) exps[v] = t.m[v];
        exps[var] -= 1;
        out.push_back({Monomial(f.nvars(), exps), t.c * e});
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Ideal jacobian_minors_ideal(const std::vector<Polynomial>& gens, int nvars) {
    std::vector<Polynomial> minors = minor_list(gens, nvars);
    if (minors.empty()) {
        throw std::invalid_argument("jacobian minors: all minors vanish identically");
    }
    return Ideal(std::move(minors));
}

int default_serre_cutoff(const std::vector<Polynomial>& gens, int nvars) {
    int total = 0;
    for (const auto& g : gens) total += std::max(0, g.degree());
    return 2 * total + nvars;
}

SerreReport serre_pipeline(const std::vector<Polynomial>& gens, int nvars, int cutoff,
                           const std::string& label) {
    if (cutoff < 1) throw std::invalid_argument("serre_pipeline: cutoff must be positive");
    SerreReport rep;
    rep.ideal = label;
    rep.cutoff = cutoff;

    RegSeqVerdict reg = is_regular_sequence(gens, nvars);
    rep.regular_sequence = reg.regular;

    std::vector<Polynomial> minors = minor_list(gens, nvars);
    rep.jacobian_minors = static_cast<int>(minors.size());

    std::vector<Polynomial> combined = gens;
    combined.insert(combined.end(), minors.begin(), minors.end());
    for (int d = 1; d <= cutoff; ++d) {
        if (hf_single_degree(combined, nvars, d) == 0) {
            rep.artinian_degree = d;
            break;
        }
    }

    rep.verdict = rep.regular_sequence && rep.artinian_degree ? "prime-certified" : "inconclusive";
    return rep;
}

bool zero_locus_probe(const std::vector<Polynomial>& gens, int nvars, int support) {
    if (support < 1 || support > nvars) {
        throw std::invalid_argument("zero_locus_probe: support must be in 1..nvars");
    }
    std::vector<Polynomial> minors = minor_list(gens, nvars);
    int r = ratio_root_order(minors);

    std::vector<IntPoly> checks;
    for (const auto& g : gens) checks.push_back(integerize(g));
    for (const auto& g : minors) checks.push_back(integerize(g));

    int max_classes = std::min(support, r);
    // Value classes are x^{k_1}, ..., x^{k_v} with k_1 = 0 (scale
    // normalization); blocks of coordinates take the class values in order,
    // remaining coordinates are zero (encoded as exponent -1).
    std::vector<int> class_exp;
    std::vector<int> beta;

    auto try_assignment = [&](int v) -> bool {  // true when a common zero appears
        std::vector<int> coord_exp(nvars, -1);
        int at = 0;
        for (int j = 0; j < v; ++j) {
            for (int b = 0; b < beta[j]; ++b) coord_exp[at++] = class_exp[j];
        }
        for (const auto& f : checks) {
            if (!vanishes_at(f, coord_exp, r)) return false;
        }
        return true;
    };

    auto compositions = [&](auto&& self, int v, int remaining, int slot) -> bool {
        if (slot == v) {
            return remaining == 0 ? try_assignment(v) : false;
        }
        for (int take = 1; take + (v - slot - 1) <= remaining; ++take) {
            beta[slot] = take;
            if (self(self, v, remaining - take, slot + 1)) return true;
        }
        return false;
    };

    auto exponent_sets = [&](auto&& self, int v, int next, int chosen) -> bool {
        if (chosen == v) {
            beta.assign(v, 0);
            for (int s = v; s <= nvars; ++s) {
                if (compositions(compositions, v, s, 0)) return true;
            }
            return false;
        }
        for (int k = next; k < r; ++k) {
            class_exp[chosen] = k;
            if (self(self, v, k + 1, chosen + 1)) return true;
        }
        return false;
    };

    for (int v = 1; v <= max_classes; ++v) {
        class_exp.assign(v, 0);
        // k_1 = 0 fixed; remaining exponents ascending from 1.
        if (exponent_sets(exponent_sets, v, 1, 1)) return false;
    }
    return true;
}

}  // namespace regseq
