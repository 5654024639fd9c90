#include "regseq/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "regseq/linalg.hpp"

namespace regseq {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense by degree

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a - z^s * b
ZPoly zp_sub_shifted(const ZPoly& a, const ZPoly& b, int s) {
    ZPoly r = a;
    if (r.size() < b.size() + s) r.resize(b.size() + s, mpz_class(0));
    for (size_t j = 0; j < b.size(); ++j) r[j + s] -= b[j];
    trim(r);
    return r;
}

ZPoly one_minus_z_pow(int d) {
    ZPoly r(d + 1, mpz_class(0));
    r[0] = 1;
    r[d] = -1;
    return r;
}

mpz_class eval_at_one(const ZPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Exact quotient p / (1 - z); requires p(1) == 0.
ZPoly divide_one_minus_z(const ZPoly& p) {
    ZPoly q;
    if (p.empty()) return q;
    q.resize(p.size() - 1);
    mpz_class run = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        run += p[i];
        q[i] = run;
    }
    trim(q);
    return q;
}

void drop_redundant(std::vector<Monomial>& gens) {
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool covered = false;
        for (const auto& k : kept) {
            if (divides(k, m)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            kept.erase(std::remove_if(kept.begin(), kept.end(),
                                      [&](const Monomial& k) { return divides(m, k); }),
                       kept.end());
            kept.push_back(m);
        }
    }
    gens = std::move(kept);
}

std::vector<int> memo_key(const std::vector<Monomial>& gens, int nvars) {
    std::vector<int> key;
    key.reserve(gens.size() * nvars);
    for (const auto& m : gens) {
        for (int i = 0; i < nvars; ++i) key.push_back(m[i]);
    }
    return key;
}

// Numerator of the Hilbert series of S/(gens) over (1-z)^nvars for a monomial
// ideal, by the colon recursion on the largest generator.
ZPoly monomial_numerator(std::vector<Monomial> gens, int nvars,
                         std::map<std::vector<int>, ZPoly>& memo) {
    drop_redundant(gens);
    if (gens.empty()) return {mpz_class(1)};
    std::sort(gens.begin(), gens.end(), [nvars](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i < nvars; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    if (gens.front().degree() == 0) return {};  // contains 1, quotient is zero
    auto key = memo_key(gens, nvars);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    ZPoly result;
    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
        }
    }
    if (pairwise_coprime) {
        result = {mpz_class(1)};
        for (const auto& m : gens) result = zp_mul(result, one_minus_z_pow(m.degree()));
    } else {
        Monomial m = gens.back();  // largest degree, ties broken by the sort
        std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
        std::vector<Monomial> colon;
        colon.reserve(rest.size());
        for (const auto& g : rest) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = std::max(0, g[i] - m[i]);
            colon.emplace_back(nvars, e);
        }
        ZPoly a = monomial_numerator(rest, nvars, memo);
        ZPoly b = monomial_numerator(std::move(colon), nvars, memo);
        result = zp_sub_shifted(a, b, m.degree());
    }
    memo.emplace(std::move(key), result);
    return result;
}

mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long to_ll(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("Hilbert value exceeds long long");
    return v.get_si();
}

}  // namespace

void HilbertSeries::cancel() {
    trim(num);
    if (num.empty()) {
        den_exp = 0;
        return;
    }
    while (den_exp > 0 && eval_at_one(num) == 0) {
        num = divide_one_minus_z(num);
        --den_exp;
        if (num.empty()) {
            den_exp = 0;
            return;
        }
    }
}

std::vector<long long> HilbertSeries::expand(int upto) const {
    if (upto < 0) throw std::invalid_argument("expand: negative degree");
    std::vector<long long> out(upto + 1, 0);
    for (int d = 0; d <= upto; ++d) {
        mpz_class acc = 0;
        for (size_t j = 0; j < num.size() && static_cast<int>(j) <= d; ++j) {
            if (den_exp == 0) {
                if (static_cast<int>(j) == d) acc += num[j];
            } else {
                acc += num[j] * binom(den_exp - 1 + d - static_cast<int>(j), den_exp - 1);
            }
        }
        out[d] = to_ll(acc);
    }
    return out;
}

std::vector<mpz_class> HilbertSeries::numerator_at(int e) const {
    if (e < 0) throw std::invalid_argument("numerator_at: negative exponent");
    ZPoly n = num;
    int cur = den_exp;
    while (cur < e) {
        n = zp_mul(n, one_minus_z_pow(1));
        ++cur;
    }
    while (cur > e) {
        if (eval_at_one(n) != 0) {
            throw std::invalid_argument("numerator_at: series has a pole past that exponent");
        }
        n = divide_one_minus_z(n);
        --cur;
    }
    return n;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    HilbertSeries a = *this;
    HilbertSeries b = o;
    a.cancel();
    b.cancel();
    return a.den_exp == b.den_exp && a.num == b.num;
}

HilbertSeries ci_series(const std::vector<int>& degs, int nvars) {
    if (nvars < 1) throw std::invalid_argument("ci_series: variable count must be positive");
    if (static_cast<int>(degs.size()) > nvars) {
        throw std::invalid_argument("ci_series: more degrees than variables");
    }
    HilbertSeries s;
    s.num = {mpz_class(1)};
    s.den_exp = nvars;
    for (int d : degs) {
        if (d < 1) throw std::invalid_argument("ci_series: degrees must be positive");
        s.num = zp_mul(s.num, one_minus_z_pow(d));
    }
    s.cancel();
    return s;
}

HilbertSeries hs_from_groebner(const Ideal& I) { return hs_from_groebner(I.basis(), I.nvars()); }

HilbertSeries hs_from_groebner(const GroebnerBasis& gb, int nvars) {
    if (!gb.complete) {
        throw std::invalid_argument("hs_from_groebner: truncated basis has no exact series");
    }
    std::vector<Monomial> lts;
    lts.reserve(gb.elems.size());
    for (const auto& g : gb.elems) {
        if (g.is_zero()) continue;
        lts.push_back(leading_term(g, gb.order).first);
    }
    std::map<std::vector<int>, ZPoly> memo;
    HilbertSeries s;
    s.num = monomial_numerator(std::move(lts), nvars, memo);
    s.den_exp = nvars;
    s.cancel();
    return s;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    // Lexicographic descent on exponents of x1, x2, ... in order.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[var] = left;
            out.emplace_back(nvars, e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[var] = k;
            self(self, var + 1, left - k);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0, std::vector<int>{});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

long long ring_dimension(int nvars, int d) {
    if (d < 0) return 0;
    return to_ll(binom(nvars - 1 + d, nvars - 1));
}

namespace {

// Integer copies with denominators cleared; scaling a row keeps its span.
struct IGen {
    int deg;
    std::vector<Monomial> mono;
    std::vector<mpz_class> coef;
};

std::vector<IGen> integer_generators(const std::vector<Polynomial>& gens, int nvars) {
    for (const auto& g : gens) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("hf_linear_algebra: variable count mismatch");
        }
        if (!g.is_homogeneous()) {
            throw std::invalid_argument("hf_linear_algebra: generators must be homogeneous");
        }
    }
    std::vector<IGen> igens;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        IGen ig;
        ig.deg = g.degree();
        mpz_class den = 1;
        for (const auto& t : g.terms()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
        }
        for (const auto& t : g.terms()) {
            ig.mono.push_back(t.m);
            mpq_class scaled = t.c * den;
            ig.coef.push_back(scaled.get_num());
        }
        igens.push_back(std::move(ig));
    }
    return igens;
}

long long hf_one_degree(const std::vector<IGen>& igens, int nvars, int d) {
    std::vector<Monomial> cols = monomials_of_degree(nvars, d);
    std::unordered_map<Monomial, int, MonomialHash> col_index;
    col_index.reserve(cols.size() * 2);
    for (size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], static_cast<int>(i));
    IntegerEchelon ech;
    for (const auto& g : igens) {
        if (g.deg > d) continue;
        for (const auto& shift : monomials_of_degree(nvars, d - g.deg)) {
            SparseRow row;
            row.reserve(g.mono.size());
            for (size_t i = 0; i < g.mono.size(); ++i) {
                row.push_back({col_index.at(mul(shift, g.mono[i])), g.coef[i]});
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.add_row(std::move(row));
        }
    }
    return static_cast<long long>(cols.size()) - ech.rank();
}

}  // namespace

std::vector<long long> hf_linear_algebra(const std::vector<Polynomial>& gens, int nvars,
                                         int upto) {
    if (upto < 0) throw std::invalid_argument("hf_linear_algebra: negative degree");
    std::vector<IGen> igens = integer_generators(gens, nvars);
    std::vector<long long> out(upto + 1, 0);
    for (int d = 0; d <= upto; ++d) out[d] = hf_one_degree(igens, nvars, d);
    return out;
}

long long hf_single_degree(const std::vector<Polynomial>& gens, int nvars, int d) {
    if (d < 0) throw std::invalid_argument("hf_single_degree: negative degree");
    return hf_one_degree(integer_generators(gens, nvars), nvars, d);
}

}  // namespace regseq
