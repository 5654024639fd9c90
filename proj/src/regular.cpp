#include "regseq/regular.hpp"

#include <numeric>
#include <stdexcept>

namespace regseq {

namespace {

std::vector<int> generator_degrees(const std::vector<Polynomial>& gens, int nvars) {
    if (gens.empty()) throw std::invalid_argument("is_regular_sequence: empty tuple");
    if (static_cast<int>(gens.size()) > nvars) {
        throw std::invalid_argument("is_regular_sequence: more forms than variables");
    }
    std::vector<int> degs;
    degs.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("is_regular_sequence: variable count mismatch");
        }
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) {
            throw std::invalid_argument(
                "is_regular_sequence: generators must be homogeneous of positive degree");
        }
        degs.push_back(g.degree());
    }
    return degs;
}

// Exact HF values against the CI expansion, degree by degree with an early
// stop: any single mismatched coefficient already refutes series equality, so
// the scan never pays for degrees past the first divergence.
std::optional<RegWitness> scan_divergence(const std::vector<Polynomial>& gens, int nvars,
                                          const std::vector<long long>& civ, int upto) {
    for (int d = 1; d <= upto; ++d) {
        long long hf = hf_single_degree(gens, nvars, d);
        if (hf != civ[d]) return RegWitness{d, hf, civ[d]};
    }
    return std::nullopt;
}

// Witness from exact series: lowest divergent expansion coefficient, read off
// the numerator difference over the common denominator (1-z)^nvars.
std::optional<RegWitness> series_divergence(const HilbertSeries& hs, const HilbertSeries& ci,
                                            int nvars) {
    std::vector<mpz_class> a = hs.numerator_at(nvars);
    std::vector<mpz_class> b = ci.numerator_at(nvars);
    size_t len = std::max(a.size(), b.size());
    for (size_t d = 0; d < len; ++d) {
        mpz_class av = d < a.size() ? a[d] : mpz_class(0);
        mpz_class bv = d < b.size() ? b[d] : mpz_class(0);
        if (av != bv) {
            int deg = static_cast<int>(d);
            return RegWitness{deg, hs.expand(deg)[deg], ci.expand(deg)[deg]};
        }
    }
    return std::nullopt;
}

void cross_check(bool regular, const std::vector<Polynomial>& gens, int nvars,
                 const std::vector<int>& degs, RegMethod method) {
    if (method == RegMethod::ci_series_equality) {
        // Independent route: exact ranks degree by degree against the series.
        HilbertSeries hs = hs_from_groebner(Ideal(gens));
        int upto = static_cast<int>(hs.numerator_at(nvars).size());
        for (int d : degs) upto = std::max(upto, d);
        std::vector<long long> by_rank = hf_linear_algebra(gens, nvars, upto);
        if (hs.expand(upto) != by_rank) {
            throw std::logic_error("is_regular_sequence: series and rank routes disagree");
        }
        if (regular != (hs == ci_series(degs, nvars))) {
            throw std::logic_error("is_regular_sequence: verification overturned the verdict");
        }
    } else {
        bool general = hs_from_groebner(Ideal(gens)) == ci_series(degs, nvars);
        if (general != regular) {
            throw std::logic_error("is_regular_sequence: fast path disagrees with series");
        }
    }
}

}  // namespace

const char* method_name(RegMethod m) {
    switch (m) {
        case RegMethod::ci_series_equality: return "ci-series-equality";
        case RegMethod::artinian_socle_certificate: return "artinian-socle-certificate";
        case RegMethod::gcd_pair: return "gcd-pair";
    }
    return "";
}

RegSeqVerdict is_regular_sequence(const std::vector<Polynomial>& gens, int nvars, bool verify) {
    std::vector<int> degs = generator_degrees(gens, nvars);
    int k = static_cast<int>(gens.size());
    HilbertSeries ci = ci_series(degs, nvars);

    RegSeqVerdict v;
    if (k == nvars) {
        // Artinian socle certificate: for n forms in n variables the quotient
        // is a complete intersection iff it vanishes past the socle degree.
        v.method = RegMethod::artinian_socle_certificate;
        int socle = std::accumulate(degs.begin(), degs.end(), 0) - nvars;
        // Agreement with the CI table through socle+1 forces HF there to 0,
        // the Artinian certificate; a divergence anywhere refutes regularity.
        v.witness = scan_divergence(gens, nvars, ci.expand(socle + 1), socle + 1);
        v.regular = !v.witness.has_value();
    } else if (k == 2) {
        // Pair criterion: gcd(f1, f2) is constant iff the only syzygy is the
        // Koszul one in degree d1+d2, so the graded pieces below that degree
        // match the complete intersection exactly.
        v.method = RegMethod::gcd_pair;
        int top = degs[0] + degs[1] - 1;
        v.witness = scan_divergence(gens, nvars, ci.expand(top), top);
        v.regular = !v.witness.has_value();
    } else {
        v.method = RegMethod::ci_series_equality;
        HilbertSeries hs = hs_from_groebner(Ideal(gens));
        v.regular = hs == ci;
        if (!v.regular) {
            v.witness = series_divergence(hs, ci, nvars);
            if (!v.witness) {
                throw std::logic_error("is_regular_sequence: unequal series without divergence");
            }
        }
    }

    if (k == 3) {
        bool member = is_member(gens[2], Ideal({gens[0], gens[1]}));
        v.case_label = member ? 3 : (v.regular ? 1 : 2);
    }

    if (verify) {
        cross_check(v.regular, gens, nvars, degs, v.method);
        v.verified = true;
    }
    return v;
}

int classify_triple(const Polynomial& fi, const Polynomial& fj, const Polynomial& fk) {
    int nvars = fi.nvars();
    RegSeqVerdict v = is_regular_sequence({fi, fj, fk}, nvars);
    return *v.case_label;
}

}  // namespace regseq
