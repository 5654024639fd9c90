#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regseq/hilbert.hpp"

namespace regseq {

enum class RegMethod { ci_series_equality, artinian_socle_certificate, gcd_pair };

const char* method_name(RegMethod m);  // "ci-series-equality" etc.

// First degree where HF(S/I) departs from the complete-intersection
// coefficient, with both values. Present exactly when the tuple fails.
struct RegWitness {
    int degree;
    long long hf;
    long long ci;
    bool operator==(const RegWitness& o) const {
        return degree == o.degree && hf == o.hf && ci == o.ci;
    }
};

struct RegSeqVerdict {
    bool regular = false;
    RegMethod method = RegMethod::ci_series_equality;
    std::optional<RegWitness> witness;    // engaged iff not regular
    std::optional<int> case_label;        // triples: 1, 2, or 3
    bool verified = false;                // general path cross-check ran
};

// Decides whether gens form a regular sequence. Fast paths: k = n uses the
// Artinian socle certificate (one graded piece), k = 2 uses the pair
// criterion (gcd of the two forms is constant iff no syzygy appears below
// degree d1+d2). Otherwise the full Hilbert series is compared against the
// complete-intersection series. verify = true re-derives the verdict along
// an independent route and throws std::logic_error on disagreement.
RegSeqVerdict is_regular_sequence(const std::vector<Polynomial>& gens, int nvars,
                                  bool verify = false);

// Three-case classification of an ordered triple: (1) last form outside the
// ideal of the first two and the triple regular, (2) outside and not
// regular, (3) a member, hence not regular.
int classify_triple(const Polynomial& fi, const Polynomial& fj, const Polynomial& fk);

}  // namespace regseq
