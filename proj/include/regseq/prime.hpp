#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regseq/regular.hpp"

namespace regseq {

// Serre-criterion certificate for primality of a homogeneous ideal: a
// complete intersection whose singular locus is cut out by the Jacobian
// minors; when the quotient by ideal + minors is Artinian the ideal is
// normal, hence (graded, connected) a domain. One-directional: the pipeline
// certifies prime or reports inconclusive, never "not prime".
struct SerreReport {
    std::string ideal;
    bool regular_sequence = false;
    int jacobian_minors = 0;  // generator count of the minor ideal
    std::optional<int> artinian_degree;
    int cutoff = 0;
    std::string verdict;  // "prime-certified" or "inconclusive"
};

// Ideal generated by all m x m minors of the partial-derivative matrix of
// the m generators, content-normalized (unit constants dropped).
Ideal jacobian_minors_ideal(const std::vector<Polynomial>& gens, int nvars);

int default_serre_cutoff(const std::vector<Polynomial>& gens, int nvars);

SerreReport serre_pipeline(const std::vector<Polynomial>& gens, int nvars, int cutoff,
                           const std::string& label = "");

// Structured diagnostic search for nontrivial common zeros of ideal + minors:
// candidate points carry at most `support` distinct nonzero coordinate
// values, normalized to roots of unity when the minor structure forces
// coordinate ratios to be roots of unity. Returns true when no candidate is
// a common zero. Companion check, not the certifying step.
bool zero_locus_probe(const std::vector<Polynomial>& gens, int nvars, int support);

Polynomial derivative(const Polynomial& f, int var);

}  // namespace regseq
