#pragma once

#include <functional>
#include <string>
#include <vector>

#include "regseq/symfun.hpp"

namespace regseq {

struct ModGen {
    SymKind family;
    int degree;
};

// One residue-class branch of a closed-form rule: for n = m*k + rem the rule
// asserts target_n has the given residue in the elementary basis. Residues
// come in two variants: the form as printed and the oracle-corrected form
// recomputed from the exact normal form. They coincide for most rules.
struct RuleBranch {
    int rem;
    int k_min;  // smallest k the branch covers
    std::function<EPolynomial(int k, int nvars)> printed;
    std::function<EPolynomial(int k, int nvars)> corrected;
};

struct ReductionRule {
    std::string id;
    SymKind target_family;
    int nvars;
    std::vector<ModGen> modulus;
    int modulus_m;  // branches split on n mod modulus_m
    std::vector<RuleBranch> branches;
};

// The fixed closed-form catalog: residues of p_n and h_n modulo the small
// symmetric ideals, one rule per modulus.
const std::vector<ReductionRule>& catalog();

// Ground-truth residue: the unique normal form of the target rewritten in
// elementary symmetric coordinates, reduced modulo the ideal the modulus
// generators cut out in the invariant ring.
EPolynomial reduce_to_e(SymKind family, int degree, const std::vector<ModGen>& modulus, int n);

struct RuleCheck {
    int n;
    bool printed_ok;
    bool corrected_ok;
};

struct RuleReport {
    std::string rule;
    bool printed_pass = true;    // every checked n passed as printed
    bool corrected_pass = true;  // every checked n passed oracle-corrected
    std::vector<RuleCheck> checks;
};

// Membership verification of each branch residue for every k_min <= k <= kmax:
// target - expand_elementary(residue) must lie in the modulus ideal.
RuleReport verify_rule(const ReductionRule& rule, int kmax);
std::vector<RuleReport> verify_catalog(int kmax);

}  // namespace regseq
