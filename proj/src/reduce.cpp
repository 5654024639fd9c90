#include "regseq/reduce.hpp"

#include <stdexcept>

#include "regseq/groebner.hpp"

namespace regseq {

namespace {

// Single term c * e1^a1 * ... in the elementary coordinate ring.
EPolynomial e_term(int nvars, mpq_class c, std::vector<int> exps) {
    exps.resize(nvars, 0);
    return Polynomial::from_terms(nvars, {Term{Monomial(nvars, exps), std::move(c)}});
}

EPolynomial e_zero(int nvars) { return Polynomial(nvars); }

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

using Residue = std::function<EPolynomial(int, int)>;

Residue zero_residue() {
    return [](int, int nvars) { return e_zero(nvars); };
}

RuleBranch zero_branch(int rem, int k_min) {
    return RuleBranch{rem, k_min, zero_residue(), zero_residue()};
}

RuleBranch branch(int rem, int k_min, Residue printed, Residue corrected) {
    return RuleBranch{rem, k_min, std::move(printed), std::move(corrected)};
}

RuleBranch same_branch(int rem, int k_min, Residue both) {
    return RuleBranch{rem, k_min, both, both};
}

std::vector<ReductionRule> build_catalog() {
    std::vector<ReductionRule> rules;

    // p_n mod (p1, p2), 3 vars: 3e3^k when n = 3k, else 0.
    rules.push_back(ReductionRule{
        "p-mod-p1p2", SymKind::P, 3, {{SymKind::P, 1}, {SymKind::P, 2}}, 3,
        {
            same_branch(0, 1, [](int k, int nv) { return e_term(nv, 3, {0, 0, k}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
        }});

    // p_n mod (p1, p3), 3 vars: printed (-1)^k e2^k when n = 2k; the exact
    // residue carries coefficient 2.
    rules.push_back(ReductionRule{
        "p-mod-p1p3", SymKind::P, 3, {{SymKind::P, 1}, {SymKind::P, 3}}, 2,
        {
            branch(
                0, 1, [](int k, int nv) { return e_term(nv, sign_pow(k), {0, k, 0}); },
                [](int k, int nv) { return e_term(nv, 2 * sign_pow(k), {0, k, 0}); }),
            zero_branch(1, 0),
        }});

    // h_n mod (h1, h2), 3 vars: printed -e3^k when n = 3k; exact sign is +.
    rules.push_back(ReductionRule{
        "h-mod-h1h2", SymKind::H, 3, {{SymKind::H, 1}, {SymKind::H, 2}}, 3,
        {
            branch(
                0, 1, [](int k, int nv) { return e_term(nv, -1, {0, 0, k}); },
                [](int k, int nv) { return e_term(nv, 1, {0, 0, k}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
        }});

    // h_n mod (h1, h3), 3 vars: printed (-1)^{n/2-1} e2^{n/2} when n = 2k;
    // exact sign is (-1)^{n/2}.
    rules.push_back(ReductionRule{
        "h-mod-h1h3", SymKind::H, 3, {{SymKind::H, 1}, {SymKind::H, 3}}, 2,
        {
            branch(
                0, 1, [](int k, int nv) { return e_term(nv, -sign_pow(k), {0, k, 0}); },
                [](int k, int nv) { return e_term(nv, sign_pow(k), {0, k, 0}); }),
            zero_branch(1, 0),
        }});

    // h_n mod (h1, h4), 3 vars: e3^k when n = 3k, -(k+1) e2 e3^k when
    // n = 3k+2, else 0.
    rules.push_back(ReductionRule{
        "h-mod-h1h4", SymKind::H, 3, {{SymKind::H, 1}, {SymKind::H, 4}}, 3,
        {
            same_branch(0, 1, [](int k, int nv) { return e_term(nv, 1, {0, 0, k}); }),
            zero_branch(1, 0),
            same_branch(2, 0,
                        [](int k, int nv) { return e_term(nv, -(k + 1), {0, 1, k}); }),
        }});

    // h_n mod (h2, h3), 3 vars: e1^{2k-2} e2^{k+1} when n = 4k,
    // e1^{2k-1} e2^{k+1} when n = 4k+1, else 0. n = 1 is outside the rule.
    rules.push_back(ReductionRule{
        "h-mod-h2h3", SymKind::H, 3, {{SymKind::H, 2}, {SymKind::H, 3}}, 4,
        {
            same_branch(0, 1,
                        [](int k, int nv) { return e_term(nv, 1, {2 * k - 2, k + 1, 0}); }),
            same_branch(1, 1,
                        [](int k, int nv) { return e_term(nv, 1, {2 * k - 1, k + 1, 0}); }),
            zero_branch(2, 0),
            zero_branch(3, 0),
        }});

    // p_n mod (p1, p2, p3), 4 vars: (-1)^k 4 e4^k when n = 4k, else 0.
    rules.push_back(ReductionRule{
        "p-mod-p1p2p3", SymKind::P, 4,
        {{SymKind::P, 1}, {SymKind::P, 2}, {SymKind::P, 3}}, 4,
        {
            same_branch(0, 1,
                        [](int k, int nv) { return e_term(nv, 4 * sign_pow(k), {0, 0, 0, k}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
            zero_branch(3, 0),
        }});

    // p_n mod (p1, p2, p4), 4 vars: printed 4 e3^k when n = 3k; the exact
    // coefficient is 3.
    rules.push_back(ReductionRule{
        "p-mod-p1p2p4", SymKind::P, 4,
        {{SymKind::P, 1}, {SymKind::P, 2}, {SymKind::P, 4}}, 3,
        {
            branch(
                0, 1, [](int k, int nv) { return e_term(nv, 4, {0, 0, k, 0}); },
                [](int k, int nv) { return e_term(nv, 3, {0, 0, k, 0}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
        }});

    // h_n mod (h1, h2, h3), 4 vars: (-1)^k e4^k when n = 4k, else 0.
    rules.push_back(ReductionRule{
        "h-mod-h1h2h3", SymKind::H, 4,
        {{SymKind::H, 1}, {SymKind::H, 2}, {SymKind::H, 3}}, 4,
        {
            same_branch(0, 1,
                        [](int k, int nv) { return e_term(nv, sign_pow(k), {0, 0, 0, k}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
            zero_branch(3, 0),
        }});

    // h_n mod (h1, h2, h4), 4 vars: e3^k when n = 3k, else 0.
    rules.push_back(ReductionRule{
        "h-mod-h1h2h4", SymKind::H, 4,
        {{SymKind::H, 1}, {SymKind::H, 2}, {SymKind::H, 4}}, 3,
        {
            same_branch(0, 1, [](int k, int nv) { return e_term(nv, 1, {0, 0, k, 0}); }),
            zero_branch(1, 0),
            zero_branch(2, 0),
        }});

    // h_n mod (h2, h3, h4), 4 vars: (-1)^k e1^k e4^k when n = 5k,
    // (-1)^k e1^{k+1} e4^k when n = 5k+1, else 0.
    rules.push_back(ReductionRule{
        "h-mod-h2h3h4", SymKind::H, 4,
        {{SymKind::H, 2}, {SymKind::H, 3}, {SymKind::H, 4}}, 5,
        {
            same_branch(0, 1,
                        [](int k, int nv) { return e_term(nv, sign_pow(k), {k, 0, 0, k}); }),
            same_branch(1, 0,
                        [](int k, int nv) { return e_term(nv, sign_pow(k), {k + 1, 0, 0, k}); }),
            zero_branch(2, 0),
            zero_branch(3, 0),
            zero_branch(4, 0),
        }});

    return rules;
}

}  // namespace

const std::vector<ReductionRule>& catalog() {
    static const std::vector<ReductionRule> rules = build_catalog();
    return rules;
}

EPolynomial reduce_to_e(SymKind family, int degree, const std::vector<ModGen>& modulus, int n) {
    if (degree < 1) throw std::invalid_argument("reduce_to_e: target degree must be positive");
    EPolynomial target = to_elementary(generate(family, degree, n));
    std::vector<Polynomial> gens;
    gens.reserve(modulus.size());
    for (const ModGen& m : modulus) {
        gens.push_back(to_elementary(generate(m.family, m.degree, n)));
    }
    return normal_form(target, Ideal(std::move(gens)));
}

RuleReport verify_rule(const ReductionRule& rule, int kmax) {
    if (kmax < 1) throw std::invalid_argument("verify_rule: kmax must be at least 1");
    std::vector<Polynomial> gens;
    gens.reserve(rule.modulus.size());
    for (const ModGen& m : rule.modulus) {
        gens.push_back(generate(m.family, m.degree, rule.nvars));
    }
    Ideal ideal(std::move(gens));

    RuleReport report;
    report.rule = rule.id;
    for (const RuleBranch& br : rule.branches) {
        for (int k = br.k_min; k <= kmax; ++k) {
            int n = rule.modulus_m * k + br.rem;
            if (n < 1) continue;
            Polynomial target = generate(rule.target_family, n, rule.nvars);
            auto member_after_subtracting = [&](const EPolynomial& residue) {
                Polynomial expanded = expand_elementary(residue, rule.nvars);
                return is_member(sub(target, expanded), ideal);
            };
            RuleCheck check;
            check.n = n;
            check.printed_ok = member_after_subtracting(br.printed(k, rule.nvars));
            check.corrected_ok = member_after_subtracting(br.corrected(k, rule.nvars));
            report.printed_pass = report.printed_pass && check.printed_ok;
            report.corrected_pass = report.corrected_pass && check.corrected_ok;
            report.checks.push_back(check);
        }
    }
    return report;
}

std::vector<RuleReport> verify_catalog(int kmax) {
    std::vector<RuleReport> reports;
    reports.reserve(catalog().size());
    for (const ReductionRule& rule : catalog()) {
        reports.push_back(verify_rule(rule, kmax));
    }
    return reports;
}

}  // namespace regseq
