#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regseq/regular.hpp"

namespace regseq {

enum class PredicateId { ckw3p, ckw3h, conj4p_triples, conj4_prime_families, ckw4p };

const char* predicate_name(PredicateId id);
std::optional<PredicateId> predicate_from_string(const std::string& s);

// Natural variable count of the ambient ring for each predicate's tuples.
int predicate_vars(PredicateId id);

// Default largest entry: 12 for 3-variable triples, 10 for 4-variable tuples.
int default_scan_max(PredicateId id);

// The conjectured arithmetic condition, evaluated literally on the integer tuple.
// Tuples are (a,b,c) or (a1..a4); for conj4-prime-families the tuple is
// (family, a, b).
bool eval_predicate(PredicateId id, const std::vector<int>& tuple);

struct ScanBounds {
    int max = 0;           // 0 = predicate default
    int family = 0;        // conj4-prime-families: 0 = all families, else 1..4
    int serre_cutoff = 0;  // 0 = default per ideal
};

struct ScanRow {
    std::vector<int> tuple;
    bool predicate = false;
    std::string decision;  // regular | not-regular | prime-certified | inconclusive
    bool agree = true;
    std::optional<RegWitness> witness;
    std::string note;  // diagnostic detail (engine errors, artinian degree)
    bool in_verified_slice = false;
};

struct ScanReport {
    std::string predicate;
    int vars = 0;
    std::string range;
    std::vector<std::pair<std::string, std::string>> metadata;  // fixed order
    std::vector<ScanRow> rows;
    long long predicate_true = 0;
    long long predicate_false = 0;
    long long mismatches = 0;
    long long verified_slice_mismatches = 0;
    long long inconclusive = 0;
    long long errors = 0;
};

// Enumerates the tuple range for the predicate, runs the decision procedure
// on each tuple (jobs > 1 splits tuples over a worker pool; the report is
// byte-identical regardless), and tallies agreement. Engine failures become
// inconclusive rows with the error recorded, never dropped.
ScanReport scan(PredicateId id, const ScanBounds& bounds, int jobs);

// json or tsv; byte-deterministic for identical reports.
std::string emit_report(const ScanReport& report, const std::string& format);

// 2 when any engine error occurred, 1 when a proven slice has a
// mismatch, 0 otherwise.
int scan_exit_code(const ScanReport& report);

}  // namespace regseq
