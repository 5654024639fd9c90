#include "regseq/scan.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "regseq/prime.hpp"
#include "regseq/symfun.hpp"

namespace regseq {

namespace {

using ordered_json = nlohmann::ordered_json;

int gcd_all(const std::vector<int>& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    return g;
}

bool ckw3p_pred(int a, int b, int c) { return (a * b * c) % 6 == 0; }

bool ckw3h_pred(int a, int b, int c) {
    if ((a * b * c) % 6 != 0) return false;
    if (std::gcd(std::gcd(a + 1, b + 1), c + 1) != 1) return false;
    // For t > c+2 every d+2 lies in 3..t-1, so the finite window suffices.
    for (int t = 3; t <= c + 2; ++t) {
        bool ok = false;
        for (int d : {a, b, c}) {
            int r = (d + 2) % t;
            if (r != 0 && r != 1) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// Conjecture on triples (p_a, p_b, p_n) in 4 variables, items 1-5 read
// literally with naturals starting at 1; item 5 applied as an additional
// conjunct on top of the parity cases.
bool conj4p_pred(int a, int b, int n) {
    bool base;
    if (a % 2 == 1 && b % 2 == 0) {
        base = true;
    } else if (a % 2 == 1 && b % 2 == 1) {
        base = n % 2 == 0;
    } else {
        int m = a / 2;
        if (m % 2 == 1) {
            int lambda = b - a;
            if (lambda % 4 != 0) {
                base = true;
            } else {
                base = n % 4 == 2 && n >= 6;  // n = 4l+2 with l >= 1
            }
        } else {
            bool odd_multiple = n % a == 0 && (n / a) % 2 == 1 && n / a >= 3;
            base = b != 3 * a && !odd_multiple;
        }
    }
    bool item5 = !(b == 2 * a && n == 5 * a);
    return base && item5;
}

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

// Families of Conjecture 4.11; tuple = (family, a, b).
bool prime_family_pred(int family, int a, int b) {
    switch (family) {
        case 1: {
            if (!is_prime_int(a) || a < 5 || b <= a) return false;
            int diff = (b - a) % 6;
            return diff == 1 || diff == 5;
        }
        case 2: {
            if (a != 2 || b < 1) return false;
            if (b > 2 && (b - 2) % 3 == 0) return false;
            if (b > 2 && (b - 2) % 4 == 0) return false;
            return true;
        }
        case 3: {
            if (a != 3 || b < 2 || b % 2 != 0) return false;
            int m = b / 2;
            return !(m >= 6 && (m - 6) % 9 == 0);
        }
        case 4: {
            if (a != 4 || b < 1) return false;
            if (b > 4 && (b - 4) % 3 == 0) return false;
            if (b > 4 && (b - 4) % 8 == 0) return false;
            return true;
        }
        default:
            throw std::invalid_argument("prime family must be 1..4");
    }
}

bool ckw4p_pred(const std::vector<int>& A) {
    int evens = 0, mult3 = 0, mult4 = 0;
    for (int x : A) {
        if (x % 2 == 0) ++evens;
        if (x % 3 == 0) ++mult3;
        if (x % 4 == 0) ++mult4;
    }
    if (evens < 2 || mult3 < 1 || mult4 < 1) return false;
    int d = 0;
    for (int x : A) {
        if (x % 2 == 0) d = std::gcd(d, x);
    }
    if (d == 0) return false;
    bool even_ratio = false;
    for (int x : A) {
        if (x % 2 == 0 && (x / d) % 2 == 0) even_ratio = true;
    }
    if (!even_ratio) return false;
    for (int d0 = 1; 5 * d0 <= A.back(); ++d0) {
        bool has1 = std::find(A.begin(), A.end(), d0) != A.end();
        bool has2 = std::find(A.begin(), A.end(), 2 * d0) != A.end();
        bool has5 = std::find(A.begin(), A.end(), 5 * d0) != A.end();
        if (has1 && has2 && has5) return false;
    }
    return true;
}

// Slices where the conjecture is proven, by tuple prefix.
bool in_verified_slice(PredicateId id, const std::vector<int>& t) {
    switch (id) {
        case PredicateId::ckw3p:
            return (t[0] == 1 && t[1] == 2) || (t[0] == 1 && t[1] == 3);
        case PredicateId::ckw3h:
            return (t[0] == 1 && (t[1] == 2 || t[1] == 3 || t[1] == 4)) ||
                   (t[0] == 2 && t[1] == 3);
        case PredicateId::ckw4p:
            return t[0] == 1 && t[1] == 2 && (t[2] == 3 || t[2] == 4);
        default:
            return false;
    }
}

std::vector<std::vector<int>> enumerate_tuples(PredicateId id, const ScanBounds& bounds,
                                               std::string& range_out) {
    int max = bounds.max > 0 ? bounds.max : default_scan_max(id);
    std::vector<std::vector<int>> tuples;
    std::ostringstream range;
    switch (id) {
        case PredicateId::ckw3p:
            range << "a<b<c<=" << max << ", gcd(a,b,c)=1";
            for (int a = 1; a <= max; ++a) {
                for (int b = a + 1; b <= max; ++b) {
                    for (int c = b + 1; c <= max; ++c) {
                        if (std::gcd(std::gcd(a, b), c) == 1) tuples.push_back({a, b, c});
                    }
                }
            }
            break;
        case PredicateId::ckw3h:
            range << "a<b<c<=" << max;
            for (int a = 1; a <= max; ++a) {
                for (int b = a + 1; b <= max; ++b) {
                    for (int c = b + 1; c <= max; ++c) tuples.push_back({a, b, c});
                }
            }
            break;
        case PredicateId::conj4p_triples:
            range << "a<b<n<=" << max;
            for (int a = 1; a <= max; ++a) {
                for (int b = a + 1; b <= max; ++b) {
                    for (int n = b + 1; n <= max; ++n) tuples.push_back({a, b, n});
                }
            }
            break;
        case PredicateId::conj4_prime_families: {
            range << "b<=" << max;
            if (bounds.family != 0) range << ", family " << bounds.family;
            auto want = [&](int f) { return bounds.family == 0 || bounds.family == f; };
            if (want(1)) {
                for (int a = 5; a <= max; ++a) {
                    if (!is_prime_int(a)) continue;
                    for (int b = a + 1; b <= max; ++b) {
                        if (prime_family_pred(1, a, b)) tuples.push_back({1, a, b});
                    }
                }
            }
            if (want(2)) {
                for (int b = 1; b <= max; ++b) {
                    if (prime_family_pred(2, 2, b)) tuples.push_back({2, 2, b});
                }
            }
            if (want(3)) {
                for (int b = 2; b <= max; b += 2) {
                    if (prime_family_pred(3, 3, b)) tuples.push_back({3, 3, b});
                }
            }
            if (want(4)) {
                for (int b = 1; b <= max; ++b) {
                    if (prime_family_pred(4, 4, b)) tuples.push_back({4, 4, b});
                }
            }
            break;
        }
        case PredicateId::ckw4p:
            range << "a1<a2<a3<a4<=" << max << ", gcd=1";
            for (int a = 1; a <= max; ++a) {
                for (int b = a + 1; b <= max; ++b) {
                    for (int c = b + 1; c <= max; ++c) {
                        for (int d = c + 1; d <= max; ++d) {
                            std::vector<int> t{a, b, c, d};
                            if (gcd_all(t) == 1) tuples.push_back(std::move(t));
                        }
                    }
                }
            }
            break;
    }
    range_out = range.str();
    return tuples;
}

ScanRow evaluate_tuple(PredicateId id, const std::vector<int>& tuple,
                       const ScanBounds& bounds) {
    ScanRow row;
    row.tuple = tuple;
    row.predicate = eval_predicate(id, tuple);
    row.in_verified_slice = in_verified_slice(id, tuple);
    try {
        if (id == PredicateId::conj4_prime_families) {
            std::vector<Polynomial> gens{generate(SymKind::P, tuple[1], 4),
                                         generate(SymKind::P, tuple[2], 4)};
            int cutoff =
                bounds.serre_cutoff > 0 ? bounds.serre_cutoff : default_serre_cutoff(gens, 4);
            std::ostringstream label;
            label << "(p" << tuple[1] << ",p" << tuple[2] << ")";
            SerreReport rep = serre_pipeline(gens, 4, cutoff, label.str());
            row.decision = rep.verdict;
            // One-directional certificate: inconclusive is not a mismatch.
            row.agree = true;
            if (rep.artinian_degree) {
                row.note = "artinian degree " + std::to_string(*rep.artinian_degree);
            }
        } else {
            int nv = predicate_vars(id);
            SymKind kind = id == PredicateId::ckw3h ? SymKind::H : SymKind::P;
            std::vector<Polynomial> gens;
            gens.reserve(tuple.size());
            for (int d : tuple) gens.push_back(generate(kind, d, nv));
            RegSeqVerdict verdict = is_regular_sequence(gens, nv);
            row.decision = verdict.regular ? "regular" : "not-regular";
            row.agree = verdict.regular == row.predicate;
            row.witness = verdict.witness;
        }
    } catch (const std::exception& e) {
        row.decision = "inconclusive";
        row.agree = true;
        row.note = std::string("engine error: ") + e.what();
    }
    return row;
}

ordered_json witness_json(const RegWitness& w) {
    ordered_json j;
    j["degree"] = w.degree;
    j["hf"] = w.hf;
    j["ci"] = w.ci;
    return j;
}

std::string tuple_string(const std::vector<int>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

}  // namespace

const char* predicate_name(PredicateId id) {
    switch (id) {
        case PredicateId::ckw3p: return "ckw3p";
        case PredicateId::ckw3h: return "ckw3h";
        case PredicateId::conj4p_triples: return "conj4p-triples";
        case PredicateId::conj4_prime_families: return "conj4-prime-families";
        case PredicateId::ckw4p: return "ckw4p";
    }
    return "";
}

std::optional<PredicateId> predicate_from_string(const std::string& s) {
    for (PredicateId id : {PredicateId::ckw3p, PredicateId::ckw3h, PredicateId::conj4p_triples,
                           PredicateId::conj4_prime_families, PredicateId::ckw4p}) {
        if (s == predicate_name(id)) return id;
    }
    return std::nullopt;
}

int predicate_vars(PredicateId id) {
    switch (id) {
        case PredicateId::ckw3p:
        case PredicateId::ckw3h:
            return 3;
        default:
            return 4;
    }
}

int default_scan_max(PredicateId id) {
    switch (id) {
        case PredicateId::ckw3p:
        case PredicateId::ckw3h:
            return 12;
        default:
            return 10;
    }
}

bool eval_predicate(PredicateId id, const std::vector<int>& tuple) {
    auto need = [&](size_t n) {
        if (tuple.size() != n) {
            throw std::invalid_argument("eval_predicate: tuple size does not match predicate");
        }
    };
    switch (id) {
        case PredicateId::ckw3p:
            need(3);
            return ckw3p_pred(tuple[0], tuple[1], tuple[2]);
        case PredicateId::ckw3h:
            need(3);
            return ckw3h_pred(tuple[0], tuple[1], tuple[2]);
        case PredicateId::conj4p_triples:
            need(3);
            return conj4p_pred(tuple[0], tuple[1], tuple[2]);
        case PredicateId::conj4_prime_families:
            need(3);
            return prime_family_pred(tuple[0], tuple[1], tuple[2]);
        case PredicateId::ckw4p:
            need(4);
            return ckw4p_pred(tuple);
    }
    return false;
}

ScanReport scan(PredicateId id, const ScanBounds& bounds, int jobs) {
    if (jobs < 1) jobs = 1;
    ScanReport report;
    report.predicate = predicate_name(id);
    report.vars = predicate_vars(id);
    std::vector<std::vector<int>> tuples = enumerate_tuples(id, bounds, report.range);

    if (id == PredicateId::conj4p_triples) {
        report.metadata.push_back({"item3_reading", "literal-4l+2"});
        report.metadata.push_back({"item5_reading", "additional-conjunct"});
    }
    if (id == PredicateId::conj4_prime_families) {
        report.metadata.push_back({"enumeration", "predicate-true-pairs-only"});
        report.metadata.push_back({"certificate", "one-directional"});
    }

    report.rows.resize(tuples.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tuples.size()) break;
            report.rows[i] = evaluate_tuple(id, tuples[i], bounds);
        }
    };
    if (jobs == 1 || tuples.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int n = std::min<int>(jobs, static_cast<int>(tuples.size()));
        pool.reserve(n);
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const ScanRow& row : report.rows) {
        if (row.predicate) {
            ++report.predicate_true;
        } else {
            ++report.predicate_false;
        }
        if (row.decision == "inconclusive") {
            ++report.inconclusive;
            if (row.note.rfind("engine error:", 0) == 0) ++report.errors;
        }
        if (!row.agree) {
            ++report.mismatches;
            if (row.in_verified_slice) ++report.verified_slice_mismatches;
        }
    }
    return report;
}

std::string emit_report(const ScanReport& report, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["predicate"] = report.predicate;
        j["vars"] = report.vars;
        j["range"] = report.range;
        ordered_json meta = ordered_json::object();
        for (const auto& [k, v] : report.metadata) meta[k] = v;
        j["metadata"] = meta;
        ordered_json summary;
        summary["rows"] = report.rows.size();
        summary["predicate_true"] = report.predicate_true;
        summary["predicate_false"] = report.predicate_false;
        summary["mismatches"] = report.mismatches;
        summary["verified_slice_mismatches"] = report.verified_slice_mismatches;
        summary["inconclusive"] = report.inconclusive;
        summary["errors"] = report.errors;
        j["summary"] = summary;
        ordered_json mm = ordered_json::array();
        for (const ScanRow& row : report.rows) {
            if (!row.agree) mm.push_back(tuple_string(row.tuple));
        }
        j["mismatches"] = mm;
        ordered_json rows = ordered_json::array();
        for (const ScanRow& row : report.rows) {
            ordered_json r;
            r["tuple"] = row.tuple;
            r["predicate"] = row.predicate;
            r["decision"] = row.decision;
            r["agree"] = row.agree;
            if (row.witness) r["witness"] = witness_json(*row.witness);
            if (!row.note.empty()) r["note"] = row.note;
            if (row.in_verified_slice) r["verified_slice"] = true;
            rows.push_back(r);
        }
        j["rows"] = rows;
        return j.dump(2) + "\n";
    }
    if (format == "tsv") {
        std::ostringstream out;
        out << "tuple\tpredicate\tdecision\tagree\twitness_degree\twitness_hf\twitness_ci\tnote\n";
        for (const ScanRow& row : report.rows) {
            out << tuple_string(row.tuple) << '\t' << (row.predicate ? "true" : "false") << '\t'
                << row.decision << '\t' << (row.agree ? "true" : "false") << '\t';
            if (row.witness) {
                out << row.witness->degree << '\t' << row.witness->hf << '\t' << row.witness->ci;
            } else {
                out << "\t\t";
            }
            out << '\t' << row.note << '\n';
        }
        return out.str();
    }
    throw std::invalid_argument("emit_report: format must be json or tsv");
}

int scan_exit_code(const ScanReport& report) {
    if (report.errors > 0) return 2;
    if (report.verified_slice_mismatches > 0) return 1;
    return 0;
}

}  // namespace regseq
