#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regseq/cyclotomic.hpp"
#include "regseq/groebner.hpp"
#include "regseq/hilbert.hpp"
#include "regseq/parse.hpp"
#include "regseq/prime.hpp"
#include "regseq/reduce.hpp"
#include "regseq/regular.hpp"
#include "regseq/scan.hpp"
#include "regseq/symfun.hpp"

namespace {

using nlohmann::ordered_json;
using namespace regseq;

ordered_json json_int(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw std::invalid_argument("unknown order: " + name);
}

// Family token `p:9`, `h:4`, `e:2`.
ModGen parse_sym_token(const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon + 1 >= tok.size())
        throw std::invalid_argument("expected family token like p:9, got: " + tok);
    std::string fam = tok.substr(0, colon);
    SymKind kind;
    if (fam == "p") kind = SymKind::P;
    else if (fam == "h") kind = SymKind::H;
    else if (fam == "e") kind = SymKind::E;
    else throw std::invalid_argument("unknown family: " + fam);
    int deg = 0;
    try {
        size_t used = 0;
        deg = std::stoi(tok.substr(colon + 1), &used);
        if (used != tok.size() - colon - 1) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad degree in token: " + tok);
    }
    if (deg < 1) throw std::invalid_argument("degree must be positive: " + tok);
    return {kind, deg};
}

std::vector<ModGen> parse_sym_tokens(const std::string& list) {
    std::vector<ModGen> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(parse_sym_token(tok.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty generator list");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

int run_gb(int vars, const std::string& gens_text, const std::string& order_name, int cutoff) {
    auto gens = parse_generators(gens_text, vars);
    BuchbergerOptions opts;
    opts.cutoff = cutoff;
    auto gb = buchberger(gens, order_from_name(order_name), opts);
    for (const auto& g : gb.elems) std::cout << to_string(g) << "\n";
    if (!gb.complete)
        std::cerr << "basis truncated: valid through degree " << gb.valid_upto << "\n";
    return 0;
}

int run_hilbert(int vars, const std::string& gens_text, int upto, const std::string& format) {
    auto gens = parse_generators(gens_text, vars);
    Ideal I(gens);
    auto hs = hs_from_groebner(I);
    if (upto < 0) {
        upto = vars;
        for (const auto& g : gens) upto += g.degree();
    }
    auto hf = hs.expand(upto);
    if (format == "tsv") {
        std::ostringstream out;
        out << "degree\thf\n";
        for (int d = 0; d <= upto; ++d) out << d << "\t" << hf[d] << "\n";
        std::cout << out.str();
        return 0;
    }
    ordered_json j;
    j["vars"] = vars;
    j["generators"] = gens_text;
    j["numerator"] = ordered_json::array();
    for (const auto& c : hs.num) j["numerator"].push_back(json_int(c));
    j["denominator_exponent"] = hs.den_exp;
    j["upto"] = upto;
    j["hf"] = hf;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_check(int vars, const std::string& gens_text, bool verify) {
    auto gens = parse_generators(gens_text, vars);
    auto v = is_regular_sequence(gens, vars, verify);
    ordered_json j;
    j["vars"] = vars;
    j["generators"] = gens_text;
    j["regular"] = v.regular;
    j["method"] = method_name(v.method);
    if (v.witness) {
        j["witness"] = {{"degree", v.witness->degree}, {"hf", v.witness->hf}, {"ci", v.witness->ci}};
    }
    if (v.case_label) j["case_label"] = *v.case_label;
    j["verified"] = v.verified;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_reduce(int vars, const std::string& target_tok, const std::string& mod_text) {
    ModGen target = parse_sym_token(target_tok);
    auto modulus = parse_sym_tokens(mod_text);
    auto residue = reduce_to_e(target.family, target.degree, modulus, vars);
    std::cout << to_string(residue, 'e') << "\n";
    return 0;
}

int run_verify_catalog(int kmax, const std::string& format) {
    auto reports = verify_catalog(kmax);
    if (format == "tsv") {
        std::ostringstream out;
        out << "rule\tn\tprinted_ok\tcorrected_ok\n";
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                out << r.rule << "\t" << c.n << "\t" << (c.printed_ok ? "true" : "false") << "\t"
                    << (c.corrected_ok ? "true" : "false") << "\n";
        std::cout << out.str();
    } else {
        ordered_json j;
        j["kmax"] = kmax;
        j["rules"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json jr;
            jr["rule"] = r.rule;
            jr["printed_pass"] = r.printed_pass;
            jr["corrected_pass"] = r.corrected_pass;
            jr["checks"] = ordered_json::array();
            for (const auto& c : r.checks)
                jr["checks"].push_back(
                    {{"n", c.n}, {"printed_ok", c.printed_ok}, {"corrected_ok", c.corrected_ok}});
            j["rules"].push_back(std::move(jr));
        }
        std::cout << j.dump(2) << "\n";
    }
    bool all_corrected = true;
    for (const auto& r : reports) all_corrected = all_corrected && r.corrected_pass;
    return all_corrected ? 0 : 1;
}

int run_prime(int vars, const std::string& gens_text, int cutoff) {
    auto gens = parse_generators(gens_text, vars);
    if (cutoff <= 0) cutoff = default_serre_cutoff(gens, vars);
    std::string label = "(" + gens_text + ")";
    auto rep = serre_pipeline(gens, vars, cutoff, label);
    ordered_json j;
    j["ideal"] = rep.ideal;
    j["regular_sequence"] = rep.regular_sequence;
    j["jacobian_minors"] = rep.jacobian_minors;
    if (rep.artinian_degree) j["artinian_degree"] = *rep.artinian_degree;
    else j["artinian_degree"] = nullptr;
    j["cutoff"] = rep.cutoff;
    j["verdict"] = rep.verdict;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_lemma44(int n) {
    auto sums = four_root_zero_sums(n);
    ordered_json j;
    j["n"] = n;
    j["count"] = sums.size();
    j["sums"] = ordered_json::array();
    for (const auto& s : sums) {
        ordered_json js;
        js["exponents"] = s.exponents;
        js["pairs"] = {{s.pairs[0][0], s.pairs[0][1]}, {s.pairs[1][0], s.pairs[1][1]}};
        j["sums"].push_back(std::move(js));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// Simple key=value lines; # starts a comment. Keys: max, family, serre_cutoff.
ScanBounds read_scan_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config " + path);
    ScanBounds b;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t z = line.find_last_not_of(" \t\r");
        line = line.substr(a, z - a + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string s) {
            size_t i = s.find_first_not_of(" \t");
            size_t j = s.find_last_not_of(" \t");
            return i == std::string::npos ? std::string() : s.substr(i, j - i + 1);
        };
        key = trim(key);
        val = trim(val);
        int num = 0;
        try {
            size_t used = 0;
            num = std::stoi(val, &used);
            if (used != val.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad value " + val);
        }
        if (key == "max") b.max = num;
        else if (key == "family") b.family = num;
        else if (key == "serre_cutoff") b.serre_cutoff = num;
        else throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
    return b;
}

int env_jobs() {
    const char* s = std::getenv("REGSEQ_JOBS");
    if (!s || !*s) return 1;
    try {
        int n = std::stoi(s);
        return n >= 1 ? n : 1;
    } catch (...) {
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular sequences of symmetric polynomials, decided exactly"};
    app.require_subcommand(1);

    int vars = 3;
    std::string gens_text;
    std::string order_name = "grevlex";
    int cutoff = -1;
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    gb_cmd->add_option("--vars", vars, "variable count")->required();
    gb_cmd->add_option("--gens", gens_text, "generators: family tokens or polynomials")->required();
    gb_cmd->add_option("--order", order_name, "grevlex or lex");
    gb_cmd->add_option("--cutoff", cutoff, "degree cutoff for a truncated basis");

    int upto = -1;
    std::string format = "json";
    auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert series and function of a quotient");
    hil_cmd->add_option("--vars", vars, "variable count")->required();
    hil_cmd->add_option("--gens", gens_text, "generators")->required();
    hil_cmd->add_option("--upto", upto, "largest degree in the HF table");
    hil_cmd->add_option("--format", format, "json or tsv");

    bool verify = false;
    auto* check_cmd = app.add_subcommand("check", "regular-sequence verdict");
    check_cmd->add_option("--vars", vars, "variable count")->required();
    check_cmd->add_option("--gens", gens_text, "generators")->required();
    check_cmd->add_flag("--verify", verify, "re-derive along an independent route");

    std::string target_tok, mod_text;
    auto* red_cmd = app.add_subcommand("reduce", "residue in the elementary basis");
    red_cmd->add_option("--vars", vars, "variable count")->required();
    red_cmd->add_option("--target", target_tok, "family token, e.g. p:9")->required();
    red_cmd->add_option("--mod", mod_text, "modulus family tokens, e.g. p:1,p:2")->required();

    int kmax = 5;
    auto* cat_cmd = app.add_subcommand("verify-catalog", "check every closed-form reduction rule");
    cat_cmd->add_option("--kmax", kmax, "largest k per branch");
    cat_cmd->add_option("--format", format, "json or tsv");

    int prime_cutoff = 0;
    auto* prime_cmd = app.add_subcommand("prime", "Serre-criterion primality certificate");
    prime_cmd->add_option("--vars", vars, "variable count")->required();
    prime_cmd->add_option("--gens", gens_text, "generators")->required();
    prime_cmd->add_option("--cutoff", prime_cutoff, "largest degree searched for the Artinian witness");

    int lemma_n = 0;
    auto* lem_cmd = app.add_subcommand("lemma44", "vanishing four-sums of n-th roots of unity");
    lem_cmd->add_option("--n", lemma_n, "root order (at least 5)")->required();

    std::string predicate_text, out_path, config_path;
    int scan_vars = 0, scan_max = 0, scan_family = 0, scan_serre_cutoff = 0, jobs = 0;
    auto* scan_cmd = app.add_subcommand("scan", "conjecture scan: predicate vs decision procedure");
    scan_cmd->add_option("--predicate", predicate_text,
                         "ckw3p, ckw3h, conj4p-triples, conj4-prime-families, ckw4p")
        ->required();
    scan_cmd->add_option("--vars", scan_vars, "variable count (fixed per predicate)");
    scan_cmd->add_option("--max", scan_max, "largest tuple entry");
    scan_cmd->add_option("--family", scan_family, "conj4-prime-families: 1..4, 0 = all");
    scan_cmd->add_option("--serre-cutoff", scan_serre_cutoff, "prime-family Artinian search bound");
    scan_cmd->add_option("--jobs", jobs, "worker count (default REGSEQ_JOBS or 1)");
    scan_cmd->add_option("--format", format, "json or tsv");
    scan_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    scan_cmd->add_option("--config", config_path, "key=value file: max, family, serre_cutoff");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb_cmd->parsed()) return run_gb(vars, gens_text, order_name, cutoff);
        if (hil_cmd->parsed()) return run_hilbert(vars, gens_text, upto, format);
        if (check_cmd->parsed()) return run_check(vars, gens_text, verify);
        if (red_cmd->parsed()) return run_reduce(vars, target_tok, mod_text);
        if (cat_cmd->parsed()) return run_verify_catalog(kmax, format);
        if (prime_cmd->parsed()) return run_prime(vars, gens_text, prime_cutoff);
        if (lem_cmd->parsed()) return run_lemma44(lemma_n);
        if (scan_cmd->parsed()) {
            auto id = predicate_from_string(predicate_text);
            if (!id) throw std::invalid_argument("unknown predicate: " + predicate_text);
            if (scan_cmd->count("--vars") && scan_vars != predicate_vars(*id))
                throw std::invalid_argument(predicate_text + " scans tuples in " +
                                            std::to_string(predicate_vars(*id)) + " variables");
            ScanBounds bounds;
            if (!config_path.empty()) bounds = read_scan_config(config_path);
            if (scan_cmd->count("--max")) bounds.max = scan_max;
            if (scan_cmd->count("--family")) bounds.family = scan_family;
            if (scan_cmd->count("--serre-cutoff")) bounds.serre_cutoff = scan_serre_cutoff;
            if (!scan_cmd->count("--jobs")) jobs = env_jobs();
            auto report = scan(*id, bounds, jobs);
            emit(emit_report(report, format), out_path);
            return scan_exit_code(report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
