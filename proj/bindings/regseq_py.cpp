#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "regseq/cyclotomic.hpp"
#include "regseq/hilbert.hpp"
#include "regseq/parse.hpp"
#include "regseq/prime.hpp"
#include "regseq/reduce.hpp"
#include "regseq/regular.hpp"
#include "regseq/scan.hpp"
#include "regseq/symfun.hpp"

namespace py = pybind11;
using namespace regseq;

namespace {

py::object pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

ModGen parse_token(const std::string& tok) {
    if (tok.size() < 3 || tok[1] != ':') {
        throw std::invalid_argument("family token must look like p:9, h:2 or e:3");
    }
    SymKind kind;
    switch (tok[0]) {
        case 'p': kind = SymKind::P; break;
        case 'h': kind = SymKind::H; break;
        case 'e': kind = SymKind::E; break;
        default: throw std::invalid_argument("family must be p, h or e");
    }
    return ModGen{kind, std::stoi(tok.substr(2))};
}

std::vector<ModGen> parse_tokens(const std::string& csv) {
    std::vector<ModGen> out;
    size_t at = 0;
    while (at <= csv.size()) {
        size_t comma = csv.find(',', at);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(parse_token(csv.substr(at, comma - at)));
        at = comma + 1;
    }
    return out;
}

py::dict verdict_dict(const RegSeqVerdict& v) {
    py::dict d;
    d["regular"] = v.regular;
    d["method"] = method_name(v.method);
    if (v.witness) {
        py::dict w;
        w["degree"] = v.witness->degree;
        w["hf"] = v.witness->hf;
        w["ci"] = v.witness->ci;
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    if (v.case_label) d["case"] = *v.case_label;
    d["verified"] = v.verified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_regseq, m) {
    m.doc() = "exact decision procedures for regular sequences of symmetric polynomials";
    m.attr("__version__") = "0.1.0";

    m.def(
        "check",
        [](int vars, const std::string& gens, bool verify) {
            return verdict_dict(is_regular_sequence(parse_generators(gens, vars), vars, verify));
        },
        py::arg("vars"), py::arg("gens"), py::arg("verify") = false,
        "Regular-sequence verdict for comma-separated generators (family tokens or polynomials).");

    m.def(
        "gb",
        [](int vars, const std::string& gens, const std::string& order) {
            MonomialOrder ord =
                order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
            if (order != "lex" && order != "grevlex") {
                throw std::invalid_argument("order must be grevlex or lex");
            }
            GroebnerBasis gb = buchberger(parse_generators(gens, vars), ord);
            std::vector<std::string> out;
            out.reserve(gb.elems.size());
            for (const auto& g : gb.elems) out.push_back(to_string(g));
            return out;
        },
        py::arg("vars"), py::arg("gens"), py::arg("order") = "grevlex",
        "Reduced Groebner basis, one polynomial string per element.");

    m.def(
        "hilbert",
        [](int vars, const std::string& gens, int upto) {
            std::vector<Polynomial> gv = parse_generators(gens, vars);
            HilbertSeries hs = hs_from_groebner(Ideal(gv));
            if (upto < 0) {
                upto = vars;
                for (const auto& g : gv) upto += g.degree();
            }
            py::dict d;
            py::list num;
            for (const auto& c : hs.num) num.append(pyint(c));
            d["numerator"] = num;
            d["denominator_exponent"] = hs.den_exp;
            d["hf"] = hs.expand(upto);
            return d;
        },
        py::arg("vars"), py::arg("gens"), py::arg("upto") = -1,
        "Cancelled Hilbert series and the Hilbert function table.");

    m.def(
        "reduce_to_e",
        [](int vars, const std::string& target, const std::string& mod) {
            ModGen t = parse_token(target);
            EPolynomial r = reduce_to_e(t.family, t.degree, parse_tokens(mod), vars);
            return to_string(r, 'e');
        },
        py::arg("vars"), py::arg("target"), py::arg("mod"),
        "Residue of the target modulo the ideal, written in the elementary basis.");

    m.def(
        "prime",
        [](int vars, const std::string& gens, int cutoff) {
            std::vector<Polynomial> gv = parse_generators(gens, vars);
            if (cutoff <= 0) cutoff = default_serre_cutoff(gv, vars);
            SerreReport rep = serre_pipeline(gv, vars, cutoff);
            py::dict d;
            d["regular_sequence"] = rep.regular_sequence;
            d["jacobian_minors"] = rep.jacobian_minors;
            d["artinian_degree"] =
                rep.artinian_degree ? py::cast(*rep.artinian_degree) : py::object(py::none());
            d["cutoff"] = rep.cutoff;
            d["verdict"] = rep.verdict;
            return d;
        },
        py::arg("vars"), py::arg("gens"), py::arg("cutoff") = 0,
        "Serre-criterion primality certificate: prime-certified or inconclusive.");

    m.def(
        "lemma44",
        [](int n) {
            py::list out;
            for (const FourSum& s : four_root_zero_sums(n)) {
                py::dict d;
                d["exponents"] = s.exponents;
                d["pairs"] = s.pairs;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), "Vanishing four-sums of n-th roots of unity with their antipodal pairs.");

    m.def(
        "verify_catalog",
        [](int kmax) {
            py::list out;
            for (const RuleReport& rep : verify_catalog(kmax)) {
                py::dict d;
                d["rule"] = rep.rule;
                d["printed_pass"] = rep.printed_pass;
                d["corrected_pass"] = rep.corrected_pass;
                out.append(d);
            }
            return out;
        },
        py::arg("kmax") = 5, "Check every closed-form reduction rule for k up to kmax.");

    m.def(
        "scan",
        [](const std::string& predicate, int max, int family, int serre_cutoff, int jobs,
           const std::string& format) {
            auto id = predicate_from_string(predicate);
            if (!id) throw std::invalid_argument("unknown predicate: " + predicate);
            ScanBounds bounds;
            bounds.max = max;
            bounds.family = family;
            bounds.serre_cutoff = serre_cutoff;
            ScanReport rep = scan(*id, bounds, jobs);
            py::dict d;
            d["report"] = emit_report(rep, format);
            d["mismatches"] = rep.mismatches;
            d["exit_code"] = scan_exit_code(rep);
            return d;
        },
        py::arg("predicate"), py::arg("max") = 0, py::arg("family") = 0,
        py::arg("serre_cutoff") = 0, py::arg("jobs") = 1, py::arg("format") = "json",
        "Conjecture scan; returns the rendered report and its exit code.");
}
