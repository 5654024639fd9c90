#include "regseq/parse.hpp"

#include <cctype>
#include <sstream>

#include "regseq/symfun.hpp"

namespace regseq {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << i << ": " << what;
        throw std::invalid_argument(os.str());
    }
};

mpz_class read_integer(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected an integer");
    return mpz_class(c.s.substr(start, c.i - start));
}

// coefficient `a` or `a/b`, or a variable power `x<i>[^<e>]`
struct Factor {
    bool is_coeff;
    mpq_class coeff;
    int var;
    int exp;
};

Factor read_factor(Cursor& c, int nvars, char symbol) {
    Factor f{};
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        f.is_coeff = true;
        mpz_class num = read_integer(c);
        if (c.peek() == '/') {
            ++c.i;
            mpz_class den = read_integer(c);
            if (den == 0) c.fail("zero denominator");
            f.coeff = mpq_class(num, den);
            f.coeff.canonicalize();
        } else {
            f.coeff = mpq_class(num);
        }
        return f;
    }
    if (ch == symbol) {
        ++c.i;
        mpz_class idx = read_integer(c);
        if (idx < 1 || idx > nvars) c.fail("variable index out of range");
        f.is_coeff = false;
        f.var = static_cast<int>(idx.get_si()) - 1;
        f.exp = 1;
        if (c.peek() == '^') {
            ++c.i;
            mpz_class e = read_integer(c);
            if (e < 1 || e > 30000) c.fail("exponent out of range");
            f.exp = static_cast<int>(e.get_si());
        }
        return f;
    }
    c.fail("expected a coefficient or a variable");
}

Term read_term(Cursor& c, int nvars, char symbol) {
    mpq_class coeff = 1;
    std::vector<int> exps(nvars, 0);
    bool first = true;
    while (true) {
        Factor f = read_factor(c, nvars, symbol);
        if (f.is_coeff) {
            if (!first) c.fail("coefficient must come first in a term");
            coeff = f.coeff;
        } else {
            exps[f.var] += f.exp;
        }
        first = false;
        if (c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    return {Monomial(nvars, exps), coeff};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, char symbol) {
    Cursor c{text};
    std::vector<Term> terms;
    if (c.done()) c.fail("empty input");
    bool negate = false;
    if (c.peek() == '+' || c.peek() == '-') {
        negate = c.peek() == '-';
        ++c.i;
    }
    while (true) {
        Term t = read_term(c, nvars, symbol);
        if (negate) t.c = -t.c;
        terms.push_back(std::move(t));
        if (c.done()) break;
        char sep = c.peek();
        if (sep != '+' && sep != '-') c.fail("expected + or - between terms");
        negate = sep == '-';
        ++c.i;
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

std::string to_string(const Polynomial& f, char symbol) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : f.terms()) {
        const bool negative = t.c < 0;
        mpq_class a = abs(t.c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = a == 1;
        const bool constant = t.m.degree() == 0;
        if (!unit || constant) os << a.get_str();
        bool star = !unit || constant;
        for (int i = 0; i < f.nvars(); ++i) {
            if (t.m[i] == 0) continue;
            if (star) os << '*';
            star = true;
            os << symbol << (i + 1);
            if (t.m[i] > 1) os << '^' << t.m[i];
        }
    }
    return os.str();
}

std::vector<Polynomial> parse_generators(const std::string& list, int nvars) {
    std::vector<Polynomial> gens;
    size_t start = 0;
    while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty generator entry");
        item = item.substr(a, b - a + 1);
        if (item.size() > 2 && item[1] == ':' && (item[0] == 'p' || item[0] == 'h' || item[0] == 'e')) {
            int m = std::stoi(item.substr(2));
            if (m < 0) throw std::invalid_argument("negative family degree");
            SymKind kind = item[0] == 'p' ? SymKind::P : item[0] == 'h' ? SymKind::H : SymKind::E;
            gens.push_back(generate(kind, m, nvars));
        } else {
            gens.push_back(parse_polynomial(item, nvars));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return gens;
}

}  // namespace regseq
