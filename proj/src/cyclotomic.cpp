#include "regseq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace regseq {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division by a monic divisor; throws if a remainder survives.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("division requires monic divisor");
    trim(num);
    if (num.size() < den.size()) {
        trim(num);
        if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
        return {};
    }
    ZPoly q(num.size() - den.size() + 1, mpz_class(0));
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        if (c == 0) continue;
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

std::map<int, CyclotomicPoly>& cache() {
    static std::map<int, CyclotomicPoly> c;
    return c;
}

std::mutex cache_mutex;

const CyclotomicPoly& cyclotomic_locked(int n) {
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;

    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    ZPoly den{mpz_class(1)};
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) den = zmul(den, cyclotomic_locked(d).coef);
    }
    CyclotomicPoly phi;
    phi.n = n;
    phi.coef = zdiv_exact(std::move(num), den);
    return cache().emplace(n, std::move(phi)).first->second;
}

}  // namespace

const CyclotomicPoly& cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: order must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_locked(n);
}

std::vector<mpz_class> mod_cyclotomic(std::vector<mpz_class> p, int n) {
    const CyclotomicPoly& phi = cyclotomic(n);
    const ZPoly& den = phi.coef;
    trim(p);
    while (p.size() >= den.size()) {
        mpz_class c = p.back();
        size_t shift = p.size() - den.size();
        for (size_t j = 0; j < den.size(); ++j) p[shift + j] -= c * den[j];
        trim(p);
    }
    return p;
}

std::vector<FourSum> four_root_zero_sums(int n) {
    if (n < 5) throw std::invalid_argument("four_root_zero_sums: need n >= 5 for four roots");
    std::vector<FourSum> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    std::vector<mpz_class> p(d + 1, mpz_class(0));
                    p[a] += 1;
                    p[b] += 1;
                    p[c] += 1;
                    p[d] += 1;
                    if (!mod_cyclotomic(std::move(p), n).empty()) continue;
                    FourSum fs;
                    fs.exponents = {a, b, c, d};
                    // Sorted zero sums pair up as {a, c} and {b, d} with both
                    // gaps exactly n/2; anything else would contradict the
                    // two-antipodal-pairs structure.
                    if (n % 2 != 0 || c - a != n / 2 || d - b != n / 2) {
                        throw std::logic_error("zero four-sum without antipodal pairing");
                    }
                    fs.pairs = {{{a, c}, {b, d}}};
                    out.push_back(fs);
                }
            }
        }
    }
    return out;
}

}  // namespace regseq
