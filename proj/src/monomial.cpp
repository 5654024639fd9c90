#include "regseq/monomial.hpp"

namespace regseq {

MonomialOrder MonomialOrder::permuted(Kind k, const std::vector<int>& p) {
    if (p.size() > static_cast<size_t>(max_vars))
        throw std::invalid_argument("permutation too long");
    MonomialOrder o;
    o.kind = k;
    std::array<bool, max_vars> seen{};
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= static_cast<int>(p.size()) || seen[p[i]])
            throw std::invalid_argument("not a permutation");
        seen[p[i]] = true;
        o.perm[i] = static_cast<uint8_t>(p[i]);
    }
    for (size_t i = p.size(); i < static_cast<size_t>(max_vars); ++i)
        o.perm[i] = static_cast<uint8_t>(i);
    return o;
}

int order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    const int n = a.nvars();
    if (n != b.nvars()) throw std::invalid_argument("variable count mismatch");
    switch (ord.kind) {
        case MonomialOrder::Kind::lex:
            for (int i = 0; i < n; ++i) {
                const int d = a[ord.perm[i]] - b[ord.perm[i]];
                if (d != 0) return d > 0 ? 1 : -1;
            }
            return 0;
        case MonomialOrder::Kind::grevlex:
        default:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            for (int i = n - 1; i >= 0; --i) {
                const int d = a[ord.perm[i]] - b[ord.perm[i]];
                if (d != 0) return d < 0 ? 1 : -1;
            }
            return 0;
    }
}

}  // namespace regseq
