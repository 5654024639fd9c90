#include "regseq/linalg.hpp"

#include <algorithm>

namespace regseq {

namespace {

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : row) v /= g;
    }
}

// row <- a*row - b*piv, sparse merge. Preserves increasing column order.
SparseRow combine(const SparseRow& row, const mpz_class& a, const mpz_class& b,
                  const SparseRow& piv) {
    SparseRow out;
    out.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.push_back({row[i].first, a * row[i].second});
            ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
            out.push_back({piv[j].first, -b * piv[j].second});
            ++j;
        } else {
            mpz_class v = a * row[i].second - b * piv[j].second;
            if (v != 0) out.push_back({row[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool IntegerEchelon::add_row(SparseRow row) {
    make_primitive(row);
    while (!row.empty()) {
        int col = row.front().first;
        auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), col);
        if (it == pivot_cols_.end() || *it != col) {
            size_t at = static_cast<size_t>(it - pivot_cols_.begin());
            pivot_cols_.insert(it, col);
            pivots_.insert(pivots_.begin() + at, std::move(row));
            return true;
        }
        const SparseRow& piv = pivots_[static_cast<size_t>(it - pivot_cols_.begin())];
        mpz_class gamma;
        mpz_gcd(gamma.get_mpz_t(), row.front().second.get_mpz_t(),
                piv.front().second.get_mpz_t());
        mpz_class a = piv.front().second / gamma;
        mpz_class b = row.front().second / gamma;
        row = combine(row, a, b, piv);
        make_primitive(row);
    }
    return false;
}

}  // namespace regseq
