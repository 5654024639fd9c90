#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace regseq {

// Sparse row over the integers: (column, coefficient) with strictly
// increasing columns and nonzero coefficients.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

// Incremental fraction-free Gaussian elimination. Feed rows one at a time;
// rank() is exact over the rationals. Deterministic for a fixed feed order.
class IntegerEchelon {
public:
    // Reduces the row against the current echelon and absorbs what is left.
    // Returns true when the row was independent (rank grew).
    bool add_row(SparseRow row);

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // pivots_[k] = echelon row with pivot column pivot_cols_[k]; rows kept
    // primitive (content 1, positive pivot). Sorted by pivot column.
    std::vector<SparseRow> pivots_;
    std::vector<int> pivot_cols_;
};

}  // namespace regseq
