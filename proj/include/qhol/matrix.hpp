#pragma once

#include <vector>

#include "qhol/int_types.hpp"

namespace qhol {

class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c);
    const Int& at(int r, int c) const;

    IntMatrix multiply(const IntMatrix& rhs) const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<Int> data_;  // row-major
};

struct SmithResult {
    // nonzero diagonal entries, positive, each dividing the next
    std::vector<Int> invariant_factors;
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// Exact Smith normal form over Z.  Pivots are chosen by minimal absolute
// value to keep intermediate entries small; no modular shortcuts.
SmithResult smith_normal_form(IntMatrix m);

// Rank over the prime field F_p.
int rank_mod_p(const IntMatrix& m, long p);

}  // namespace qhol
