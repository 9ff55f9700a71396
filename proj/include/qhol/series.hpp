#pragma once

#include <vector>

#include "qhol/int_types.hpp"

namespace qhol {

// Formal power series over Z truncated at a fixed maximal degree ("cap").
// Values are immutable once built; arithmetic results carry the minimum of
// the operand caps.  Reading a coefficient above the cap is an error, not a
// zero: truncation loss must stay visible to the caller.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cap);

    static TruncatedSeries constant(const Int& value, int cap);
    static TruncatedSeries monomial(const Int& value, int degree, int cap);

    int cap() const { return cap_; }
    const Int& at(int degree) const;
    void set(int degree, Int value);

    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    bool operator==(const TruncatedSeries& rhs) const = default;

    // Multiplicative inverse up to the cap; the constant term must be +-1.
    TruncatedSeries inverse() const;

private:
    int cap_;
    std::vector<Int> coeffs_;
};

// 1 - t^step, the factor whose inverse generates partitions with part `step`.
TruncatedSeries one_minus_power(int step, int cap);

// prod_{i=1..parts_max} 1/(1-t^i); parts_max = 0 yields the constant 1.
TruncatedSeries partition_series(int parts_max, int cap);

// p_k(m): partitions of m into parts of size at most k (k >= 1), read off the
// generating function above.
Int partition_count(int parts_max, int total);

// Poincare series of the degreewise m-th symmetric power of a graded vector
// space with dimensions given by `f` (all coefficients must be nonnegative).
// Computed as the z^m coefficient of prod_d (1 - z t^d)^(-f_d).
TruncatedSeries symmetric_power(const TruncatedSeries& f, int m);

}  // namespace qhol
