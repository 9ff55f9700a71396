#include "qhol/matrix.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Int& IntMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range(fmt::format("matrix index ({},{}) out of {}x{}", r, c, rows_, cols_));
    return data_[static_cast<size_t>(r) * cols_ + c];
}

const Int& IntMatrix::at(int r, int c) const {
    return const_cast<IntMatrix*>(this)->at(r, c);
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument(fmt::format("cannot multiply {}x{} by {}x{}", rows_, cols_,
                                                rhs.rows_, rhs.cols_));
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0)
            return false;
    return true;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int c = 0; c < m.cols(); ++c)
        std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int r = 0; r < m.rows(); ++r)
        std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    const int n = std::min(m.rows(), m.cols());
    std::vector<Int> diag;
    for (int t = 0; t < n; ++t) {
        // smallest nonzero entry of the remaining block becomes the pivot
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows(); ++r)
            for (int c = t; c < m.cols(); ++c) {
                const Int& v = m.at(r, c);
                if (v == 0)
                    continue;
                if (pr < 0 || abs_int(v) < abs_int(m.at(pr, pc))) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0)
            break;  // remaining block is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (bool settled = false; !settled;) {
            // clear column t with row operations, re-picking small pivots
            for (bool clear = false; !clear;) {
                clear = true;
                for (int r = t + 1; r < m.rows(); ++r) {
                    if (m.at(r, t) == 0)
                        continue;
                    const Int q = m.at(r, t) / m.at(t, t);
                    if (q != 0)
                        for (int c = t; c < m.cols(); ++c)
                            m.at(r, c) -= q * m.at(t, c);
                    if (m.at(r, t) != 0) {
                        swap_rows(m, t, r);  // remainder is a strictly smaller pivot
                        clear = false;
                    }
                }
            }
            for (bool clear = false; !clear;) {
                clear = true;
                for (int c = t + 1; c < m.cols(); ++c) {
                    if (m.at(t, c) == 0)
                        continue;
                    const Int q = m.at(t, c) / m.at(t, t);
                    if (q != 0)
                        for (int r = t; r < m.rows(); ++r)
                            m.at(r, c) -= q * m.at(r, t);
                    if (m.at(t, c) != 0) {
                        swap_cols(m, t, c);
                        clear = false;
                    }
                }
            }
            // the column pass may have refilled the row; recheck
            bool row_clear = true;
            for (int r = t + 1; r < m.rows() && row_clear; ++r)
                if (m.at(r, t) != 0)
                    row_clear = false;
            if (!row_clear)
                continue;

            // pivot must divide every remaining entry for the invariant chain
            settled = true;
            for (int r = t + 1; r < m.rows() && settled; ++r)
                for (int c = t + 1; c < m.cols(); ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        for (int cc = t; cc < m.cols(); ++cc)
                            m.at(t, cc) += m.at(r, cc);
                        settled = false;
                        break;
                    }
        }
        if (m.at(t, t) < 0)
            m.at(t, t) = -m.at(t, t);
        diag.push_back(m.at(t, t));
    }
    return SmithResult{std::move(diag)};
}

int rank_mod_p(const IntMatrix& m, long p) {
    if (p < 2 || !is_prime(Int(p)))
        throw std::invalid_argument(fmt::format("rank_mod_p requires a prime modulus, got {}", p));
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            Int v = m.at(r, c) % p;
            if (v < 0)
                v += p;
            a[r][c] = static_cast<long>(v);
        }
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        // normalize pivot row to 1 via Fermat inverse
        long inv = 1, base = a[rank][c] % p, e = p - 2;
        while (e > 0) {
            if (e & 1)
                inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int cc = c; cc < m.cols(); ++cc)
            a[rank][cc] = a[rank][cc] * inv % p;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const long f = a[r][c];
            for (int cc = c; cc < m.cols(); ++cc)
                a[r][cc] = (a[r][cc] - f * a[rank][cc] % p + p * p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace qhol
