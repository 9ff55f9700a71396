#pragma once

// Reference Smith normal form used only by tests: plain row/column reduction
// with the first nonzero entry as pivot (no pivot-size heuristics), kept
// independent of the library implementation.

#include <vector>

#include "qhol/matrix.hpp"

namespace qhol_test {

inline std::vector<qhol::Int> reference_invariant_factors(qhol::IntMatrix m) {
    using qhol::Int;
    std::vector<Int> diag;
    const int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows() && pr < 0; ++r)
            for (int c = t; c < m.cols(); ++c)
                if (m.at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0)
            break;
        for (int c = 0; c < m.cols(); ++c)
            std::swap(m.at(t, c), m.at(pr, c));
        for (int r = 0; r < m.rows(); ++r)
            std::swap(m.at(r, t), m.at(r, pc));

        bool settled = false;
        while (!settled) {
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int r = t + 1; r < m.rows(); ++r) {
                    while (m.at(r, t) != 0) {
                        const Int q = m.at(r, t) / m.at(t, t);
                        for (int c = t; c < m.cols(); ++c)
                            m.at(r, c) -= q * m.at(t, c);
                        if (m.at(r, t) != 0) {
                            for (int c = t; c < m.cols(); ++c)
                                std::swap(m.at(t, c), m.at(r, c));
                            dirty = true;
                        }
                    }
                }
                for (int c = t + 1; c < m.cols(); ++c) {
                    while (m.at(t, c) != 0) {
                        const Int q = m.at(t, c) / m.at(t, t);
                        for (int r = t; r < m.rows(); ++r)
                            m.at(r, c) -= q * m.at(r, t);
                        if (m.at(t, c) != 0) {
                            for (int r = t; r < m.rows(); ++r)
                                std::swap(m.at(r, t), m.at(r, c));
                            dirty = true;
                        }
                    }
                }
            }
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
        diag.push_back(m.at(t, t) < 0 ? Int(-m.at(t, t)) : m.at(t, t));
    }
    return diag;
}

}  // namespace qhol_test
