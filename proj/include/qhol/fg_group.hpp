#pragma once

#include <string>
#include <vector>

#include "qhol/int_types.hpp"

namespace qhol {

// Finitely generated abelian group in invariant-factor form: a free rank plus
// torsion factors d_1 | d_2 | ... with every d_i >= 2.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;  // the zero group

    static FgAbelianGroup zero();
    static FgAbelianGroup free(int rank);
    static FgAbelianGroup cyclic(const Int& order);  // order >= 1; order 1 is the zero group
    // Normalizes an arbitrary list of cyclic orders into invariant factors.
    static FgAbelianGroup make(int free_rank, std::vector<Int> cyclic_orders);

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_free() const { return torsion_.empty(); }
    bool is_cyclic() const;

    int rational_rank() const { return free_rank_; }
    Int torsion_order() const;

    FgAbelianGroup direct_sum(const FgAbelianGroup& rhs) const;
    FgAbelianGroup p_part(const Int& p) const;  // p-primary torsion subgroup, p prime

    bool operator==(const FgAbelianGroup& rhs) const = default;

    // "0", "Z", "Z+Z", "Z_2", "Z+Z_2+Z_24", ...
    std::string to_string() const;

private:
    int free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Invariant factors of the direct sum of the given cyclic groups.
std::vector<Int> normalize_cyclic_orders(std::vector<Int> orders);

// All isomorphism types of quotients of a finite group, sorted by order then
// lexicographically by factors.  Used to enumerate candidate sets when an
// exact sequence only pins a group down to a quotient of a known one.
std::vector<FgAbelianGroup> quotient_types(const FgAbelianGroup& g);

}  // namespace qhol
