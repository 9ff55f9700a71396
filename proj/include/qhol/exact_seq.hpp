#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhol/fg_group.hpp"

namespace qhol {

// A term of an exact sequence: a known group, a named unknown, or a finite
// set of candidate isomorphism types.
struct GroupTerm {
    enum class Kind { known, unknown, candidates };

    Kind kind = Kind::unknown;
    std::string label;
    FgAbelianGroup value;                     // kind == known
    std::vector<FgAbelianGroup> candidates;   // kind == candidates, nonempty

    static GroupTerm known(std::string label, FgAbelianGroup value);
    static GroupTerm unknown(std::string label);
    static GroupTerm with_candidates(std::string label, std::vector<FgAbelianGroup> candidates);

    bool is_known() const { return kind == Kind::known; }
    std::string to_string() const;
};

enum class ArrowFact { zero_map, injective, surjective, nontrivial };

struct Arrow {
    std::set<ArrowFact> facts;
    std::optional<int> image_free_rank;

    bool has(ArrowFact f) const { return facts.count(f) > 0; }
};

struct ExactSequence {
    std::vector<GroupTerm> terms;
    std::vector<Arrow> arrows;  // arrows[i]: terms[i] -> terms[i+1]
};

struct Deduction {
    std::string rule;
    std::string detail;
};

struct SolveOutcome {
    ExactSequence sequence;
    std::vector<Deduction> trace;
    bool contradiction = false;
    std::string contradiction_detail;
};

// Fixed-point pass over the deduction rules:
//   R1  a term flanked by zero maps is zero
//   R2  short exact with free ends splits: 0 -> A -> B -> C -> 0, A, C free
//   R3  a surjection from a known finite group onto an unknown leaves the
//       candidate set of its quotient types
//   R4  a fully known window bounded by zero maps has alternating rank sum 0
//   R5  a nontrivial map from a known cyclic group into Z_2 is surjective
// plus the exactness bookkeeping (zero/injective/surjective propagation,
// image and kernel tracking).  Known terms are never changed; the outcome
// carries one trace entry per deduction and reports inconsistencies instead
// of guessing.
SolveOutcome solve_exact_sequence(ExactSequence sequence);

}  // namespace qhol
