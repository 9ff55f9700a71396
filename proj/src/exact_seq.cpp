#include "qhol/exact_seq.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

GroupTerm GroupTerm::known(std::string label, FgAbelianGroup value) {
    GroupTerm t;
    t.kind = Kind::known;
    t.label = std::move(label);
    t.value = std::move(value);
    return t;
}

GroupTerm GroupTerm::unknown(std::string label) {
    GroupTerm t;
    t.kind = Kind::unknown;
    t.label = std::move(label);
    return t;
}

GroupTerm GroupTerm::with_candidates(std::string label,
                                     std::vector<FgAbelianGroup> candidates) {
    if (candidates.empty())
        throw std::invalid_argument("candidate set must be nonempty");
    if (candidates.size() == 1)
        return known(std::move(label), candidates.front());
    GroupTerm t;
    t.kind = Kind::candidates;
    t.label = std::move(label);
    t.candidates = std::move(candidates);
    return t;
}

std::string GroupTerm::to_string() const {
    switch (kind) {
        case Kind::known:
            return value.to_string();
        case Kind::unknown:
            return "?" + label;
        case Kind::candidates: {
            // print larger candidates first, matching "Z_2 or 0"
            std::vector<FgAbelianGroup> sorted = candidates;
            std::sort(sorted.begin(), sorted.end(),
                      [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
                          if (a.free_rank() != b.free_rank())
                              return a.free_rank() > b.free_rank();
                          return a.torsion_order() > b.torsion_order();
                      });
            std::string out;
            for (const FgAbelianGroup& c : sorted) {
                if (!out.empty())
                    out += " or ";
                out += c.to_string();
            }
            return out;
        }
    }
    return {};
}

namespace {

class Solver {
public:
    explicit Solver(ExactSequence seq) : seq_(std::move(seq)) {
        if (seq_.terms.size() < 2)
            throw std::invalid_argument("exact sequence needs at least two terms");
        if (seq_.arrows.size() + 1 != seq_.terms.size())
            throw std::invalid_argument("exact sequence needs one arrow between adjacent terms");
        images_.resize(seq_.arrows.size());
    }

    SolveOutcome run() {
        bool changed = true;
        while (changed && !contradiction_) {
            changed = false;
            changed |= pass_flag_consistency();
            changed |= pass_zero_endpoints();
            changed |= pass_exactness_flags();
            changed |= pass_r5();
            changed |= pass_r1();
            changed |= pass_images();
            changed |= pass_kernel();
            changed |= pass_iso();
            changed |= pass_extension();
            changed |= pass_r3();
            if (!contradiction_)
                pass_r4();
        }
        SolveOutcome out;
        out.sequence = std::move(seq_);
        out.trace = std::move(trace_);
        out.contradiction = contradiction_;
        out.contradiction_detail = contradiction_detail_;
        return out;
    }

private:
    ExactSequence seq_;
    std::vector<std::optional<FgAbelianGroup>> images_;
    std::vector<Deduction> trace_;
    bool contradiction_ = false;
    std::string contradiction_detail_;

    GroupTerm& term(size_t i) { return seq_.terms[i]; }
    Arrow& arrow(size_t i) { return seq_.arrows[i]; }
    size_t narrows() const { return seq_.arrows.size(); }

    std::string arrow_name(size_t i) const {
        return fmt::format("{} -> {}", seq_.terms[i].label, seq_.terms[i + 1].label);
    }

    void deduce(const std::string& rule, std::string detail) {
        trace_.push_back(Deduction{rule, std::move(detail)});
    }

    void contradict(std::string detail) {
        if (contradiction_)
            return;
        contradiction_ = true;
        contradiction_detail_ = std::move(detail);
        trace_.push_back(Deduction{"contradiction", contradiction_detail_});
    }

    bool add_fact(size_t i, ArrowFact f, const std::string& rule, const std::string& why) {
        if (arrow(i).has(f))
            return false;
        arrow(i).facts.insert(f);
        static const char* names[] = {"zero", "injective", "surjective", "nontrivial"};
        deduce(rule, fmt::format("arrow {} is {} ({})", arrow_name(i),
                                 names[static_cast<int>(f)], why));
        return true;
    }

    bool set_term(size_t i, const FgAbelianGroup& value, const std::string& rule,
                  const std::string& why) {
        GroupTerm& t = term(i);
        switch (t.kind) {
            case GroupTerm::Kind::known:
                if (!(t.value == value))
                    contradict(fmt::format("{} is known to be {} but {} forces {} ({})",
                                           t.label, t.value.to_string(), rule,
                                           value.to_string(), why));
                return false;
            case GroupTerm::Kind::candidates:
                if (std::find(t.candidates.begin(), t.candidates.end(), value) ==
                    t.candidates.end()) {
                    contradict(fmt::format(
                        "{} forced to {} by {}, outside its candidate set", t.label,
                        value.to_string(), rule));
                    return false;
                }
                [[fallthrough]];
            case GroupTerm::Kind::unknown:
                t.kind = GroupTerm::Kind::known;
                t.value = value;
                t.candidates.clear();
                deduce(rule, fmt::format("{} = {} ({})", t.label, value.to_string(), why));
                return true;
        }
        return false;
    }

    bool set_image(size_t i, const FgAbelianGroup& value, const std::string& rule,
                   const std::string& why) {
        if (images_[i]) {
            if (!(*images_[i] == value))
                contradict(fmt::format("image of {} computed as both {} and {}", arrow_name(i),
                                       images_[i]->to_string(), value.to_string()));
            return false;
        }
        images_[i] = value;
        deduce(rule, fmt::format("im({}) = {} ({})", arrow_name(i), value.to_string(), why));
        return true;
    }

    bool known_zero(size_t term_index) {
        const GroupTerm& t = seq_.terms[term_index];
        return t.is_known() && t.value.is_zero();
    }

    bool pass_flag_consistency() {
        for (size_t i = 0; i < narrows() && !contradiction_; ++i) {
            const Arrow& a = arrow(i);
            if (a.has(ArrowFact::zero_map) && a.has(ArrowFact::nontrivial))
                contradict(fmt::format("arrow {} is marked both zero and nontrivial",
                                       arrow_name(i)));
            if (a.has(ArrowFact::zero_map) && a.has(ArrowFact::surjective) &&
                term(i + 1).is_known() && !term(i + 1).value.is_zero())
                contradict(fmt::format("arrow {} cannot be a zero surjection onto {}",
                                       arrow_name(i), term(i + 1).value.to_string()));
            if (a.has(ArrowFact::zero_map) && a.has(ArrowFact::injective) &&
                term(i).is_known() && !term(i).value.is_zero())
                contradict(fmt::format("arrow {} cannot be an injective zero map from {}",
                                       arrow_name(i), term(i).value.to_string()));
        }
        return false;
    }

    bool pass_zero_endpoints() {
        bool changed = false;
        for (size_t i = 0; i < narrows(); ++i) {
            if (known_zero(i))
                changed |= add_fact(i, ArrowFact::zero_map, "exactness", "source is 0");
            if (known_zero(i + 1))
                changed |= add_fact(i, ArrowFact::zero_map, "exactness", "target is 0");
        }
        return changed;
    }

    bool pass_exactness_flags() {
        bool changed = false;
        for (size_t node = 1; node + 1 <= narrows(); ++node) {
            const size_t in = node - 1, out = node;
            if (arrow(in).has(ArrowFact::zero_map))
                changed |= add_fact(out, ArrowFact::injective, "exactness",
                                    fmt::format("kernel at {} is the image of a zero map",
                                                term(node).label));
            if (arrow(out).has(ArrowFact::injective))
                changed |= add_fact(in, ArrowFact::zero_map, "exactness",
                                    fmt::format("image at {} is the kernel of an injection",
                                                term(node).label));
            if (arrow(out).has(ArrowFact::zero_map))
                changed |= add_fact(in, ArrowFact::surjective, "exactness",
                                    fmt::format("image at {} is the kernel of a zero map",
                                                term(node).label));
            if (arrow(in).has(ArrowFact::surjective))
                changed |= add_fact(out, ArrowFact::zero_map, "exactness",
                                    fmt::format("kernel at {} is everything", term(node).label));
        }
        return changed;
    }

    bool pass_r5() {
        bool changed = false;
        for (size_t i = 0; i < narrows(); ++i) {
            if (!arrow(i).has(ArrowFact::nontrivial) || arrow(i).has(ArrowFact::surjective))
                continue;
            if (term(i).is_known() && term(i).value.is_cyclic() && term(i + 1).is_known() &&
                term(i + 1).value == FgAbelianGroup::cyclic(2))
                changed |= add_fact(i, ArrowFact::surjective, "R5",
                                    "nontrivial map from a cyclic group onto Z_2");
        }
        return changed;
    }

    bool pass_r1() {
        bool changed = false;
        for (size_t node = 1; node + 1 <= narrows(); ++node)
            if (arrow(node - 1).has(ArrowFact::zero_map) &&
                arrow(node).has(ArrowFact::zero_map) && !term(node).is_known())
                changed |= set_term(node, FgAbelianGroup::zero(), "R1",
                                    "flanked by zero maps");
        return changed;
    }

    bool pass_images() {
        bool changed = false;
        for (size_t i = 0; i < narrows(); ++i) {
            if (images_[i])
                continue;
            if (arrow(i).has(ArrowFact::zero_map))
                changed |= set_image(i, FgAbelianGroup::zero(), "exactness", "zero map");
            else if (arrow(i).has(ArrowFact::injective) && term(i).is_known())
                changed |= set_image(i, term(i).value, "exactness", "injective from a known group");
            else if (arrow(i).has(ArrowFact::surjective) && term(i + 1).is_known())
                changed |= set_image(i, term(i + 1).value, "exactness",
                                     "surjective onto a known group");
        }
        return changed;
    }

    std::optional<int> image_rank(size_t i) const {
        if (images_[i])
            return images_[i]->free_rank();
        if (seq_.arrows[i].image_free_rank)
            return seq_.arrows[i].image_free_rank;
        if (seq_.terms[i].is_known() && seq_.terms[i].value.is_finite())
            return 0;  // image of a finite group is finite
        return std::nullopt;
    }

    bool pass_kernel() {
        // ker(arrow out of node) = im(arrow into node); when the node group is
        // free, its subgroups are free and the rank is forced
        bool changed = false;
        for (size_t node = 1; node + 1 <= narrows(); ++node) {
            const size_t in = node - 1, out = node;
            if (images_[in])
                continue;
            const GroupTerm& t = term(node);
            if (!t.is_known() || !t.value.is_free())
                continue;
            const std::optional<int> out_rank = image_rank(out);
            if (!out_rank)
                continue;
            const int kernel_rank = t.value.free_rank() - *out_rank;
            if (kernel_rank < 0) {
                contradict(fmt::format("image of {} has rank {} > rank of {}", arrow_name(out),
                                       *out_rank, t.label));
                return changed;
            }
            changed |= set_image(in, FgAbelianGroup::free(kernel_rank), "kernel",
                                 fmt::format("kernel of {} inside free {}", arrow_name(out),
                                             t.label));
        }
        return changed;
    }

    bool pass_iso() {
        bool changed = false;
        for (size_t i = 0; i < narrows(); ++i) {
            if (!arrow(i).has(ArrowFact::injective) || !arrow(i).has(ArrowFact::surjective))
                continue;
            if (term(i).is_known() && !term(i + 1).is_known())
                changed |= set_term(i + 1, term(i).value, "iso",
                                    fmt::format("{} is an isomorphism", arrow_name(i)));
            else if (term(i + 1).is_known() && !term(i).is_known())
                changed |= set_term(i, term(i + 1).value, "iso",
                                    fmt::format("{} is an isomorphism", arrow_name(i)));
            else if (term(i).is_known() && term(i + 1).is_known() &&
                     !(term(i).value == term(i + 1).value))
                contradict(fmt::format("{} is an isomorphism between {} and {}", arrow_name(i),
                                       term(i).value.to_string(),
                                       term(i + 1).value.to_string()));
        }
        return changed;
    }

    bool pass_extension() {
        // 0 -> im(in) -> t -> im(out) -> 0
        bool changed = false;
        for (size_t node = 1; node + 1 <= narrows(); ++node) {
            const size_t in = node - 1, out = node;
            if (!images_[in] || !images_[out] || term(node).is_known())
                continue;
            const FgAbelianGroup& sub = *images_[in];
            const FgAbelianGroup& quot = *images_[out];
            if (sub.is_zero())
                changed |= set_term(node, quot, "iso",
                                    fmt::format("extension of {} by 0", quot.to_string()));
            else if (quot.is_zero())
                changed |= set_term(node, sub, "iso",
                                    fmt::format("0-quotient extension of {}", sub.to_string()));
            else if (sub.is_free() && quot.is_free())
                changed |= set_term(node, sub.direct_sum(quot), "R2",
                                    fmt::format("free extension {} by {} splits",
                                                quot.to_string(), sub.to_string()));
        }
        return changed;
    }

    bool pass_r3() {
        bool changed = false;
        for (size_t i = 0; i < narrows(); ++i) {
            if (!arrow(i).has(ArrowFact::surjective) || !term(i).is_known() ||
                !term(i).value.is_finite())
                continue;
            GroupTerm& dst = term(i + 1);
            if (dst.is_known()) {
                const auto types = quotient_types(term(i).value);
                if (std::find(types.begin(), types.end(), dst.value) == types.end())
                    contradict(fmt::format("{} surjects onto {}, which is not a quotient of {}",
                                           arrow_name(i), dst.value.to_string(),
                                           term(i).value.to_string()));
                continue;
            }
            std::vector<FgAbelianGroup> types = quotient_types(term(i).value);
            if (dst.kind == GroupTerm::Kind::candidates) {
                std::vector<FgAbelianGroup> narrowed;
                for (const FgAbelianGroup& c : dst.candidates)
                    if (std::find(types.begin(), types.end(), c) != types.end())
                        narrowed.push_back(c);
                if (narrowed.empty()) {
                    contradict(fmt::format("no candidate of {} is a quotient of {}", dst.label,
                                           term(i).value.to_string()));
                    continue;
                }
                if (narrowed.size() == dst.candidates.size())
                    continue;
                types = std::move(narrowed);
            }
            if (types.size() == 1) {
                changed |= set_term(i + 1, types.front(), "R3",
                                    fmt::format("only quotient of {}", term(i).value.to_string()));
            } else {
                dst.kind = GroupTerm::Kind::candidates;
                dst.candidates = types;
                std::string listing;
                for (const FgAbelianGroup& c : dst.candidates) {
                    if (!listing.empty())
                        listing += ", ";
                    listing += c.to_string();
                }
                deduce("R3", fmt::format("{} is a quotient of {}: candidates {{{}}}", dst.label,
                                         term(i).value.to_string(), listing));
                changed = true;
            }
        }
        return changed;
    }

    void pass_r4() {
        // bounded window = flanked by zero maps with all terms known
        for (size_t a = 0; a < seq_.terms.size(); ++a) {
            if (a > 0 && !arrow(a - 1).has(ArrowFact::zero_map))
                continue;
            if (a == 0)
                continue;  // unbounded on the left
            for (size_t b = a; b < seq_.terms.size(); ++b) {
                if (!term(b).is_known())
                    break;
                if (b + 1 > narrows() || !arrow(b).has(ArrowFact::zero_map))
                    continue;
                int sum = 0;
                for (size_t i = a; i <= b; ++i)
                    sum += (i - a) % 2 == 0 ? term(i).value.rational_rank()
                                            : -term(i).value.rational_rank();
                if (sum != 0) {
                    contradict(fmt::format(
                        "window {} .. {} is bounded by zero maps but has alternating rank sum {}",
                        term(a).label, term(b).label, sum));
                    return;
                }
            }
        }
    }
};

}  // namespace

SolveOutcome solve_exact_sequence(ExactSequence sequence) {
    return Solver(std::move(sequence)).run();
}

}  // namespace qhol
