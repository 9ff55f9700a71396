#include "qhol/homology.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

CoeffSystem CoeffSystem::Zp(long p) {
    if (!is_prime(Int(p)))
        throw std::invalid_argument(fmt::format("Z/{} is not a field, {} is not prime", p, p));
    return CoeffSystem{true, p};
}

std::string CoeffSystem::to_string() const {
    return modular ? fmt::format("Z/{}", p) : "Z";
}

CoeffSystem parse_coeff(std::string_view text) {
    if (text == "Z")
        return CoeffSystem::Z();
    if (text.starts_with("Z/")) {
        long p = 0;
        const char* begin = text.data() + 2;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, p);
        if (ec == std::errc() && ptr == end)
            return CoeffSystem::Zp(p);
    }
    throw std::invalid_argument(fmt::format("cannot parse coefficients '{}': expected Z or Z/<p>", text));
}

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty())
        throw std::invalid_argument("chain complex needs at least degree 0");
    if (boundaries_.size() + 1 != ranks_.size())
        throw std::invalid_argument("chain complex needs one boundary per degree >= 1");
    for (int d = 1; d <= top_degree(); ++d) {
        const IntMatrix& b = boundaries_[d - 1];
        if (b.rows() != ranks_[d - 1] || b.cols() != ranks_[d])
            throw std::invalid_argument(fmt::format(
                "boundary {} has shape {}x{}, expected {}x{}", d, b.rows(), b.cols(),
                ranks_[d - 1], ranks_[d]));
    }
}

int ChainComplex::rank(int d) const {
    if (d < 0 || d > top_degree())
        return 0;
    return ranks_[static_cast<size_t>(d)];
}

const IntMatrix& ChainComplex::boundary(int d) const {
    if (d < 1 || d > top_degree())
        throw std::out_of_range(fmt::format("no boundary matrix in degree {}", d));
    return boundaries_[static_cast<size_t>(d) - 1];
}

bool ChainComplex::is_valid() const {
    for (int d = 2; d <= top_degree(); ++d)
        if (!boundary(d - 1).multiply(boundary(d)).is_zero())
            return false;
    return true;
}

ChainComplex ChainComplex::suspended() const {
    // single-basepoint model: drop the 0-cell, shift everything up one
    if (rank(0) > 1)
        throw std::invalid_argument("suspension model requires at most one 0-cell");
    if (rank(0) == 1 && rank(1) > 0 && !boundary(1).is_zero())
        throw std::invalid_argument("suspension model requires a vanishing first boundary");
    std::vector<int> ranks{1, 0};
    std::vector<IntMatrix> boundaries{IntMatrix(1, 0)};
    for (int d = 1; d <= top_degree(); ++d) {
        ranks.push_back(rank(d));
        if (d == 1)
            boundaries.push_back(IntMatrix(0, rank(1)));
        else
            boundaries.push_back(boundary(d));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

HomologyResult::HomologyResult(CoeffSystem coeff, std::vector<FgAbelianGroup> groups,
                               int valid_to)
    : coeff_(coeff), groups_(std::move(groups)), valid_to_(valid_to) {
    if (valid_to_ < 0)
        throw std::invalid_argument("valid_to must be nonnegative");
    groups_.resize(static_cast<size_t>(valid_to_) + 1);
}

HomologyResult HomologyResult::zero(CoeffSystem coeff, int valid_to) {
    return HomologyResult(coeff, {}, valid_to);
}

const FgAbelianGroup& HomologyResult::at(int degree) const {
    static const FgAbelianGroup zero_group;
    if (degree < 0)
        return zero_group;
    if (degree > valid_to_)
        throw std::out_of_range(fmt::format(
            "homology at degree {} requested, result only valid through {}", degree, valid_to_));
    return groups_[static_cast<size_t>(degree)];
}

void HomologyResult::set(int degree, FgAbelianGroup g) {
    if (degree < 0 || degree > valid_to_)
        throw std::out_of_range("homology degree out of range");
    groups_[static_cast<size_t>(degree)] = std::move(g);
}

int HomologyResult::first_support() const {
    for (int d = 0; d <= valid_to_; ++d)
        if (!groups_[static_cast<size_t>(d)].is_zero())
            return d;
    return valid_to_ + 1;
}

HomologyResult HomologyResult::reduced() const {
    HomologyResult out = *this;
    const FgAbelianGroup& h0 = out.groups_[0];
    if (h0.free_rank() < 1)
        throw std::invalid_argument("cannot reduce: degree 0 has no free summand");
    out.groups_[0] = FgAbelianGroup::make(h0.free_rank() - 1, h0.torsion());
    return out;
}

HomologyResult HomologyResult::shifted(int amount) const {
    if (amount < 0)
        throw std::invalid_argument("negative homology shift");
    std::vector<FgAbelianGroup> groups(static_cast<size_t>(valid_to_ + amount) + 1);
    for (int d = 0; d <= valid_to_; ++d)
        groups[static_cast<size_t>(d + amount)] = groups_[static_cast<size_t>(d)];
    return HomologyResult(coeff_, std::move(groups), valid_to_ + amount);
}

HomologyResult HomologyResult::truncated(int new_valid_to) const {
    if (new_valid_to > valid_to_)
        throw std::invalid_argument("cannot extend validity by truncation");
    std::vector<FgAbelianGroup> groups(groups_.begin(),
                                       groups_.begin() + new_valid_to + 1);
    return HomologyResult(coeff_, std::move(groups), new_valid_to);
}

bool HomologyResult::degreewise_equal(const HomologyResult& rhs, int up_to) const {
    if (up_to > valid_to_ || up_to > rhs.valid_to_)
        throw std::invalid_argument("comparison beyond a result's valid range");
    for (int d = 0; d <= up_to; ++d)
        if (!(at(d) == rhs.at(d)))
            return false;
    return true;
}

namespace {

FgAbelianGroup homology_in_degree(const ChainComplex& complex, int d, const CoeffSystem& coeff) {
    const int cells = complex.rank(d);
    if (coeff.modular) {
        const int out_rank = d >= 1 ? rank_mod_p(complex.boundary(d), coeff.p) : 0;
        const int in_rank =
            d + 1 <= complex.top_degree() ? rank_mod_p(complex.boundary(d + 1), coeff.p) : 0;
        return FgAbelianGroup::free(cells - out_rank - in_rank);
    }
    const SmithResult out_snf =
        d >= 1 ? smith_normal_form(complex.boundary(d)) : SmithResult{};
    const SmithResult in_snf = d + 1 <= complex.top_degree()
                                   ? smith_normal_form(complex.boundary(d + 1))
                                   : SmithResult{};
    std::vector<Int> torsion;
    for (const Int& f : in_snf.invariant_factors)
        if (f > 1)
            torsion.push_back(f);
    return FgAbelianGroup::make(cells - out_snf.rank() - in_snf.rank(), std::move(torsion));
}

}  // namespace

HomologyResult homology_of_complex(const ChainComplex& complex, CoeffSystem coeff,
                                   ExecutionPolicy policy) {
    if (!complex.is_valid())
        throw std::invalid_argument("not a chain complex: some composite boundary is nonzero");
    const int top = complex.top_degree();
    std::vector<FgAbelianGroup> groups(static_cast<size_t>(top) + 1);
    if (policy == ExecutionPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int d = 0; d <= top; ++d)
            groups[static_cast<size_t>(d)] = homology_in_degree(complex, d, coeff);
    } else {
        for (int d = 0; d <= top; ++d)
            groups[static_cast<size_t>(d)] = homology_in_degree(complex, d, coeff);
    }
    return HomologyResult(coeff, std::move(groups), top);
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument(fmt::format("bad integer '{}' in space name", s));
        return value;
    };
    auto parse_one = [&](std::string_view s, std::string_view prefix) -> std::optional<int> {
        if (!s.starts_with(prefix) || !s.ends_with(")"))
            return std::nullopt;
        return parse_int(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    };

    SpaceSpec spec;
    if (text.starts_with("S(") && text.ends_with(")")) {
        spec.kind = Kind::suspension;
        spec.inner = std::make_shared<SpaceSpec>(
            parse(text.substr(2, text.size() - 3)));
        return spec;
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto top = parse_one(text.substr(0, slash), "CP(");
        auto bottom = parse_one(text.substr(slash + 1), "CP(");
        if (!top || !bottom)
            throw std::invalid_argument(
                fmt::format("bad space '{}': expected CP(n)/CP(m)", text));
        spec.kind = Kind::stunted_cp;
        spec.n = *top;
        spec.m = *bottom;
        if (spec.m >= spec.n)
            throw std::invalid_argument(
                fmt::format("bad stunted space '{}': need m < n", text));
        return spec;
    }
    if (auto n = parse_one(text, "CP(")) {
        spec.kind = Kind::cp;
        spec.n = *n;
        return spec;
    }
    if (auto n = parse_one(text, "RP(")) {
        spec.kind = Kind::rp;
        spec.n = *n;
        return spec;
    }
    throw std::invalid_argument(fmt::format(
        "unknown space '{}': expected CP(n), RP(n), CP(n)/CP(m) or S(...)", text));
}

std::string SpaceSpec::to_string() const {
    switch (kind) {
        case Kind::cp:
            return fmt::format("CP({})", n);
        case Kind::rp:
            return fmt::format("RP({})", n);
        case Kind::stunted_cp:
            return fmt::format("CP({})/CP({})", n, m);
        case Kind::suspension:
            return fmt::format("S({})", inner->to_string());
    }
    return {};
}

ChainComplex standard_space_complex(const SpaceSpec& space, int truncation) {
    if (truncation < 0)
        throw std::invalid_argument("truncation must be nonnegative");
    switch (space.kind) {
        case SpaceSpec::Kind::cp: {
            if (space.n < 0)
                throw std::invalid_argument("CP(n) requires n >= 0");
            const int top = std::min(2 * space.n, truncation);
            std::vector<int> ranks(static_cast<size_t>(top) + 1, 0);
            std::vector<IntMatrix> boundaries;
            for (int d = 0; d <= top; ++d)
                ranks[static_cast<size_t>(d)] = d % 2 == 0 ? 1 : 0;
            for (int d = 1; d <= top; ++d)
                boundaries.emplace_back(ranks[d - 1], ranks[d]);
            return ChainComplex(std::move(ranks), std::move(boundaries));
        }
        case SpaceSpec::Kind::rp: {
            if (space.n < 0)
                throw std::invalid_argument("RP(n) requires n >= 0");
            const int top = std::min(space.n, truncation);
            std::vector<int> ranks(static_cast<size_t>(top) + 1, 1);
            std::vector<IntMatrix> boundaries;
            for (int d = 1; d <= top; ++d) {
                IntMatrix b(1, 1);
                b.at(0, 0) = d % 2 == 0 ? 2 : 0;
                boundaries.push_back(std::move(b));
            }
            return ChainComplex(std::move(ranks), std::move(boundaries));
        }
        case SpaceSpec::Kind::stunted_cp: {
            const int top = std::min(2 * space.n, truncation);
            std::vector<int> ranks(static_cast<size_t>(std::max(top, 0)) + 1, 0);
            std::vector<IntMatrix> boundaries;
            for (int d = 2 * space.m + 2; d <= top; d += 2)
                ranks[static_cast<size_t>(d)] = 1;
            for (int d = 1; d <= top; ++d)
                boundaries.emplace_back(ranks[d - 1], ranks[d]);
            return ChainComplex(std::move(ranks), std::move(boundaries));
        }
        case SpaceSpec::Kind::suspension:
            return standard_space_complex(*space.inner, std::max(truncation - 1, 0))
                .suspended();
    }
    throw std::logic_error("unreachable space kind");
}

namespace {

constexpr int kInfinitySentinel = std::numeric_limits<int>::max() / 4;

// tensor and Tor of finitely generated abelian groups
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders;
    for (const Int& d : a.torsion())
        for (int i = 0; i < b.free_rank(); ++i)
            orders.push_back(d);
    for (const Int& e : b.torsion())
        for (int i = 0; i < a.free_rank(); ++i)
            orders.push_back(e);
    for (const Int& d : a.torsion())
        for (const Int& e : b.torsion())
            orders.push_back(gcd(d, e));
    return FgAbelianGroup::make(a.free_rank() * b.free_rank(), std::move(orders));
}

FgAbelianGroup tor_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders;
    for (const Int& d : a.torsion())
        for (const Int& e : b.torsion())
            orders.push_back(gcd(d, e));
    return FgAbelianGroup::make(0, std::move(orders));
}

}  // namespace

HomologyResult kunneth_convolution(const HomologyResult& a, const HomologyResult& b) {
    if (!(a.coeff() == b.coeff()))
        throw std::invalid_argument("Kunneth factors carry different coefficients");
    const int sa = std::min(a.first_support(), kInfinitySentinel);
    const int sb = std::min(b.first_support(), kInfinitySentinel);
    // degree d is complete as long as no unseen degree of either factor can reach it
    const int valid_to = std::min({a.valid_to() + sb, b.valid_to() + sa, kInfinitySentinel});
    HomologyResult out = HomologyResult::zero(a.coeff(), valid_to);
    for (int d = 0; d <= valid_to; ++d) {
        FgAbelianGroup g;
        for (int i = std::max(0, d - b.valid_to()); i <= std::min(d, a.valid_to()); ++i)
            g = g.direct_sum(tensor(a.at(i), b.at(d - i)));
        if (!a.coeff().modular)
            for (int i = std::max(0, d - 1 - b.valid_to()); i <= std::min(d - 1, a.valid_to());
                 ++i)
                g = g.direct_sum(tor_product(a.at(i), b.at(d - 1 - i)));
        out.set(d, std::move(g));
    }
    return out;
}

HomologyResult smash_homology(const HomologyResult& a, const HomologyResult& b) {
    return kunneth_convolution(a, b);
}

HomologyResult thom_space_homology(const HomologyResult& base, int complex_rank) {
    if (complex_rank < 1)
        throw std::invalid_argument("thom_space_homology requires complex rank >= 1");
    return base.shifted(2 * complex_rank);
}

std::vector<int> mod_p_dimensions_from_integral(const HomologyResult& integral, long p) {
    if (integral.coeff().modular)
        throw std::invalid_argument("expected an integral homology result");
    std::vector<int> dims(static_cast<size_t>(integral.valid_to()) + 1, 0);
    auto p_factors = [&](const FgAbelianGroup& g) {
        int count = 0;
        for (const Int& d : g.torsion())
            if (d % p == 0)
                ++count;
        return count;
    };
    for (int d = 0; d <= integral.valid_to(); ++d) {
        int dim = integral.at(d).free_rank() + p_factors(integral.at(d));
        if (d >= 1)
            dim += p_factors(integral.at(d - 1));
        dims[static_cast<size_t>(d)] = dim;
    }
    return dims;
}

}  // namespace qhol
