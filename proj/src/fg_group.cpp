#include "qhol/fg_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

namespace {

std::map<Int, int> factorize(Int n) {
    std::map<Int, int> powers;
    for (Int d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++powers[d];
            n /= d;
        }
    if (n > 1)
        ++powers[n];
    return powers;
}

}  // namespace

std::vector<Int> normalize_cyclic_orders(std::vector<Int> orders) {
    // per prime, the exponents sorted descending; invariant factors are built
    // from the largest exponents down
    std::map<Int, std::vector<int>> primaries;
    size_t chain_length = 0;
    for (const Int& order : orders) {
        if (order < 1)
            throw std::invalid_argument("cyclic order must be >= 1");
        for (const auto& [p, e] : factorize(order))
            primaries[p].push_back(e);
    }
    for (auto& [p, exps] : primaries) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chain_length = std::max(chain_length, exps.size());
    }
    std::vector<Int> factors(chain_length, Int(1));
    for (const auto& [p, exps] : primaries)
        for (size_t i = 0; i < exps.size(); ++i) {
            Int q = 1;
            for (int e = 0; e < exps[i]; ++e)
                q *= p;
            factors[i] *= q;
        }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
    return factors;
}

FgAbelianGroup FgAbelianGroup::zero() { return FgAbelianGroup(); }

FgAbelianGroup FgAbelianGroup::free(int rank) {
    if (rank < 0)
        throw std::invalid_argument("free rank must be nonnegative");
    FgAbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& order) {
    return make(0, {order});
}

FgAbelianGroup FgAbelianGroup::make(int free_rank, std::vector<Int> cyclic_orders) {
    FgAbelianGroup g = free(free_rank);
    std::vector<Int> factors = normalize_cyclic_orders(std::move(cyclic_orders));
    for (Int& f : factors)
        if (f > 1)
            g.torsion_.push_back(std::move(f));
    return g;
}

bool FgAbelianGroup::is_cyclic() const {
    return free_rank_ + static_cast<int>(torsion_.size()) <= 1;
}

Int FgAbelianGroup::torsion_order() const {
    Int order = 1;
    for (const Int& d : torsion_)
        order *= d;
    return order;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& rhs) const {
    std::vector<Int> orders = torsion_;
    orders.insert(orders.end(), rhs.torsion_.begin(), rhs.torsion_.end());
    return make(free_rank_ + rhs.free_rank_, std::move(orders));
}

FgAbelianGroup FgAbelianGroup::p_part(const Int& p) const {
    if (!is_prime(p))
        throw std::invalid_argument(fmt::format("p_part requires a prime, got {}", p.str()));
    std::vector<Int> orders;
    for (const Int& d : torsion_) {
        Int q = 1;
        Int rest = d;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        if (q > 1)
            orders.push_back(q);
    }
    return make(0, std::move(orders));
}

std::string FgAbelianGroup::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = 0; i < free_rank_; ++i) {
        if (!out.empty())
            out += "+";
        out += "Z";
    }
    for (const Int& d : torsion_) {
        if (!out.empty())
            out += "+";
        out += "Z_" + d.str();
    }
    return out;
}

namespace {

// e must divide d and sit in an ascending chain above `prev`
void enumerate_quotients(const std::vector<Int>& d, size_t offset, size_t idx,
                         const Int& prev, std::vector<Int>& chain,
                         std::vector<FgAbelianGroup>& out) {
    if (idx == chain.size()) {
        std::vector<Int> orders;
        for (const Int& e : chain)
            if (e > 1)
                orders.push_back(e);
        out.push_back(FgAbelianGroup::make(0, orders));
        return;
    }
    const Int& bound = d[offset + idx];
    for (Int e = 1; e <= bound; ++e) {
        if (bound % e != 0 || e % prev != 0)
            continue;
        chain[idx] = e;
        enumerate_quotients(d, offset, idx + 1, e, chain, out);
    }
}

}  // namespace

std::vector<FgAbelianGroup> quotient_types(const FgAbelianGroup& g) {
    if (!g.is_finite())
        throw std::invalid_argument("quotient_types is only defined for finite groups");
    const std::vector<Int>& d = g.torsion();
    std::vector<FgAbelianGroup> out;
    // H = Z_{e_1} + ... + Z_{e_t} is a quotient of Z_{d_1} + ... + Z_{d_s}
    // iff t <= s and e_i | d_{i + s - t} along ascending chains
    for (size_t t = 0; t <= d.size(); ++t) {
        std::vector<Int> chain(t, Int(1));
        enumerate_quotients(d, d.size() - t, 0, Int(1), chain, out);
    }
    std::sort(out.begin(), out.end(), [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
        if (a.torsion_order() != b.torsion_order())
            return a.torsion_order() < b.torsion_order();
        return a.torsion() < b.torsion();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qhol
