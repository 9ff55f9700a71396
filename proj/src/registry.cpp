#include "qhol/registry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

GroupPresentation GroupPresentation::trivial() { return GroupPresentation{}; }

GroupPresentation GroupPresentation::unitary_product(std::vector<int> ranks) {
    return wreath(1, std::move(ranks));
}

GroupPresentation GroupPresentation::wreath(int multiplicity, std::vector<int> ranks) {
    if (multiplicity < 1)
        throw std::invalid_argument("wreath multiplicity must be >= 1");
    std::vector<int> kept;
    for (int r : ranks) {
        if (r < 0)
            throw std::invalid_argument("unitary rank must be nonnegative");
        if (r > 0)
            kept.push_back(r);  // U(0) is trivial
    }
    GroupPresentation g;
    if (kept.empty())
        return g;
    g.factors.push_back(WreathFactor{std::move(kept), multiplicity});
    return g;
}

std::string GroupPresentation::to_string() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (const WreathFactor& f : factors) {
        std::string inner;
        for (int r : f.unitary_ranks) {
            if (!inner.empty())
                inner += "x";
            inner += fmt::format("U({})", r);
        }
        if (!out.empty())
            out += " x ";
        if (f.multiplicity == 1)
            out += inner;
        else
            out += fmt::format("Sym_{} wr ({})", f.multiplicity, inner);
    }
    return out;
}

TruncatedSeries poincare_series_of_group(const GroupPresentation& group, int cap) {
    TruncatedSeries series = TruncatedSeries::constant(1, cap);
    for (const WreathFactor& factor : group.factors) {
        TruncatedSeries inner = TruncatedSeries::constant(1, cap);
        for (int m : factor.unitary_ranks)
            for (int i = 1; i <= m; ++i)
                inner = inner * one_minus_power(2 * i, cap).inverse();
        if (factor.multiplicity > 1)
            inner = symmetric_power(inner, factor.multiplicity);
        series = series * inner;
    }
    return series;
}

GroupPresentation MultisingularitySpec::symmetry_group() const {
    GroupPresentation g;
    for (const auto& [cls, multiplicity] : parts) {
        if (multiplicity < 1)
            throw std::invalid_argument("multisingularity multiplicity must be >= 1");
        std::vector<int> ranks;
        for (const WreathFactor& f : cls.group.factors) {
            if (f.multiplicity != 1)
                throw std::invalid_argument(
                    "cannot wreath-wrap a group that is already wreathed");
            ranks.insert(ranks.end(), f.unitary_ranks.begin(), f.unitary_ranks.end());
        }
        GroupPresentation part = GroupPresentation::wreath(multiplicity, std::move(ranks));
        g.factors.insert(g.factors.end(), part.factors.begin(), part.factors.end());
    }
    return g;
}

namespace {

std::optional<int> morin_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'A')
        return std::nullopt;
    int i = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
    if (ec != std::errc() || ptr != name.data() + name.size() || i < 1)
        return std::nullopt;
    return i;
}

}  // namespace

bool is_builtin_name(const std::string& name) {
    return name == "Sigma0" || morin_index(name).has_value();
}

SingularityClass builtin_singularity(const std::string& name, int k) {
    if (k < 0)
        throw std::invalid_argument("codimension parameter k must be nonnegative");
    if (name == "Sigma0")
        return SingularityClass{name, 0, GroupPresentation::unitary_product({k}), std::nullopt};
    if (auto i = morin_index(name)) {
        SingularityClass cls{name, *i * (k + 1),
                             GroupPresentation::unitary_product({1, k}), std::nullopt};
        if (*i == 1 && k == 1)
            cls.target_bundle = TargetBundle{{{2, 0}, {0, 1}, {-1, 1}}};
        return cls;
    }
    throw std::invalid_argument(fmt::format(
        "unknown singularity '{}': builtins are Sigma0, A1, A2, ...", name));
}

std::vector<SingularityClass> load_registry_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(fmt::format("cannot open registry file '{}'", path));
    std::vector<SingularityClass> classes;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = fmt::format("{}:{}", path, lineno);
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword))
            continue;
        if (keyword != "singularity")
            throw std::invalid_argument(
                fmt::format("{}: expected 'singularity', got '{}'", where, keyword));
        std::string name;
        if (!(tokens >> name))
            throw std::invalid_argument(fmt::format("{}: missing singularity name", where));
        if (is_builtin_name(name))
            throw std::invalid_argument(
                fmt::format("{}: '{}' redefines a builtin singularity", where, name));
        if (!seen.insert(name).second)
            throw std::invalid_argument(
                fmt::format("{}: duplicate singularity '{}'", where, name));

        std::optional<int> codim;
        std::optional<std::vector<int>> ranks;
        int wreath = 1;
        std::string field;
        while (tokens >> field) {
            if (field.starts_with("codim=")) {
                int value = 0;
                const std::string text = field.substr(6);
                auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
                if (ec != std::errc() || ptr != text.data() + text.size())
                    throw std::invalid_argument(
                        fmt::format("{}: bad codimension '{}'", where, text));
                if (value < 0)
                    throw std::invalid_argument(
                        fmt::format("{}: negative codimension {}", where, value));
                codim = value;
            } else if (field.starts_with("group=")) {
                std::vector<int> parsed;
                std::stringstream factors(field.substr(6));
                std::string piece;
                while (std::getline(factors, piece, 'x')) {
                    if (!piece.starts_with("U(") || !piece.ends_with(")"))
                        throw std::invalid_argument(fmt::format(
                            "{}: bad group factor '{}', expected U(<m>)", where, piece));
                    int m = 0;
                    const std::string inner = piece.substr(2, piece.size() - 3);
                    auto [ptr, ec] =
                        std::from_chars(inner.data(), inner.data() + inner.size(), m);
                    if (ec != std::errc() || ptr != inner.data() + inner.size() || m < 1)
                        throw std::invalid_argument(fmt::format(
                            "{}: bad unitary rank '{}'", where, inner));
                    parsed.push_back(m);
                }
                if (parsed.empty())
                    throw std::invalid_argument(fmt::format("{}: empty group", where));
                ranks = std::move(parsed);
            } else if (field.starts_with("wreath=")) {
                const std::string text = field.substr(7);
                auto [ptr, ec] =
                    std::from_chars(text.data(), text.data() + text.size(), wreath);
                if (ec != std::errc() || ptr != text.data() + text.size() || wreath < 1)
                    throw std::invalid_argument(
                        fmt::format("{}: bad wreath multiplicity '{}'", where, text));
            } else {
                throw std::invalid_argument(
                    fmt::format("{}: unknown field '{}'", where, field));
            }
        }
        if (!codim || !ranks)
            throw std::invalid_argument(
                fmt::format("{}: singularity needs codim= and group=", where));
        classes.push_back(SingularityClass{
            name, *codim, GroupPresentation::wreath(wreath, std::move(*ranks)), std::nullopt});
    }
    return classes;
}

Registry Registry::with_config(const std::string& path) {
    Registry r;
    r.user_classes_ = load_registry_config(path);
    return r;
}

SingularityClass Registry::resolve(const std::string& name, int k) const {
    for (const SingularityClass& cls : user_classes_)
        if (cls.name == name)
            return cls;
    return builtin_singularity(name, k);
}

std::vector<SingularityClass> Registry::resolve_all(std::span<const std::string> names,
                                                    int k) const {
    std::vector<SingularityClass> out;
    out.reserve(names.size());
    for (const std::string& name : names)
        out.push_back(resolve(name, k));
    return out;
}

std::vector<std::string> Registry::downward_closure_warnings(
    std::span<const SingularityClass> sigma, int k) const {
    std::vector<std::string> warnings;
    if (sigma.empty())
        return warnings;
    int max_codim = 0;
    std::set<std::string> present;
    for (const SingularityClass& cls : sigma) {
        max_codim = std::max(max_codim, cls.codim);
        present.insert(cls.name);
    }
    auto check = [&](const SingularityClass& cls) {
        if (cls.codim < max_codim && !present.count(cls.name))
            warnings.push_back(fmt::format(
                "sigma is not downward closed: missing {} (codim {} < {})", cls.name,
                cls.codim, max_codim));
    };
    check(builtin_singularity("Sigma0", k));
    for (int i = 1; i * (k + 1) < max_codim; ++i)
        check(builtin_singularity(fmt::format("A{}", i), k));
    for (const SingularityClass& cls : user_classes_)
        check(cls);
    return warnings;
}

}  // namespace qhol
