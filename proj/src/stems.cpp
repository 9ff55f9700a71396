#include "qhol/stems.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

SerrePPart serre_p_part(int j, long p) {
    if (j < 0)
        throw std::invalid_argument("stem index must be nonnegative");
    if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
        throw std::invalid_argument(fmt::format("serre_p_part requires an odd prime, got {}", p));
    if (j == 0)
        return SerrePPart::free_z;
    if (j < 2 * p - 3)
        return SerrePPart::trivial;
    if (j == 2 * p - 3)
        return SerrePPart::z_p;
    return SerrePPart::unknown;
}

bool ahss_p_torsion_vanishes(const HomologyResult& reduced_homology, int n, long p) {
    if (n < 0)
        throw std::invalid_argument("dimension must be nonnegative");
    if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
        throw std::invalid_argument(fmt::format("AHSS check requires an odd prime, got {}", p));
    const int total = n + 2;
    if (reduced_homology.valid_to() < total)
        throw std::invalid_argument(fmt::format(
            "homology input only valid through degree {}, need {}", reduced_homology.valid_to(),
            total));
    for (int d = 0; d <= total; ++d)
        if (!reduced_homology.at(d).is_free())
            throw std::invalid_argument(fmt::format(
                "AHSS input must be degreewise free; degree {} is {}", d,
                reduced_homology.at(d).to_string()));

    // E^2 = E^infinity only below total degree 2p-3
    if (!(total < 2 * p - 3))
        return false;
    // walk the diagonal: entry (i, j) is H_i tensor the p-part of pi^s(j)
    for (int j = 0; j <= total; ++j) {
        const int i = total - j;
        if (reduced_homology.at(i).free_rank() == 0)
            continue;
        switch (serre_p_part(j, p)) {
            case SerrePPart::free_z:
            case SerrePPart::trivial:
                break;
            case SerrePPart::z_p:
            case SerrePPart::unknown:
                return false;
        }
    }
    return true;
}

namespace {

StemFamily parse_family(const std::string& word, const std::string& where) {
    if (word == "sphere")
        return StemFamily::sphere;
    if (word == "cpinf")
        return StemFamily::cpinf;
    throw std::invalid_argument(
        fmt::format("{}: unknown stem family '{}', expected sphere or cpinf", where, word));
}

}  // namespace

StemTable StemTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(fmt::format("cannot open stems file '{}'", path));
    return parse(in, path);
}

StemTable StemTable::parse(std::istream& in, const std::string& display_name) {
    StemTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = fmt::format("{}:{}", display_name, lineno);
        std::string provenance;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            provenance = line.substr(hash + 1);
            while (!provenance.empty() && provenance.front() == ' ')
                provenance.erase(provenance.begin());
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword))
            continue;  // blank or comment-only line
        if (keyword != "stem")
            throw std::invalid_argument(
                fmt::format("{}: expected 'stem', got '{}'", where, keyword));
        std::string family_word, free_field, torsion_field;
        int j = -1;
        if (!(tokens >> family_word >> j >> free_field >> torsion_field))
            throw std::invalid_argument(fmt::format(
                "{}: expected 'stem <family> <j> free=<r> torsion=<d1,d2,...>'", where));
        const StemFamily family = parse_family(family_word, where);
        if (j < 0)
            throw std::invalid_argument(fmt::format("{}: stem index must be >= 0", where));
        if (!free_field.starts_with("free=") || !torsion_field.starts_with("torsion="))
            throw std::invalid_argument(fmt::format(
                "{}: expected free=<r> torsion=<d1,d2,...>, got '{} {}'", where, free_field,
                torsion_field));
        int free_rank = 0;
        {
            const std::string value = free_field.substr(5);
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), free_rank);
            if (ec != std::errc() || ptr != value.data() + value.size() || free_rank < 0)
                throw std::invalid_argument(
                    fmt::format("{}: bad free rank '{}'", where, value));
        }
        std::vector<Int> orders;
        {
            std::string list = torsion_field.substr(8);
            std::stringstream parts(list);
            std::string item;
            while (std::getline(parts, item, ',')) {
                if (item.empty())
                    continue;
                try {
                    orders.emplace_back(item);
                } catch (const std::exception&) {
                    throw std::invalid_argument(
                        fmt::format("{}: bad torsion order '{}'", where, item));
                }
                if (orders.back() < 2)
                    throw std::invalid_argument(
                        fmt::format("{}: torsion orders must be >= 2, got '{}'", where, item));
            }
        }
        std::string trailing;
        if (tokens >> trailing)
            throw std::invalid_argument(
                fmt::format("{}: unexpected trailing token '{}'", where, trailing));
        if (table.has(family, j))
            throw std::invalid_argument(
                fmt::format("{}: duplicate entry for {} {}", where, family_word, j));
        table.insert(family, j,
                     StemEntry{FgAbelianGroup::make(free_rank, std::move(orders)),
                               std::move(provenance)});
    }
    return table;
}

void StemTable::insert(StemFamily family, int j, StemEntry entry) {
    auto& map = family == StemFamily::sphere ? sphere_ : cpinf_;
    map[j] = std::move(entry);
}

bool StemTable::has(StemFamily family, int j) const {
    const auto& map = family == StemFamily::sphere ? sphere_ : cpinf_;
    return map.count(j) > 0;
}

const FgAbelianGroup& StemTable::at(StemFamily family, int j) const {
    const auto& map = family == StemFamily::sphere ? sphere_ : cpinf_;
    auto it = map.find(j);
    if (it == map.end())
        throw std::out_of_range(fmt::format(
            "stems table has no {} entry at degree {}",
            family == StemFamily::sphere ? "sphere" : "cpinf", j));
    return it->second.group;
}

const std::map<int, StemEntry>& StemTable::entries(StemFamily family) const {
    return family == StemFamily::sphere ? sphere_ : cpinf_;
}

StemValidation validate_stem_table(const StemTable& table) {
    StemValidation report;
    auto complain = [&](std::string text) { report.violations.push_back(std::move(text)); };

    for (const auto& [j, entry] : table.entries(StemFamily::sphere)) {
        const FgAbelianGroup& g = entry.group;
        if (j == 0) {
            if (!(g == FgAbelianGroup::free(1)))
                complain(fmt::format("sphere stem 0 must be Z, table has {}", g.to_string()));
            continue;
        }
        if (g.free_rank() != 0)
            complain(fmt::format("sphere stem {} is finite, table has free rank {}", j,
                                 g.free_rank()));
        // any odd prime in the torsion must be allowed by the Serre predicate
        for (const Int& d : g.torsion())
            for (Int q = 3; q <= d; q += 2) {
                if (!is_prime(q) || d % q != 0)
                    continue;
                const long p = static_cast<long>(q);
                const SerrePPart expected = serre_p_part(j, p);
                if (expected == SerrePPart::trivial)
                    complain(fmt::format(
                        "sphere stem {} has {}-torsion, Serre forbids it below degree {}", j, p,
                        2 * p - 3));
                else if (expected == SerrePPart::z_p &&
                         !(g.p_part(q) == FgAbelianGroup::cyclic(q)))
                    complain(fmt::format("sphere stem {} must have {}-part exactly Z_{}", j, p,
                                         p));
            }
        // positive direction: at j = 2p-3 the Z_p must actually be present
        if (j % 2 == 1) {
            const long p = (j + 3) / 2;
            if (p >= 3 && is_prime(Int(p)) && serre_p_part(j, p) == SerrePPart::z_p &&
                !(g.p_part(Int(p)) == FgAbelianGroup::cyclic(p)))
                complain(fmt::format("sphere stem {} must contain Z_{} (Serre, j = 2p-3)", j, p));
        }
    }

    // CP^inf entries quoted in the fold computation
    const std::vector<std::pair<int, FgAbelianGroup>> quoted = {
        {0, FgAbelianGroup::zero()},     {1, FgAbelianGroup::zero()},
        {2, FgAbelianGroup::free(1)},    {3, FgAbelianGroup::zero()},
        {4, FgAbelianGroup::free(1)},    {5, FgAbelianGroup::cyclic(2)},
        {6, FgAbelianGroup::free(1)},    {7, FgAbelianGroup::cyclic(2)},
    };
    for (const auto& [j, expected] : quoted) {
        if (!table.has(StemFamily::cpinf, j)) {
            if (j >= 2)
                complain(fmt::format("cpinf stem {} missing, fold pipeline needs degrees 2..7", j));
            continue;
        }
        const FgAbelianGroup& g = table.at(StemFamily::cpinf, j);
        if (!(g == expected))
            complain(fmt::format("cpinf stem {} must be {}, table has {}", j,
                                 expected.to_string(), g.to_string()));
    }
    return report;
}

}  // namespace qhol
