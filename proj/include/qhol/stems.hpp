#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qhol/fg_group.hpp"
#include "qhol/homology.hpp"

namespace qhol {

// What Serre's finiteness theorem pins down about the p-primary part of the
// stable stem pi^s(j) for an odd prime p: trivial for 0 < j < 2p-3, Z_p at
// j = 2p-3, the free Z at j = 0, and nothing beyond.
enum class SerrePPart { free_z, trivial, z_p, unknown };

SerrePPart serre_p_part(int j, long p);

// True iff the p-torsion of pi^s_{n+2} of a space with the given reduced
// homology provably vanishes in the Serre range of the Atiyah-Hirzebruch
// spectral sequence: every E^2 entry on the total-degree-(n+2) diagonal must
// be p-torsion free and the diagonal must sit below total degree 2p-3, where
// E^2 = E^infinity.  The homology must be degreewise free (the caller has
// already dropped 2-primary factors when p-localizing).
bool ahss_p_torsion_vanishes(const HomologyResult& reduced_homology, int n, long p);

enum class StemFamily { sphere, cpinf };

struct StemEntry {
    FgAbelianGroup group;
    std::string provenance;
};

// Stable stems lookup: pi^s(j) of spheres and reduced pi^s_j(CP^inf).
// Input data validated against the Serre predicate, never derived here.
class StemTable {
public:
    static StemTable load_file(const std::string& path);
    static StemTable parse(std::istream& in, const std::string& display_name);

    void insert(StemFamily family, int j, StemEntry entry);
    bool has(StemFamily family, int j) const;
    const FgAbelianGroup& at(StemFamily family, int j) const;
    const std::map<int, StemEntry>& entries(StemFamily family) const;

private:
    std::map<int, StemEntry> sphere_, cpinf_;
};

struct StemValidation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every sphere entry against the Serre predicate wherever it is
// decisive and the CP^inf entries against the quoted low-degree values.
StemValidation validate_stem_table(const StemTable& table);

}  // namespace qhol
