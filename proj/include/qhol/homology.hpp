#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qhol/fg_group.hpp"
#include "qhol/matrix.hpp"

namespace qhol {

struct CoeffSystem {
    bool modular = false;
    long p = 0;  // prime when modular

    static CoeffSystem Z() { return CoeffSystem{}; }
    static CoeffSystem Zp(long p);

    bool operator==(const CoeffSystem&) const = default;
    std::string to_string() const;
};

CoeffSystem parse_coeff(std::string_view text);  // "Z" or "Z/<p>"

// Cellular chain complex with integer boundary matrices.  boundary(d) maps
// degree-d chains to degree-(d-1) chains, so it has rank(d) columns and
// rank(d-1) rows.
class ChainComplex {
public:
    ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    int rank(int d) const;
    const IntMatrix& boundary(int d) const;  // 1 <= d <= top_degree

    bool is_valid() const;  // every composite boundary vanishes

    ChainComplex suspended() const;

private:
    std::vector<int> ranks_;
    std::vector<IntMatrix> boundaries_;
};

enum class ExecutionPolicy { serial, parallel };

// Graded homology, one group per degree 0..valid_to.  Degrees above valid_to
// are unknown (typically because an infinite space was truncated), and
// reading them is an error.  With Z/p coefficients the "free rank" carries
// the F_p-dimension and the torsion list is empty.
class HomologyResult {
public:
    HomologyResult(CoeffSystem coeff, std::vector<FgAbelianGroup> groups, int valid_to);
    static HomologyResult zero(CoeffSystem coeff, int valid_to);

    const CoeffSystem& coeff() const { return coeff_; }
    int valid_to() const { return valid_to_; }
    const FgAbelianGroup& at(int degree) const;  // zero below 0, error above valid_to
    void set(int degree, FgAbelianGroup g);

    // Smallest degree that can carry a nonzero group (first stored nonzero).
    int first_support() const;

    // Drops one copy of the coefficients in degree 0 (H_0 of a connected,
    // nonempty space); everything else is unchanged.
    HomologyResult reduced() const;
    HomologyResult shifted(int amount) const;
    HomologyResult truncated(int new_valid_to) const;

    bool degreewise_equal(const HomologyResult& rhs, int up_to) const;

private:
    CoeffSystem coeff_;
    std::vector<FgAbelianGroup> groups_;
    int valid_to_;
};

// Homology of a complex; rejects input with nonvanishing composite boundary.
// Per-degree Smith reductions are independent, so the parallel policy fans
// them out across OpenMP threads; results are identical to the serial path.
HomologyResult homology_of_complex(const ChainComplex& complex, CoeffSystem coeff,
                                   ExecutionPolicy policy = ExecutionPolicy::parallel);

// Standard cellular models.
//   CP(n)        one cell in each even degree 0..2n, zero boundaries
//   RP(n)        one cell per degree 0..n, boundaries alternating 0,2
//   CP(n)/CP(m)  reduced model: cells in even degrees 2m+2..2n, zero boundaries
//   S(X)         suspension
struct SpaceSpec {
    enum class Kind { cp, rp, stunted_cp, suspension };
    Kind kind = Kind::cp;
    int n = 0;
    int m = 0;
    std::shared_ptr<SpaceSpec> inner;

    static SpaceSpec parse(std::string_view text);
    std::string to_string() const;
};

ChainComplex standard_space_complex(const SpaceSpec& space, int truncation);

// Kunneth convolution of graded homologies: free parts convolve, torsion
// tensor terms land in the same degree and Tor terms one degree higher.
// Feeding reduced homologies computes the reduced homology of a smash
// product; unreduced ones compute a cartesian product.
HomologyResult kunneth_convolution(const HomologyResult& a, const HomologyResult& b);

// Reduced homology of a smash product from the reduced homologies of the
// factors (thin contract wrapper over the convolution).
HomologyResult smash_homology(const HomologyResult& a, const HomologyResult& b);

// Reduced homology of the Thom space of a complex rank-r bundle: the base
// homology shifted up by 2r (complex bundles are orientable, so this holds
// integrally and mod every prime).
HomologyResult thom_space_homology(const HomologyResult& base, int complex_rank);

// Expected F_p-dimensions from an integral result via universal coefficients.
std::vector<int> mod_p_dimensions_from_integral(const HomologyResult& integral, long p);

}  // namespace qhol
