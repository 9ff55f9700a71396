#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhol/series.hpp"

namespace qhol {

// Product of unitary groups with an optional wreath wrapper:
// Sym_multiplicity acting on `multiplicity` copies of U(r_1) x ... x U(r_j).
// Rank-0 factors are the trivial group and are dropped.
struct WreathFactor {
    std::vector<int> unitary_ranks;
    int multiplicity = 1;
};

struct GroupPresentation {
    std::vector<WreathFactor> factors;

    static GroupPresentation trivial();
    static GroupPresentation unitary_product(std::vector<int> ranks);
    static GroupPresentation wreath(int multiplicity, std::vector<int> ranks);

    std::string to_string() const;
};

// Rational-homology Poincare series of the classifying space, in real degree:
// BU(m) contributes prod_{i=1..m} 1/(1-t^{2i}), factors multiply (Kunneth),
// and a wreath wrapper takes the degreewise symmetric power.
TruncatedSeries poincare_series_of_group(const GroupPresentation& group, int cap);

// Summand pr_1^* gamma_1^{a} (x) pr_2^* gamma_1^{b} of a bundle over
// CP^inf x CP^inf; negative powers mean duals.
struct LineBundleSummand {
    int first_power = 0;
    int second_power = 0;
};

struct TargetBundle {
    std::vector<LineBundleSummand> summands;
    int complex_rank() const { return static_cast<int>(summands.size()); }
};

struct SingularityClass {
    std::string name;
    int codim = 0;  // complex codimension at the codimension parameter it was built for
    GroupPresentation group;
    std::optional<TargetBundle> target_bundle;
};

struct MultisingularitySpec {
    std::vector<std::pair<SingularityClass, int>> parts;  // class, multiplicity >= 1
    GroupPresentation symmetry_group() const;
};

// Builtins: Sigma0 (codim 0, U(k)) and the Morin classes Ai (codim i(k+1),
// U(1) x U(k)); A1 at k = 1 carries the target bundle
// pr1 gamma^2 + pr2 gamma + pr1 gamma^v (x) pr2 gamma.
SingularityClass builtin_singularity(const std::string& name, int k);
bool is_builtin_name(const std::string& name);

// Parses `singularity <name> codim=<int> group=U(a)xU(b)[x...] [wreath=<m>]`
// lines; '#' starts a comment.  Rejects duplicate names, redefinition of
// builtins and negative codimensions, reporting the offending line.
std::vector<SingularityClass> load_registry_config(const std::string& path);

// Catalogue of resolvable singularity classes: builtins plus user entries.
class Registry {
public:
    Registry() = default;
    static Registry with_config(const std::string& path);

    SingularityClass resolve(const std::string& name, int k) const;
    std::vector<SingularityClass> resolve_all(std::span<const std::string> names, int k) const;

    // Warnings when sigma is not downward closed in the codimension order of
    // the registered classes.
    std::vector<std::string> downward_closure_warnings(
        std::span<const SingularityClass> sigma, int k) const;

private:
    std::vector<SingularityClass> user_classes_;
};

}  // namespace qhol
