#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhol/int_types.hpp"

namespace qhol {

enum class RingCoeff { integers, mod2 };

struct RingGenerator {
    std::string name;
    int degree;          // positive and even (real degree of a Chern-type class)
    int nilpotency = 0;  // 0 = no bound; e >= 1 imposes gen^e = 0 (H*(CP^{e-1}))

    bool operator==(const RingGenerator&) const = default;
};

// Truncated graded-commutative polynomial ring over Z or Z/2 with monomial
// relations only: per-generator nilpotency bounds plus a total-degree cap.
// All generators have even degree, so the ring is honestly commutative.
class RingPresentation {
public:
    RingPresentation(std::vector<RingGenerator> generators, int degree_cap, RingCoeff coeff);

    size_t generator_count() const { return generators_.size(); }
    const RingGenerator& generator(size_t i) const { return generators_.at(i); }
    std::optional<size_t> find(std::string_view name) const;
    int degree_cap() const { return degree_cap_; }
    RingCoeff coeff() const { return coeff_; }

    int monomial_degree(const std::vector<int>& exponents) const;
    // monomial survives the nilpotency bounds and the total-degree cap
    bool admits(const std::vector<int>& exponents) const;

    bool operator==(const RingPresentation&) const = default;

private:
    std::vector<RingGenerator> generators_;
    int degree_cap_;
    RingCoeff coeff_;
};

using RingPresentationPtr = std::shared_ptr<const RingPresentation>;

// H*(CP^inf x ... ), one degree-2 generator per factor, no nilpotency.
RingPresentationPtr projective_product_presentation(std::vector<std::string> names,
                                                    int degree_cap,
                                                    RingCoeff coeff = RingCoeff::integers);
// H*(CP^n): single degree-2 generator with nilpotency n+1.
RingPresentationPtr cp_presentation(std::string name, int n, int degree_cap);

// Graded-lexicographic monomial order (degree first, then exponents), the
// canonical order used for deterministic iteration and serialization.
struct GradedLexOrder {
    const RingPresentation* pres = nullptr;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class RingElement {
public:
    using TermMap = std::map<std::vector<int>, Int, GradedLexOrder>;

    explicit RingElement(RingPresentationPtr pres);
    static RingElement one(RingPresentationPtr pres);
    static RingElement generator(RingPresentationPtr pres, size_t index);
    static RingElement monomial(RingPresentationPtr pres, std::vector<int> exponents, Int coeff);

    const RingPresentationPtr& presentation() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const std::vector<int>& exponents) const;
    bool is_homogeneous_of(int degree) const;  // the zero element is any degree
    RingElement component(int degree) const;

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator*(const RingElement& rhs) const;
    bool operator==(const RingElement& rhs) const;

    // Inverse of a total characteristic class: constant term must be 1.
    RingElement inverse_total_class() const;

    std::string to_string() const;

private:
    void add_term(const std::vector<int>& exponents, const Int& coeff);
    void require_same_presentation(const RingElement& rhs) const;

    RingPresentationPtr pres_;
    TermMap terms_;
};

// Formal line bundle over a product of infinite projective spaces: the tensor
// power of the pulled-back tautological bundle per factor, so c_1 is the
// integer combination of the degree-2 generators given by `powers`.
struct LineBundle {
    std::vector<int> powers;
};

RingElement line_bundle_c1(const RingPresentationPtr& pres, const LineBundle& bundle);
// Total Chern class of a direct sum of line bundles: prod (1 + c_1(L_i)).
RingElement sum_of_line_bundles_total_chern(const RingPresentationPtr& pres,
                                            std::span<const LineBundle> bundles);

// Total Stiefel-Whitney class of a complex bundle from its total Chern class:
// the mod-2 reduction, with w_{2i} = c_i mod 2 and odd classes zero.  The
// result lives in the mod-2 twin of the input presentation.
RingElement sw_from_chern(const RingElement& total_chern);

// Polynomial in the abstract Chern variables c_1, c_2, ... (c_i of degree 2i).
class ThomPolynomial {
public:
    static ThomPolynomial zero();
    static ThomPolynomial chern_class(int i);
    // Tp of the fold singularity A_1 in codimension k: c_{k+1}.
    static ThomPolynomial fold(int k);

    ThomPolynomial operator+(const ThomPolynomial& rhs) const;
    ThomPolynomial scaled(const Int& c) const;

    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    // 2 * sum(i * e_i), defined when all monomials agree; zero polynomial -> 0
    std::optional<int> homogeneous_degree() const;
    size_t max_variable() const;

    // Substitutes chern[i-1] for c_i; chern[i-1] must be homogeneous of degree
    // 2i and every variable occurring in the polynomial must be covered.
    RingElement evaluate(std::span<const RingElement> chern) const;

private:
    std::map<std::vector<int>, Int> terms_;  // exponents over c_1..c_N
};

// Coefficient of the fundamental monomial in x; x must be homogeneous of the
// fundamental degree.
Int pair_fundamental(const RingElement& x, const std::vector<int>& fundamental);

}  // namespace qhol
