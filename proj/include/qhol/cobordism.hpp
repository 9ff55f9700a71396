#pragma once

#include <span>
#include <string>
#include <vector>

#include "qhol/char_ring.hpp"
#include "qhol/exact_seq.hpp"
#include "qhol/homology.hpp"
#include "qhol/registry.hpp"
#include "qhol/stems.hpp"

namespace qhol {

// --- rational ranks -------------------------------------------------------

struct RankContribution {
    std::string name;
    int codim = 0;
    int degree = 0;  // n - 2 codim, the homology degree read off BG
    Int coefficient;
};

struct RankResult {
    int n = 0, k = 0;
    std::vector<RankContribution> contributions;
    Int rank;
};

// rank of Qhol_sigma(n,k) (x) Q: the sum over eta in sigma of the rational
// homology rank of BG_eta in degree n - 2 c_eta.
RankResult rational_rank(std::span<const SingularityClass> sigma, int n, int k);

// The printed Morin-example formula, evaluated verbatim:
// p_k(n/2) + sum_{i=1..r} sum_{j=0..n/2-i(k+1)} p_k(n/2 - j), zero for odd n,
// inner sums empty when n/2 - i(k+1) < 0.
Int morin_rank_closed_form(int n, int k, int r);

struct MorinCheck {
    int n = 0, k = 0, r = 0;
    Int closed_form;
    Int sum_over_eta;
    bool agree = false;
};

// Compares the printed closed form against the sum-over-eta rank for
// sigma = {Sigma0, A1, ..., Ar}.  The two genuinely disagree for k >= 2;
// a mismatch is a finding, not an error.
MorinCheck morin_crosscheck(int n, int k, int r);

// --- the fold pipeline ----------------------------------------------------

// Reduced homology of CP^inf ^ CP^inf/CP^1, the fold Thom space with its
// 2-primary RP^inf factor dropped, valid through `up_to_degree`.
HomologyResult fold_space_reduced_homology(int up_to_degree,
                                           ExecutionPolicy policy = ExecutionPolicy::parallel);

struct FoldAnalysis {
    int n = 0;
    SolveOutcome outcome;            // solved window with derivation trace
    GroupTerm result;                // the Qhol(n,1) term
    std::vector<std::string> facts;  // provenance of the injected facts
};

// Assembles the homotopy long exact sequence window around Qhol(n,1) for the
// fold key fibration and hands it to the solver.  Needs the CP^inf stems
// through degree n+2; valid for n = 0..5.
FoldAnalysis fold_cobordism_analysis(int n, const StemTable& stems);

struct TorsionPrimeCheck {
    long p = 0;
    bool certified = false;
};

struct TorsionPrimeReport {
    int n = 0;
    long p_max = 0;
    std::vector<TorsionPrimeCheck> checks;  // every odd prime <= p_max
    std::vector<long> certified() const;
};

// Odd primes p <= p_max whose p-torsion in Qhol_{mu_1}(n,1) provably
// vanishes; every listed prime is certified by an AHSS run over the fold
// space, not by the closed-form inequality.
TorsionPrimeReport fold_torsion_primes(int n, long p_max,
                                       ExecutionPolicy policy = ExecutionPolicy::parallel);

// --- Thom-space homology verification --------------------------------------

struct TxiRow {
    int degree = 0;
    CoeffSystem coeff;
    FgAbelianGroup thom_side;
    FgAbelianGroup smash_side;
    bool equal = false;
};

struct TxiReport {
    int max_degree = 0;
    std::vector<TxiRow> rows;
    bool all_equal = false;
};

// Degreewise comparison, with Z and Z/2 coefficients, of the two descriptions
// of the fold Thom space: the rank-3 Thom shift over CP^inf x CP^inf against
// the smash of CP^inf/RP^inf (homology shift of CP^inf) with the stunted
// CP^inf/CP^1 built cellularly and reduced by Smith normal form.
TxiReport verify_prop_txi(int max_degree, ExecutionPolicy policy = ExecutionPolicy::parallel);

// --- branched covers --------------------------------------------------------

struct PullbackMap {
    RingPresentationPtr source;
    RingPresentationPtr target;
    std::vector<RingElement> generator_images;  // image in the source ring per target generator

    RingElement apply(const RingElement& x) const;
};

// Degree-2 part of f^* c(TP) . c(TM)^{-1}, the fold Thom polynomial c_1
// evaluated at the normal Chern class of an equidimensional map.
RingElement branch_locus_class(const RingElement& total_chern_source,
                               const RingElement& total_chern_target,
                               const PullbackMap& pullback);

struct BranchScenario {
    std::string name;
    std::string description;
    RingElement branch_class;
    Int pairing;  // against the fundamental class of the source
};

// Presets: "identity" (CP^1 -> CP^1), "double-cover" (degree-2 CP^1 -> CP^1),
// "torus" (unbranched 3-sheeted torus cover).
BranchScenario branch_preset(const std::string& name);
std::vector<std::string> branch_preset_names();

// Closed-form homology of CP^inf (one copy of the coefficients in every even
// degree), used by the Thom-shift leg so the two legs of verify_prop_txi
// share no cellular machinery.
HomologyResult cp_infinity_homology(int valid_to, CoeffSystem coeff);

}  // namespace qhol
