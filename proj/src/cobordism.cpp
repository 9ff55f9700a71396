#include "qhol/cobordism.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

RankResult rational_rank(std::span<const SingularityClass> sigma, int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("rational_rank requires n, k >= 0");
    RankResult result;
    result.n = n;
    result.k = k;
    result.rank = 0;
    for (const SingularityClass& cls : sigma) {
        RankContribution item;
        item.name = cls.name;
        item.codim = cls.codim;
        item.degree = n - 2 * cls.codim;
        item.coefficient =
            item.degree < 0 ? Int(0)
                            : poincare_series_of_group(cls.group, n).at(item.degree);
        result.rank += item.coefficient;
        result.contributions.push_back(std::move(item));
    }
    return result;
}

Int morin_rank_closed_form(int n, int k, int r) {
    if (n < 0 || k < 0 || r < 0)
        throw std::invalid_argument("morin_rank_closed_form requires n, k, r >= 0");
    if (n % 2 == 1)
        return 0;
    const int m = n / 2;
    const TruncatedSeries pk = partition_series(k, m);
    Int total = pk.at(m);
    for (int i = 1; i <= r; ++i) {
        const int bound = m - i * (k + 1);
        for (int j = 0; j <= bound; ++j)
            total += pk.at(m - j);
    }
    return total;
}

MorinCheck morin_crosscheck(int n, int k, int r) {
    MorinCheck check;
    check.n = n;
    check.k = k;
    check.r = r;
    check.closed_form = morin_rank_closed_form(n, k, r);
    std::vector<SingularityClass> sigma;
    sigma.push_back(builtin_singularity("Sigma0", k));
    for (int i = 1; i <= r; ++i)
        sigma.push_back(builtin_singularity(fmt::format("A{}", i), k));
    check.sum_over_eta = rational_rank(sigma, n, k).rank;
    check.agree = check.closed_form == check.sum_over_eta;
    return check;
}

HomologyResult cp_infinity_homology(int valid_to, CoeffSystem coeff) {
    HomologyResult h = HomologyResult::zero(coeff, valid_to);
    for (int d = 0; d <= valid_to; d += 2)
        h.set(d, FgAbelianGroup::free(1));
    return h;
}

HomologyResult fold_space_reduced_homology(int up_to_degree, ExecutionPolicy policy) {
    if (up_to_degree < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
    const int margin = up_to_degree + 2;
    const int model = margin / 2 + 1;
    const SpaceSpec cp{SpaceSpec::Kind::cp, model, 0, nullptr};
    const SpaceSpec stunted{SpaceSpec::Kind::stunted_cp, model + 1, 1, nullptr};
    const HomologyResult factor1 =
        homology_of_complex(standard_space_complex(cp, margin), CoeffSystem::Z(), policy)
            .reduced();
    const HomologyResult factor2 = homology_of_complex(standard_space_complex(stunted, margin),
                                                       CoeffSystem::Z(), policy);
    return smash_homology(factor1, factor2).truncated(up_to_degree);
}

namespace {

struct FoldFact {
    GroupTerm term;
    std::string note;
};

// pi^s_m of the fold Thom space T(xi_A1), a rank-6 real vector bundle over
// CP^inf x CP^inf, as far as the quoted facts reach.
FoldFact fold_thom_stem(int m, const StemTable&) {
    const std::string label = fmt::format("pi^s_{}(Txi_A1)", m);
    if (m <= 5)
        return {GroupTerm::known(label, FgAbelianGroup::zero()),
                fmt::format("pi^s_{}(Txi_A1) = 0: the Thom space of a rank-6 bundle is "
                            "5-connected", m)};
    if (m == 6)
        return {GroupTerm::known(label, FgAbelianGroup::free(1)),
                "pi^s_6(Txi_A1) = Z: xi_A1 is an orientable 6-vector bundle"};
    if (m == 7)
        return {GroupTerm::known(label, FgAbelianGroup::zero()),
                "pi^s_7(Txi_A1) = 0: w_2(xi_A1) is nonzero over a simply connected base"};
    return {GroupTerm::unknown(label), {}};
}

GroupTerm cp_stem(int m, const StemTable& stems) {
    const std::string label = fmt::format("pi^s_{}(CP^inf)", m);
    if (!stems.has(StemFamily::cpinf, m))
        throw std::invalid_argument(fmt::format(
            "stems table is missing the cpinf entry at degree {} needed by the fold window", m));
    return GroupTerm::known(label, stems.at(StemFamily::cpinf, m));
}

}  // namespace

FoldAnalysis fold_cobordism_analysis(int n, const StemTable& stems) {
    if (n < 0 || n > 5)
        throw std::invalid_argument(
            fmt::format("fold analysis is supported for n = 0..5, got {}", n));

    FoldAnalysis analysis;
    analysis.n = n;

    // window  T_{n+3} -> S_{n+2} -> Qhol(n,1) -> T_{n+2} -> S_{n+1}
    ExactSequence seq;
    FoldFact upper = fold_thom_stem(n + 3, stems);
    FoldFact lower = fold_thom_stem(n + 2, stems);
    seq.terms.push_back(upper.term);
    seq.terms.push_back(cp_stem(n + 2, stems));
    seq.terms.push_back(GroupTerm::unknown(fmt::format("Qhol({},1)", n)));
    seq.terms.push_back(lower.term);
    seq.terms.push_back(cp_stem(n + 1, stems));
    seq.arrows.assign(4, Arrow{});

    for (const FoldFact& fact : {upper, lower})
        if (!fact.note.empty())
            analysis.facts.push_back(fact.note);
    // the boundary pi^s_6(Txi_A1) -> pi^s_5(CP^inf) is nontrivial: the link
    // of the fold has cross-cap number 1, so it is not null-cobordant
    if (n + 3 == 6) {
        seq.arrows[0].facts.insert(ArrowFact::nontrivial);
        analysis.facts.push_back("boundary pi^s_6(Txi_A1) -> pi^s_5(CP^inf) is nontrivial");
    }
    if (n + 2 == 6) {
        seq.arrows[3].facts.insert(ArrowFact::nontrivial);
        analysis.facts.push_back("boundary pi^s_6(Txi_A1) -> pi^s_5(CP^inf) is nontrivial");
    }

    analysis.outcome = solve_exact_sequence(std::move(seq));
    if (analysis.outcome.contradiction)
        throw std::logic_error(fmt::format("fold window for n={} is inconsistent: {}", n,
                                           analysis.outcome.contradiction_detail));
    analysis.result = analysis.outcome.sequence.terms.at(2);
    return analysis;
}

std::vector<long> TorsionPrimeReport::certified() const {
    std::vector<long> out;
    for (const TorsionPrimeCheck& c : checks)
        if (c.certified)
            out.push_back(c.p);
    return out;
}

TorsionPrimeReport fold_torsion_primes(int n, long p_max, ExecutionPolicy policy) {
    if (n < 0)
        throw std::invalid_argument("fold_torsion_primes requires n >= 0");
    TorsionPrimeReport report;
    report.n = n;
    report.p_max = p_max;
    const HomologyResult homology = fold_space_reduced_homology(n + 2, policy);
    const std::vector<long> primes = odd_primes_up_to(p_max);
    report.checks.resize(primes.size());
    if (policy == ExecutionPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (size_t i = 0; i < primes.size(); ++i)
            report.checks[i] =
                TorsionPrimeCheck{primes[i], ahss_p_torsion_vanishes(homology, n, primes[i])};
    } else {
        for (size_t i = 0; i < primes.size(); ++i)
            report.checks[i] =
                TorsionPrimeCheck{primes[i], ahss_p_torsion_vanishes(homology, n, primes[i])};
    }
    return report;
}

TxiReport verify_prop_txi(int max_degree, ExecutionPolicy policy) {
    if (max_degree < 6)
        throw std::invalid_argument("verify_prop_txi needs max_degree >= 6");
    TxiReport report;
    report.max_degree = max_degree;
    report.all_equal = true;

    const int margin = max_degree + 2;
    const int model = margin / 2 + 1;
    for (const CoeffSystem coeff : {CoeffSystem::Z(), CoeffSystem::Zp(2)}) {
        // Thom route: closed-form product homology shifted by the rank
        const HomologyResult cp_closed = cp_infinity_homology(margin, coeff);
        const HomologyResult product = kunneth_convolution(cp_closed, cp_closed);
        const HomologyResult thom_side = thom_space_homology(product, 3);

        // cellular route: Smith reduction of the standard models
        const SpaceSpec cp{SpaceSpec::Kind::cp, model, 0, nullptr};
        const SpaceSpec stunted{SpaceSpec::Kind::stunted_cp, model + 1, 1, nullptr};
        const HomologyResult factor1 =
            homology_of_complex(standard_space_complex(cp, margin), coeff, policy).shifted(2);
        const HomologyResult factor2 =
            homology_of_complex(standard_space_complex(stunted, margin), coeff, policy);
        const HomologyResult smash_side = smash_homology(factor1, factor2);

        for (int d = 0; d <= max_degree; ++d) {
            TxiRow row;
            row.degree = d;
            row.coeff = coeff;
            row.thom_side = thom_side.at(d);
            row.smash_side = smash_side.at(d);
            row.equal = row.thom_side == row.smash_side;
            report.all_equal = report.all_equal && row.equal;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

RingElement PullbackMap::apply(const RingElement& x) const {
    if (!(*x.presentation() == *target))
        throw std::invalid_argument("pullback applied to a class from the wrong ring");
    if (generator_images.size() != target->generator_count())
        throw std::invalid_argument("pullback needs one image per target generator");
    for (const RingElement& image : generator_images)
        if (!(*image.presentation() == *source))
            throw std::invalid_argument("pullback images must live in the source ring");
    RingElement out(source);
    for (const auto& [exps, coeff] : x.terms()) {
        RingElement term = RingElement::monomial(
            source, std::vector<int>(source->generator_count(), 0), coeff);
        for (size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e)
                term = term * generator_images[i];
        out = out + term;
    }
    return out;
}

RingElement branch_locus_class(const RingElement& total_chern_source,
                               const RingElement& total_chern_target,
                               const PullbackMap& pullback) {
    if (!(*total_chern_source.presentation() == *pullback.source))
        throw std::invalid_argument("source Chern class lives in the wrong ring");
    const RingElement normal_total =
        pullback.apply(total_chern_target) * total_chern_source.inverse_total_class();
    return normal_total.component(2);
}

namespace {

BranchScenario cp1_cover(const std::string& name, int degree, std::string description) {
    // H*(CP^1) = Z[h]/(h^2);  c(T CP^1) = 1 + 2h;  f^* multiplies h by the degree
    const RingPresentationPtr pres = cp_presentation("h", 1, 2);
    const RingElement h = RingElement::generator(pres, 0);
    const RingElement total = RingElement::one(pres) + h + h;  // 1 + 2h
    PullbackMap pullback{pres, pres, {RingElement::monomial(pres, {1}, degree)}};
    const RingElement cls = branch_locus_class(total, total, pullback);

    // the same class through the fold Thom polynomial Tp_{A_1} = c_1 (k = 0)
    const RingElement c1_normal =
        (pullback.apply(total) * total.inverse_total_class()).component(2);
    const RingElement via_tp =
        ThomPolynomial::fold(0).evaluate(std::span<const RingElement>(&c1_normal, 1));
    if (!(via_tp == cls))
        throw std::logic_error("fold Thom polynomial route disagrees with the direct route");

    return BranchScenario{name, std::move(description), cls, pair_fundamental(cls, {1})};
}

}  // namespace

BranchScenario branch_preset(const std::string& name) {
    if (name == "identity")
        return cp1_cover("identity", 1, "identity map CP^1 -> CP^1");
    if (name == "double-cover")
        return cp1_cover("double-cover", 2, "degree-2 branched cover CP^1 -> CP^1");
    if (name == "torus") {
        // even cohomology of T^2: one degree-2 class v with v^2 = 0; trivial
        // tangent bundles, unbranched 3-sheeted cover multiplies v by 3
        const RingPresentationPtr pres = std::make_shared<RingPresentation>(
            std::vector<RingGenerator>{{"v", 2, 2}}, 2, RingCoeff::integers);
        const RingElement one = RingElement::one(pres);
        PullbackMap pullback{pres, pres, {RingElement::monomial(pres, {1}, 3)}};
        const RingElement cls = branch_locus_class(one, one, pullback);
        return BranchScenario{"torus", "unbranched 3-sheeted cover T^2 -> T^2", cls,
                              pair_fundamental(cls, {1})};
    }
    throw std::invalid_argument(
        fmt::format("unknown branch preset '{}'; presets: identity, double-cover, torus", name));
}

std::vector<std::string> branch_preset_names() {
    return {"identity", "double-cover", "torus"};
}

}  // namespace qhol
