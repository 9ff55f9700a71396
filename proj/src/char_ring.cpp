#include "qhol/char_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

RingPresentation::RingPresentation(std::vector<RingGenerator> generators, int degree_cap,
                                   RingCoeff coeff)
    : generators_(std::move(generators)), degree_cap_(degree_cap), coeff_(coeff) {
    if (degree_cap_ < 0)
        throw std::invalid_argument("ring degree cap must be nonnegative");
    for (const RingGenerator& g : generators_) {
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw std::invalid_argument(
                fmt::format("generator '{}' must have positive even degree, got {}", g.name,
                            g.degree));
        if (g.nilpotency < 0)
            throw std::invalid_argument(
                fmt::format("generator '{}' has negative nilpotency bound", g.name));
    }
}

std::optional<size_t> RingPresentation::find(std::string_view name) const {
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

int RingPresentation::monomial_degree(const std::vector<int>& exponents) const {
    int degree = 0;
    for (size_t i = 0; i < exponents.size(); ++i)
        degree += exponents[i] * generators_.at(i).degree;
    return degree;
}

bool RingPresentation::admits(const std::vector<int>& exponents) const {
    if (exponents.size() != generators_.size())
        throw std::invalid_argument("exponent vector length does not match presentation");
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0)
            throw std::invalid_argument("negative exponent");
        const int bound = generators_[i].nilpotency;
        if (bound > 0 && exponents[i] >= bound)
            return false;
    }
    return monomial_degree(exponents) <= degree_cap_;
}

RingPresentationPtr projective_product_presentation(std::vector<std::string> names,
                                                    int degree_cap, RingCoeff coeff) {
    std::vector<RingGenerator> gens;
    gens.reserve(names.size());
    for (std::string& n : names)
        gens.push_back(RingGenerator{std::move(n), 2, 0});
    return std::make_shared<RingPresentation>(std::move(gens), degree_cap, coeff);
}

RingPresentationPtr cp_presentation(std::string name, int n, int degree_cap) {
    std::vector<RingGenerator> gens{RingGenerator{std::move(name), 2, n + 1}};
    return std::make_shared<RingPresentation>(std::move(gens), degree_cap,
                                              RingCoeff::integers);
}

bool GradedLexOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = pres->monomial_degree(a);
    const int db = pres->monomial_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

RingElement::RingElement(RingPresentationPtr pres)
    : pres_(std::move(pres)), terms_(GradedLexOrder{pres_.get()}) {
    if (!pres_)
        throw std::invalid_argument("null ring presentation");
}

RingElement RingElement::one(RingPresentationPtr pres) {
    RingElement e(std::move(pres));
    e.add_term(std::vector<int>(e.pres_->generator_count(), 0), 1);
    return e;
}

RingElement RingElement::generator(RingPresentationPtr pres, size_t index) {
    RingElement e(std::move(pres));
    std::vector<int> exps(e.pres_->generator_count(), 0);
    exps.at(index) = 1;
    e.add_term(exps, 1);
    return e;
}

RingElement RingElement::monomial(RingPresentationPtr pres, std::vector<int> exponents,
                                  Int coeff) {
    RingElement e(std::move(pres));
    e.add_term(exponents, coeff);
    return e;
}

void RingElement::add_term(const std::vector<int>& exponents, const Int& coeff) {
    if (exponents.size() != pres_->generator_count())
        throw std::invalid_argument("exponent vector length does not match presentation");
    if (!pres_->admits(exponents))
        return;  // killed by nilpotency or the degree cap
    Int value = coeff;
    if (pres_->coeff() == RingCoeff::mod2) {
        value %= 2;
        if (value < 0)
            value += 2;
    }
    if (value == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, value);
    if (!inserted) {
        it->second += value;
        if (pres_->coeff() == RingCoeff::mod2) {
            it->second %= 2;
            if (it->second < 0)
                it->second += 2;
        }
        if (it->second == 0)
            terms_.erase(it);
    }
}

void RingElement::require_same_presentation(const RingElement& rhs) const {
    if (!(*pres_ == *rhs.pres_))
        throw std::invalid_argument("ring elements live in different presentations");
}

Int RingElement::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

bool RingElement::is_homogeneous_of(int degree) const {
    for (const auto& [exps, coeff] : terms_)
        if (pres_->monomial_degree(exps) != degree)
            return false;
    return true;
}

RingElement RingElement::component(int degree) const {
    RingElement out(pres_);
    for (const auto& [exps, coeff] : terms_)
        if (pres_->monomial_degree(exps) == degree)
            out.add_term(exps, coeff);
    return out;
}

RingElement RingElement::operator+(const RingElement& rhs) const {
    require_same_presentation(rhs);
    RingElement out = *this;
    for (const auto& [exps, coeff] : rhs.terms_)
        out.add_term(exps, coeff);
    return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const {
    require_same_presentation(rhs);
    RingElement out = *this;
    for (const auto& [exps, coeff] : rhs.terms_)
        out.add_term(exps, -coeff);
    return out;
}

RingElement RingElement::operator*(const RingElement& rhs) const {
    require_same_presentation(rhs);
    RingElement out(pres_);
    std::vector<int> exps(pres_->generator_count());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t i = 0; i < exps.size(); ++i)
                exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    return out;
}

bool RingElement::operator==(const RingElement& rhs) const {
    if (!(*pres_ == *rhs.pres_))
        return false;
    return std::equal(terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
}

RingElement RingElement::inverse_total_class() const {
    const std::vector<int> unit(pres_->generator_count(), 0);
    Int c0 = coefficient(unit);
    if (pres_->coeff() == RingCoeff::mod2)
        c0 %= 2;
    if (c0 != 1)
        throw std::invalid_argument(fmt::format(
            "inverse_total_class requires constant term 1, got {}", c0.str()));
    // Neumann series: (1 + y)^-1 = sum (-y)^i, finite since y has positive degree
    RingElement y = *this - RingElement::one(pres_);
    RingElement out = RingElement::one(pres_);
    RingElement power = RingElement::one(pres_);
    for (int i = 1; i <= pres_->degree_cap() / 2; ++i) {
        power = power * y;
        if (power.is_zero())
            break;
        if (i % 2 == 1)
            out = out - power;
        else
            out = out + power;
    }
    return out;
}

std::string RingElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        std::string mono;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += pres_->generator(i).name;
            if (exps[i] > 1)
                mono += fmt::format("^{}", exps[i]);
        }
        std::string term;
        if (mono.empty())
            term = coeff.str();
        else if (coeff == 1)
            term = mono;
        else if (coeff == -1)
            term = "-" + mono;
        else
            term = coeff.str() + "*" + mono;
        if (!out.empty())
            out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
        else
            out = term;
    }
    return out;
}

RingElement line_bundle_c1(const RingPresentationPtr& pres, const LineBundle& bundle) {
    if (bundle.powers.size() != pres->generator_count())
        throw std::invalid_argument(fmt::format(
            "line bundle over {} projective factors given to a presentation with {} generators",
            bundle.powers.size(), pres->generator_count()));
    for (size_t i = 0; i < pres->generator_count(); ++i)
        if (pres->generator(i).degree != 2)
            throw std::invalid_argument("line bundle base must have degree-2 generators only");
    RingElement c1(pres);
    for (size_t i = 0; i < bundle.powers.size(); ++i) {
        if (bundle.powers[i] == 0)
            continue;
        std::vector<int> exps(pres->generator_count(), 0);
        exps[i] = 1;
        c1 = c1 + RingElement::monomial(pres, exps, bundle.powers[i]);
    }
    return c1;
}

RingElement sum_of_line_bundles_total_chern(const RingPresentationPtr& pres,
                                            std::span<const LineBundle> bundles) {
    RingElement total = RingElement::one(pres);
    for (const LineBundle& b : bundles)
        total = total * (RingElement::one(pres) + line_bundle_c1(pres, b));
    return total;
}

RingElement sw_from_chern(const RingElement& total_chern) {
    const RingPresentation& src = *total_chern.presentation();
    if (src.coeff() != RingCoeff::integers)
        throw std::invalid_argument("sw_from_chern expects a Z-coefficient total Chern class");
    std::vector<RingGenerator> gens;
    for (size_t i = 0; i < src.generator_count(); ++i)
        gens.push_back(src.generator(i));
    auto mod2 = std::make_shared<RingPresentation>(std::move(gens), src.degree_cap(),
                                                   RingCoeff::mod2);
    RingElement w(mod2);
    for (const auto& [exps, coeff] : total_chern.terms())
        w = w + RingElement::monomial(mod2, exps, coeff);
    return w;
}

ThomPolynomial ThomPolynomial::zero() { return ThomPolynomial(); }

ThomPolynomial ThomPolynomial::chern_class(int i) {
    if (i < 1)
        throw std::invalid_argument("chern variable index must be >= 1");
    ThomPolynomial tp;
    std::vector<int> exps(static_cast<size_t>(i), 0);
    exps.back() = 1;
    tp.terms_.emplace(std::move(exps), Int(1));
    return tp;
}

ThomPolynomial ThomPolynomial::fold(int k) { return chern_class(k + 1); }

ThomPolynomial ThomPolynomial::operator+(const ThomPolynomial& rhs) const {
    ThomPolynomial out = *this;
    for (const auto& [exps, coeff] : rhs.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                out.terms_.erase(it);
        }
    }
    return out;
}

ThomPolynomial ThomPolynomial::scaled(const Int& c) const {
    ThomPolynomial out;
    if (c == 0)
        return out;
    for (const auto& [exps, coeff] : terms_)
        out.terms_.emplace(exps, coeff * c);
    return out;
}

std::optional<int> ThomPolynomial::homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (size_t i = 0; i < exps.size(); ++i)
            d += 2 * static_cast<int>(i + 1) * exps[i];
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree ? degree : std::optional<int>(0);
}

size_t ThomPolynomial::max_variable() const {
    size_t max_var = 0;
    for (const auto& [exps, coeff] : terms_)
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0)
                max_var = std::max(max_var, i + 1);
    return max_var;
}

RingElement ThomPolynomial::evaluate(std::span<const RingElement> chern) const {
    if (chern.empty())
        throw std::invalid_argument("thom polynomial evaluation needs at least c_1");
    const RingPresentationPtr pres = chern.front().presentation();
    for (size_t i = 0; i < chern.size(); ++i) {
        if (!(*chern[i].presentation() == *pres))
            throw std::invalid_argument("substituted Chern classes live in different rings");
        if (!chern[i].is_homogeneous_of(2 * static_cast<int>(i + 1)))
            throw std::invalid_argument(fmt::format(
                "substitution for c_{} is not homogeneous of degree {}", i + 1, 2 * (i + 1)));
    }
    if (max_variable() > chern.size())
        throw std::invalid_argument(fmt::format(
            "thom polynomial uses c_{} but only {} classes were supplied", max_variable(),
            chern.size()));
    RingElement out(pres);
    for (const auto& [exps, coeff] : terms_) {
        RingElement term = RingElement::one(pres);
        bool dead = false;
        for (size_t i = 0; i < exps.size() && !dead; ++i)
            for (int e = 0; e < exps[i]; ++e) {
                term = term * chern[i];
                if (term.is_zero()) {
                    dead = true;
                    break;
                }
            }
        if (!dead) {
            RingElement scaled(pres);
            for (const auto& [texps, tcoeff] : term.terms())
                scaled = scaled + RingElement::monomial(pres, texps, tcoeff * coeff);
            out = out + scaled;
        }
    }
    return out;
}

Int pair_fundamental(const RingElement& x, const std::vector<int>& fundamental) {
    const int degree = x.presentation()->monomial_degree(fundamental);
    if (!x.is_homogeneous_of(degree))
        throw std::invalid_argument(fmt::format(
            "pairing requires a homogeneous class of degree {}", degree));
    return x.coefficient(fundamental);
}

}  // namespace qhol
