#include <doctest.h>

#include <random>

#include "qhol/char_ring.hpp"

using namespace qhol;

namespace {

RingElement random_element(std::mt19937& rng, const RingPresentationPtr& pres) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> exponent(0, 2);
    RingElement e(pres);
    for (int term = 0; term < 4; ++term) {
        std::vector<int> exps(pres->generator_count());
        for (int& x : exps)
            x = exponent(rng);
        e = e + RingElement::monomial(pres, exps, coeff(rng));
    }
    return e;
}

}  // namespace

TEST_CASE("ring arithmetic with nilpotency") {
    // Z[x]/(x^3), cap 6
    const auto pres = std::make_shared<RingPresentation>(
        std::vector<RingGenerator>{{"x", 2, 3}}, 6, RingCoeff::integers);
    const RingElement one = RingElement::one(pres);
    const RingElement x = RingElement::generator(pres, 0);
    const RingElement product = (one + x) * (one - x);
    CHECK(product == one - x * x);
    CHECK((x * x * x).is_zero());
}

TEST_CASE("mismatched presentations are rejected") {
    const auto p1 = projective_product_presentation({"a"}, 8);
    const auto p2 = projective_product_presentation({"a", "b"}, 8);
    CHECK_THROWS_AS(RingElement::one(p1) + RingElement::one(p2), std::invalid_argument);
}

TEST_CASE("inverse total class") {
    const auto pres = projective_product_presentation({"c1"}, 10);
    const RingElement one = RingElement::one(pres);
    const RingElement c1 = RingElement::generator(pres, 0);
    const RingElement inv = (one + c1).inverse_total_class();
    RingElement expected = RingElement(pres);
    for (int i = 0; 2 * i <= 10; ++i)
        expected = expected + RingElement::monomial(pres, {i}, i % 2 == 0 ? 1 : -1);
    CHECK(inv == expected);
    CHECK((one + c1) * inv == one);
    CHECK_THROWS_AS(c1.inverse_total_class(), std::invalid_argument);

    // identity map: f^* c(TP) = c(TM), so the normal class is 1
    CHECK((one + c1) * (one + c1).inverse_total_class() == one);
}

TEST_CASE("ring multiplication is commutative and associative") {
    std::mt19937 rng(99);
    const auto pres = projective_product_presentation({"a", "b"}, 12);
    for (int trial = 0; trial < 25; ++trial) {
        const RingElement a = random_element(rng, pres);
        const RingElement b = random_element(rng, pres);
        const RingElement c = random_element(rng, pres);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse_total_class inverts random unit classes") {
    std::mt19937 rng(1234);
    const auto pres = projective_product_presentation({"a", "b"}, 10);
    for (int trial = 0; trial < 20; ++trial) {
        RingElement a = random_element(rng, pres);
        a = a - a.component(0) + RingElement::one(pres);  // force constant term 1
        CHECK(a * a.inverse_total_class() == RingElement::one(pres));
    }
}

TEST_CASE("line bundle first Chern classes") {
    const auto pres = projective_product_presentation({"a", "b"}, 12);
    const RingElement a = RingElement::generator(pres, 0);
    const RingElement b = RingElement::generator(pres, 1);

    CHECK(line_bundle_c1(pres, LineBundle{{2, 0}}) == a + a);
    CHECK(line_bundle_c1(pres, LineBundle{{-1, 1}}) == b - a);
    CHECK(line_bundle_c1(pres, LineBundle{{0, 0}}).is_zero());
    CHECK_THROWS_AS(line_bundle_c1(pres, LineBundle{{1}}), std::invalid_argument);
}

TEST_CASE("stiefel-whitney classes from chern classes") {
    const auto pres = projective_product_presentation({"a", "b"}, 12);
    const RingElement one = RingElement::one(pres);

    // gamma^2: c = 1 + 2a reduces to 1
    const LineBundle square{{2, 0}};
    const RingElement w_square =
        sw_from_chern(one + line_bundle_c1(pres, square));
    CHECK(w_square == RingElement::one(w_square.presentation()));

    // trivial bundle
    CHECK(sw_from_chern(one).coefficient({0, 0}) == 1);

    // the fold target bundle: w_2 = a mod 2
    const std::vector<LineBundle> xi = {{{2, 0}}, {{0, 1}}, {{-1, 1}}};
    const RingElement total = sum_of_line_bundles_total_chern(pres, xi);
    const RingElement w = sw_from_chern(total);
    const RingElement w2 = w.component(2);
    CHECK(w2 == RingElement::generator(w.presentation(), 0));
}

TEST_CASE("whitney product formula for sums of line bundles") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> power(-2, 2);
    const auto pres = projective_product_presentation({"a", "b"}, 10);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<LineBundle> e(2), f(3);
        for (auto* list : {&e, &f})
            for (LineBundle& bundle : *list)
                bundle.powers = {power(rng), power(rng)};
        std::vector<LineBundle> sum = e;
        sum.insert(sum.end(), f.begin(), f.end());
        const RingElement lhs = sw_from_chern(sum_of_line_bundles_total_chern(pres, sum));
        const RingElement rhs = sw_from_chern(sum_of_line_bundles_total_chern(pres, e)) *
                                sw_from_chern(sum_of_line_bundles_total_chern(pres, f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("thom polynomial evaluation") {
    const auto pres = projective_product_presentation({"a", "b"}, 12);
    const RingElement a = RingElement::generator(pres, 0);
    const RingElement b = RingElement::generator(pres, 1);

    // Tp_{A_1} = c_{k+1} with k = 1: substituting c_2 = 0 gives 0
    const ThomPolynomial tp_fold_k1 = ThomPolynomial::fold(1);
    const std::vector<RingElement> zero_c2 = {a, RingElement(pres)};
    CHECK(tp_fold_k1.evaluate(zero_c2).is_zero());

    // and in general the evaluation is exactly the supplied c_{k+1}
    const std::vector<RingElement> classes = {a + b, a * b};
    CHECK(tp_fold_k1.evaluate(classes) == a * b);

    CHECK_THROWS_AS(ThomPolynomial::fold(2).evaluate(classes), std::invalid_argument);
    const std::vector<RingElement> wrong_degree = {a * a};
    CHECK_THROWS_AS(tp_fold_k1.evaluate(wrong_degree), std::invalid_argument);
    CHECK(ThomPolynomial::fold(1).homogeneous_degree() == 4);
}

TEST_CASE("pairing against the fundamental class") {
    const auto pres = cp_presentation("h", 1, 2);
    const RingElement h = RingElement::generator(pres, 0);
    CHECK(pair_fundamental(h, {1}) == 1);
    CHECK(pair_fundamental(h + h, {1}) == 2);
    CHECK(pair_fundamental(RingElement(pres), {1}) == 0);
    CHECK_THROWS_AS(pair_fundamental(RingElement::one(pres) + h, {1}),
                    std::invalid_argument);
}
