#include <doctest.h>

#include <random>

#include "qhol/homology.hpp"
#include "snf_reference.hpp"

using namespace qhol;

namespace {

ChainComplex space(const char* name, int truncation) {
    return standard_space_complex(SpaceSpec::parse(name), truncation);
}

FgAbelianGroup Z(int rank = 1) { return FgAbelianGroup::free(rank); }
FgAbelianGroup Z2() { return FgAbelianGroup::cyclic(2); }

}  // namespace

TEST_CASE("smith normal form on small fixtures") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors ==
          std::vector<Int>{1, 1, 1});

    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    const SmithResult snf = smith_normal_form(two);
    CHECK(snf.invariant_factors == std::vector<Int>{2});
    CHECK(snf.rank() == 1);

    CHECK(smith_normal_form(IntMatrix(3, 4)).invariant_factors.empty());
}

TEST_CASE("smith normal form matches the reference reduction") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dims(1, 8), entries(-9, 9);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix m(dims(rng), dims(rng));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = entries(rng);
        CHECK(smith_normal_form(m).invariant_factors ==
              qhol_test::reference_invariant_factors(m));
    }
}

TEST_CASE("rank over prime fields") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(m, 5) == 2);
    CHECK_THROWS_AS(rank_mod_p(m, 4), std::invalid_argument);
}

TEST_CASE("standard space complexes") {
    const ChainComplex cp3 = space("CP(3)", 6);
    CHECK(cp3.top_degree() == 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(cp3.rank(d) == (d % 2 == 0 ? 1 : 0));
    CHECK(cp3.is_valid());

    const ChainComplex rp2 = space("RP(2)", 2);
    CHECK(rp2.boundary(2).at(0, 0) == 2);
    CHECK(rp2.boundary(1).at(0, 0) == 0);

    CHECK_THROWS_AS(SpaceSpec::parse("CP(1)/CP(2)"), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::parse("K(2)"), std::invalid_argument);
}

TEST_CASE("homology of projective spaces") {
    const HomologyResult cp2 = homology_of_complex(space("CP(2)", 4), CoeffSystem::Z());
    CHECK(cp2.at(0) == Z());
    CHECK(cp2.at(1) == FgAbelianGroup::zero());
    CHECK(cp2.at(2) == Z());
    CHECK(cp2.at(4) == Z());

    // RP^3: Z, Z_2, 0, Z
    const HomologyResult rp3 = homology_of_complex(space("RP(3)", 3), CoeffSystem::Z());
    CHECK(rp3.at(0) == Z());
    CHECK(rp3.at(1) == Z2());
    CHECK(rp3.at(2) == FgAbelianGroup::zero());
    CHECK(rp3.at(3) == Z());

    // RP^2 mod 2: dimension 1 in degrees 0..2
    const HomologyResult rp2_mod2 =
        homology_of_complex(space("RP(2)", 2), CoeffSystem::Zp(2));
    for (int d = 0; d <= 2; ++d)
        CHECK(rp2_mod2.at(d) == Z(1));

    // RP^4 reduced integral: Z_2 at 1 and 3, zero at 2 and 4
    const HomologyResult rp4 =
        homology_of_complex(space("RP(4)", 4), CoeffSystem::Z()).reduced();
    CHECK(rp4.at(0) == FgAbelianGroup::zero());
    CHECK(rp4.at(1) == Z2());
    CHECK(rp4.at(2) == FgAbelianGroup::zero());
    CHECK(rp4.at(3) == Z2());
    CHECK(rp4.at(4) == FgAbelianGroup::zero());

    // stunted CP(5)/CP(1): Z at 4, 6, 8, 10
    const HomologyResult stunted =
        homology_of_complex(space("CP(5)/CP(1)", 10), CoeffSystem::Z());
    for (int d = 0; d <= 10; ++d)
        CHECK(stunted.at(d) == ((d >= 4 && d % 2 == 0) ? Z() : FgAbelianGroup::zero()));
}

TEST_CASE("invalid complexes are rejected") {
    // d1 . d2 != 0
    IntMatrix d1(1, 1), d2(1, 1);
    d1.at(0, 0) = 1;
    d2.at(0, 0) = 1;
    const ChainComplex bad({1, 1, 1}, {d1, d2});
    CHECK_FALSE(bad.is_valid());
    CHECK_THROWS_AS(homology_of_complex(bad, CoeffSystem::Z()), std::invalid_argument);
}

TEST_CASE("suspension shifts reduced homology") {
    const HomologyResult s3 = homology_of_complex(space("S(CP(1))", 3), CoeffSystem::Z());
    CHECK(s3.at(0) == Z());
    CHECK(s3.at(1) == FgAbelianGroup::zero());
    CHECK(s3.at(2) == FgAbelianGroup::zero());
    CHECK(s3.at(3) == Z());

    const HomologyResult srp2 = homology_of_complex(space("S(RP(2))", 3), CoeffSystem::Z());
    CHECK(srp2.at(1) == FgAbelianGroup::zero());
    CHECK(srp2.at(2) == Z2());
}

TEST_CASE("smash products via the Kunneth formula") {
    // S^2 ^ S^3 = S^5
    const HomologyResult s2 =
        homology_of_complex(space("CP(1)", 2), CoeffSystem::Z()).reduced();
    const HomologyResult s3 =
        homology_of_complex(space("S(CP(1))", 3), CoeffSystem::Z()).reduced();
    const HomologyResult smash = smash_homology(s2, s3);
    CHECK(smash.at(5) == Z());
    for (int d = 0; d <= 4; ++d)
        CHECK(smash.at(d) == FgAbelianGroup::zero());

    // CP^inf/RP^inf ^ CP^inf/CP^1 in degree 10: pairs (2,8), (4,6), (6,4)
    const HomologyResult factor1 =
        homology_of_complex(space("CP(8)", 16), CoeffSystem::Z()).shifted(2);
    const HomologyResult factor2 =
        homology_of_complex(space("CP(8)/CP(1)", 16), CoeffSystem::Z());
    const HomologyResult fold_smash = smash_homology(factor1, factor2);
    CHECK(fold_smash.at(6) == Z(1));
    CHECK(fold_smash.at(8) == Z(2));
    CHECK(fold_smash.at(10) == Z(3));
    CHECK(fold_smash.at(7) == FgAbelianGroup::zero());

    // smashing with a point kills everything
    const HomologyResult point = HomologyResult::zero(CoeffSystem::Z(), 10);
    const HomologyResult dead = smash_homology(s2, point);
    for (int d = 0; d <= dead.valid_to(); ++d)
        CHECK(dead.at(d) == FgAbelianGroup::zero());

    // torsion factors meet through gcd and Tor shifts the degree by one
    HomologyResult a = HomologyResult::zero(CoeffSystem::Z(), 6);
    a.set(2, FgAbelianGroup::cyclic(4));
    HomologyResult b = HomologyResult::zero(CoeffSystem::Z(), 6);
    b.set(3, FgAbelianGroup::cyclic(6));
    const HomologyResult t = smash_homology(a, b);
    CHECK(t.at(5) == FgAbelianGroup::cyclic(2));  // tensor: gcd(4,6)
    CHECK(t.at(6) == FgAbelianGroup::cyclic(2));  // Tor, one degree up
}

TEST_CASE("thom space homology is a degree shift") {
    // rank-r bundle over a point: a sphere
    HomologyResult point = HomologyResult::zero(CoeffSystem::Z(), 8);
    point.set(0, Z());
    const HomologyResult sphere = thom_space_homology(point, 3);
    CHECK(sphere.at(6) == Z());
    CHECK(sphere.at(0) == FgAbelianGroup::zero());

    // T(gamma^2) over CP^inf: Z in every even degree >= 2
    const HomologyResult cp = homology_of_complex(space("CP(10)", 20), CoeffSystem::Z());
    const HomologyResult thom = thom_space_homology(cp, 1);
    for (int d = 2; d <= 20; ++d)
        CHECK(thom.at(d) == ((d % 2 == 0) ? Z() : FgAbelianGroup::zero()));
    CHECK_THROWS_AS(thom_space_homology(cp, 0), std::invalid_argument);
}

TEST_CASE("universal coefficients consistency on fixtures") {
    for (const char* name : {"CP(4)", "RP(5)", "RP(6)", "CP(6)/CP(2)", "S(RP(4))"}) {
        const ChainComplex complex = space(name, 16);
        const HomologyResult integral = homology_of_complex(complex, CoeffSystem::Z());
        for (long p : {2L, 3L, 5L}) {
            const std::vector<int> expected = mod_p_dimensions_from_integral(integral, p);
            const HomologyResult direct = homology_of_complex(complex, CoeffSystem::Zp(p));
            for (int d = 0; d <= integral.valid_to(); ++d)
                CHECK(direct.at(d).free_rank() == expected[static_cast<size_t>(d)]);
        }
    }
}

TEST_CASE("parallel homology equals the serial reference") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> entries(-9, 9), sizes(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        // alternating random/zero boundaries satisfy dd = 0 by construction
        const int top = 12;
        std::vector<int> ranks(top + 1);
        for (int& r : ranks)
            r = sizes(rng);
        std::vector<IntMatrix> boundaries;
        for (int d = 1; d <= top; ++d) {
            IntMatrix b(ranks[d - 1], ranks[d]);
            if (d % 2 == 0)
                for (int r = 0; r < b.rows(); ++r)
                    for (int c = 0; c < b.cols(); ++c)
                        b.at(r, c) = entries(rng);
            boundaries.push_back(std::move(b));
        }
        const ChainComplex complex(ranks, boundaries);
        REQUIRE(complex.is_valid());
        for (const CoeffSystem coeff : {CoeffSystem::Z(), CoeffSystem::Zp(3)}) {
            const HomologyResult serial =
                homology_of_complex(complex, coeff, ExecutionPolicy::serial);
            const HomologyResult parallel =
                homology_of_complex(complex, coeff, ExecutionPolicy::parallel);
            CHECK(serial.degreewise_equal(parallel, serial.valid_to()));
        }
    }
}
