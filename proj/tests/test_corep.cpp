#include <gtest/gtest.h>

#include <numbers>

#include "corepalg/corep.hpp"
#include "corepalg/errors.hpp"
#include "test_support.hpp"

using namespace corepalg;
using namespace corepalg::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Corep so2_k() {
    return build_corep(catalog("SO2"), make_antilinear(M::Identity(2, 2), 1, AntilinearKind::K),
                       CorepType::A);
}

Corep u1_k_b() {
    return build_corep(catalog("U1"), make_antilinear(M::Identity(1, 1), 1, AntilinearKind::K),
                       CorepType::B);
}

M i_sigma2() { return kI * sigma2(); }  // [[0, 1], [-1, 0]]

Corep su2_k_b() {
    return build_corep(catalog("SU2"), make_antilinear(i_sigma2(), -1, AntilinearKind::K), CorepType::B);
}

TEST(Antilinear, SignatureViolationIsRejected) {
    EXPECT_THROW(make_antilinear(std::sqrt(2.0) * M::Identity(2, 2), 1, AntilinearKind::K),
                 SignatureError);
    EXPECT_NO_THROW(make_antilinear(i_sigma2(), -1, AntilinearKind::K));
    EXPECT_NEAR(signature_defect(i_sigma2(), -1), 0.0, 1e-15);
}

TEST(Intertwiner, SO2RealRepGivesIdentityWithPlusSign) {
    const IntertwinerSolution sol =
        solve_intertwiner(catalog("SO2"), AntilinearKind::K, default_intertwiner_samples(catalog("SO2")), 1);
    ASSERT_TRUE(sol.sign.has_value());
    EXPECT_EQ(*sol.sign, 1);
    EXPECT_LE(max_abs_diff(sol.N, M::Identity(2, 2)), 1e-9);
    EXPECT_LE(sol.residual, 1e-9);
}

TEST(Intertwiner, SU2FundamentalGivesISigma2WithMinusSign) {
    const GroupPresentation su2 = catalog("SU2");
    const IntertwinerSolution sol =
        solve_intertwiner(su2, AntilinearKind::K, default_intertwiner_samples(su2), 3);
    ASSERT_TRUE(sol.sign.has_value());
    EXPECT_EQ(*sol.sign, -1);
    EXPECT_LE(sol.residual, 1e-9);
    // Proportional to i sigma_2: |<N, i sigma_2>| = ||N|| ||i sigma_2||.
    const double overlap = std::abs(complex_inner(sol.N, i_sigma2()));
    EXPECT_NEAR(overlap, sol.N.norm() * i_sigma2().norm(), 1e-9);
    EXPECT_LE(max_abs_diff(sol.N * sol.N.conjugate(), -M::Identity(2, 2)), 1e-9);

    // Oracle: (i sigma_2) Delta*(g) (i sigma_2)^-1 = Delta(g) on random samples.
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const std::vector<double> a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const M g = evaluate(su2, a);
        EXPECT_LE(max_abs_diff(i_sigma2() * g.conjugate() * i_sigma2().inverse(), g), 1e-12);
    }
}

TEST(Intertwiner, U1HasNoIntertwiner) {
    EXPECT_THROW(solve_intertwiner(catalog("U1"), AntilinearKind::K, 8, 1), NoIntertwinerError);
}

TEST(Intertwiner, TooFewSamplesIsDomainError) {
    EXPECT_THROW(solve_intertwiner(catalog("SO3"), AntilinearKind::K, 2, 1), DomainError);
}

TEST(BuildCorep, U1TypeBBlocks) {
    const Corep c = u1_k_b();
    EXPECT_EQ(c.blockDim, 2);
    EXPECT_EQ(c.Da0, mat2(0, 1, 1, 0));
    EXPECT_LE(max_abs_diff(c.Da0 * c.Da0.conjugate(), M::Identity(2, 2)), 0.0);
    const std::vector<double> phi{0.7};
    EXPECT_LE(max_abs_diff(c.subgroup_matrix(phi), mat2(std::exp(kI * 0.7), 0, 0, std::exp(-kI * 0.7))),
              1e-14);
}

TEST(BuildCorep, TypeBMinusSignBlocks) {
    const Corep c = su2_k_b();
    M expected = M::Zero(4, 4);
    expected.topRightCorner(2, 2) = -M::Identity(2, 2);
    expected.bottomLeftCorner(2, 2) = M::Identity(2, 2);
    EXPECT_EQ(c.Da0, expected);
    EXPECT_LE(max_abs_diff(c.Da0 * c.Da0.conjugate(), -M::Identity(4, 4)), 0.0);
}

TEST(BuildCorep, TypeAWithNonIntertwinerFails) {
    // K with N = E does not intertwine the SU(2) fundamental.
    try {
        build_corep(catalog("SU2"), make_antilinear(M::Identity(2, 2), 1, AntilinearKind::K), CorepType::A);
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError& e) {
        EXPECT_GT(e.residual(), kIntertwinerTolerance);
    }
}

TEST(CosetMatrix, HandExamples) {
    const Corep c = u1_k_b();
    EXPECT_EQ(coset_matrix(c, ParameterPoint({0.0})), c.Da0);
    EXPECT_LE(max_abs_diff(coset_matrix(c, ParameterPoint({0.0}, kPi)), -c.Da0), 1e-12);
    EXPECT_LE(max_abs_diff(coset_matrix(c, ParameterPoint({kPi / 2})), mat2(0, kI, -kI, 0)), 1e-15);
}

TEST(CosetMatrix, FullTurnOfPhaseIsBitIdentical) {
    const Corep c = su2_k_b();
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const std::vector<double> a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double a0 = rng.uniform(0, 2 * kPi);
        EXPECT_EQ(coset_matrix(c, ParameterPoint(a, a0)), coset_matrix(c, ParameterPoint(a, a0 + 2 * kPi)));
    }
}

TEST(CorepProduct, HandExamples) {
    const Corep c = su2_k_b();
    const M e = M::Identity(4, 4);
    Rng rng(2);
    const M m = random_matrix(rng, 4, 4);
    const CorepOperator r1 = corep_product(c, {e, false}, {m, true});
    EXPECT_EQ(r1.matrix, m);
    EXPECT_TRUE(r1.antilinear);

    const CorepOperator r2 = corep_product(c, {c.Da0, true}, {c.Da0, true});
    EXPECT_FALSE(r2.antilinear);
    EXPECT_LE(max_abs_diff(r2.matrix, -e), 0.0);

    const std::vector<double> g{0.3, -0.2, 0.5}, h{-0.4, 0.1, 0.2};
    const M dg = c.subgroup_matrix(g), dh = c.subgroup_matrix(h);
    const CorepOperator r3 = corep_product(c, {dg, false}, {dh, false});
    EXPECT_FALSE(r3.antilinear);
    const GroupElement gh = group_product(c, {evaluate(c.group, g), false}, {evaluate(c.group, h), false});
    EXPECT_LE(max_abs_diff(r3.matrix, represent(c, gh).matrix), 1e-13);
}

TEST(CorepLaw, HoldsForReferenceExtensions) {
    EXPECT_LE(verify_corep_law(so2_k(), 100, 1), 1e-10);
    EXPECT_LE(verify_corep_law(u1_k_b(), 100, 1), 1e-10);
    EXPECT_LE(verify_corep_law(su2_k_b(), 100, 1), 1e-9);
}

TEST(CorepLaw, CorruptedDa0IsDetected) {
    for (Corep c : {so2_k(), u1_k_b(), su2_k_b()}) {
        c.Da0(0, 0) += 0.1;
        EXPECT_GE(verify_corep_law(c, 100, 1), 0.05) << c.group.name;
    }
}

TEST(CorepLaw, ThetaWithActionHolds) {
    const M t = mat2(1, 0, 0, -1);
    const AntilinearElement a0 = make_antilinear(t, 1, AntilinearKind::Theta, t);
    const Corep c = build_corep(catalog("SO2"), a0, CorepType::A);
    EXPECT_LE(verify_corep_law(c, 100, 5), 1e-9);
}

}  // namespace
