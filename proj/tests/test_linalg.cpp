#include <gtest/gtest.h>

#include <numbers>

#include "corepalg/errors.hpp"
#include "corepalg/linalg.hpp"
#include "test_support.hpp"

using namespace corepalg;
using namespace corepalg::testing;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(MatExp, ZeroGivesIdentity) {
    EXPECT_EQ(mat_exp(M::Zero(2, 2)), M::Identity(2, 2));
}

TEST(MatExp, RotationGeneratorMatchesClosedForm) {
    const double theta = kPi / 2;
    const M a = mat2(0, -theta, theta, 0);
    EXPECT_LE(max_abs_diff(mat_exp(a), rotation(theta)), 1e-12);
    EXPECT_LE(max_abs_diff(mat_exp(a), mat2(0, -1, 1, 0)), 1e-12);
}

TEST(MatExp, DiagonalMatchesScalarExponential) {
    M a = M::Zero(2, 2);
    a(0, 0) = a(1, 1) = kI * kPi;
    EXPECT_LE(max_abs_diff(mat_exp(a), -M::Identity(2, 2)), 1e-12);
}

TEST(MatExp, RelativeErrorOnLargeNormClosedForms) {
    // ||A||_F = 10 for the rotation generator with theta = 5 sqrt(2).
    const double theta = 5.0 * std::sqrt(2.0);
    const M a = mat2(0, -theta, theta, 0);
    const M expected = rotation(theta);
    EXPECT_LE((mat_exp(a) - expected).norm() / expected.norm(), 1e-12);

    M d = M::Zero(2, 2);
    d(0, 0) = C(2.0, 3.0);
    d(1, 1) = C(-4.0, 1.5);
    const M ed = mat_exp(d);
    EXPECT_LE(std::abs(ed(0, 0) - std::exp(d(0, 0))) / std::abs(std::exp(d(0, 0))), 1e-12);
    EXPECT_LE(std::abs(ed(1, 1) - std::exp(d(1, 1))) / std::abs(std::exp(d(1, 1))), 1e-12);
}

TEST(MatExp, NonSquareIsShapeError) {
    EXPECT_THROW(mat_exp(M::Zero(2, 3)), ShapeError);
}

TEST(MatExp, InverseProperty) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 4;
        M a = random_matrix(rng, n, n);
        a *= rng.uniform(0.0, 5.0) / a.norm();
        const M prod = mat_exp(a) * mat_exp(-a);
        EXPECT_LE(max_abs_diff(prod, M::Identity(n, n)), 1e-10) << "trial " << trial;
    }
}

TEST(FrobeniusDist, HandValues) {
    const M e = M::Identity(2, 2);
    EXPECT_EQ(frobenius_dist(e, e), 0.0);
    EXPECT_NEAR(frobenius_dist(e, -e), 2.0 * std::sqrt(2.0), 1e-15);
    EXPECT_THROW(frobenius_dist(e, M::Identity(3, 3)), ShapeError);
}

TEST(FrobeniusDist, MetricAxiomsOnRandomTriples) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const M a = random_matrix(rng, 3, 3);
        const M b = random_matrix(rng, 3, 3);
        const M c = random_matrix(rng, 3, 3);
        EXPECT_EQ(frobenius_dist(a, b), frobenius_dist(b, a));
        EXPECT_EQ(frobenius_dist(a, a), 0.0);
        EXPECT_GT(frobenius_dist(a, b), 0.0);
        EXPECT_LE(frobenius_dist(a, c), frobenius_dist(a, b) + frobenius_dist(b, c) + 1e-12);
    }
}

TEST(RealVectorize, ReThenImRowMajor) {
    M a(2, 2);
    a << C(1, 5), C(2, 6), C(3, 7), C(4, 8);
    Eigen::VectorXd expected(8);
    expected << 1, 2, 3, 4, 5, 6, 7, 8;
    EXPECT_EQ(real_vectorize(a), expected);
}

TEST(LstsqExpand, TargetIsFirstBasisElement) {
    const std::vector<M> basis{sigma1(), sigma3()};
    const Expansion ex = lstsq_expand(sigma1(), basis, Field::Real);
    EXPECT_NEAR(ex.coefficients(0).real(), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(ex.coefficients(1)), 0.0, 1e-14);
    EXPECT_LE(ex.residual, 1e-14);
    EXPECT_TRUE(ex.unique);
}

TEST(LstsqExpand, OrthogonalTargetHasZeroCoefficientAndUnitResidual) {
    const M target = mat2(0, 1, 0, 0);
    const std::vector<M> basis{M::Identity(2, 2)};
    const Expansion ex = lstsq_expand(target, basis, Field::Real);
    EXPECT_NEAR(std::abs(ex.coefficients(0)), 0.0, 1e-15);
    EXPECT_NEAR(ex.residual, 1.0, 1e-15);
}

TEST(LstsqExpand, RecoversConstructedCombination) {
    Rng rng(3);
    const M b1 = random_matrix(rng, 3, 3);
    const M b2 = random_matrix(rng, 3, 3);
    const std::vector<M> basis{b1, b2};
    const Expansion ex = lstsq_expand(2.0 * b1 - 3.0 * b2, basis, Field::Real);
    EXPECT_NEAR(ex.coefficients(0).real(), 2.0, 1e-12);
    EXPECT_NEAR(ex.coefficients(1).real(), -3.0, 1e-12);
    EXPECT_EQ(ex.coefficients(0).imag(), 0.0);
    EXPECT_LE(ex.residual, 1e-12);
}

TEST(LstsqExpand, RealVersusComplexField) {
    // i*E is not in the real span of E but is in its complex span.
    const std::vector<M> basis{M::Identity(2, 2)};
    const M target = kI * M::Identity(2, 2);
    EXPECT_NEAR(lstsq_expand(target, basis, Field::Real).residual, std::sqrt(2.0), 1e-14);
    const Expansion cx = lstsq_expand(target, basis, Field::Complex);
    EXPECT_LE(cx.residual, 1e-14);
    EXPECT_NEAR(std::abs(cx.coefficients(0) - kI), 0.0, 1e-14);
}

TEST(LstsqExpand, RankDeficientBasisUsesMinimumNorm) {
    const M e = M::Identity(2, 2);
    const std::vector<M> basis{e, e};
    const Expansion ex = lstsq_expand(2.0 * e, basis, Field::Real);
    EXPECT_FALSE(ex.unique);
    EXPECT_EQ(ex.basisRank, 1);
    EXPECT_NEAR(ex.coefficients(0).real(), 1.0, 1e-12);
    EXPECT_NEAR(ex.coefficients(1).real(), 1.0, 1e-12);
}

TEST(LstsqExpand, EmptyBasisAndShapeErrors) {
    EXPECT_THROW(lstsq_expand(M::Identity(2, 2), std::vector<M>{}, Field::Real), DomainError);
    const std::vector<M> basis{M::Identity(3, 3)};
    EXPECT_THROW(lstsq_expand(M::Identity(2, 2), basis, Field::Real), ShapeError);
}

TEST(FamilyRank, HandCases) {
    const M e = M::Identity(2, 2);
    EXPECT_EQ(family_rank(std::vector<M>{e, 2.0 * e}, Field::Real), 1);
    EXPECT_EQ(family_rank(std::vector<M>{e, kI * e}, Field::Real), 2);
    EXPECT_EQ(family_rank(std::vector<M>{e, kI * e}, Field::Complex), 1);
    EXPECT_EQ(family_rank(std::vector<M>{}, Field::Real), 0);
}

TEST(FamilyRank, AgreesWithGramDeterminantOracle) {
    // {E, iE}: the real 8-dimensional vectorizations are (1,0,0,1,0,0,0,0) and (0,0,0,0,1,0,0,1).
    const M e = M::Identity(2, 2);
    EXPECT_GT(real_gram_determinant({e, kI * e}), 0.5);
    EXPECT_NEAR(complex_gram_determinant({e, kI * e}), 0.0, 1e-14);

    const std::vector<M> pauli{sigma1(), sigma2(), sigma3()};
    EXPECT_NEAR(real_gram_determinant(pauli), 8.0, 1e-12);  // Gram = 2 E_3
    EXPECT_EQ(family_rank(pauli, Field::Real), 3);
}

TEST(FamilyRank, ResidualZeroIffRankUnchanged) {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<M> basis;
        const int k = 1 + trial % 3;
        for (int i = 0; i < k; ++i) basis.push_back(random_matrix(rng, 2, 2));
        M target = random_matrix(rng, 2, 2);
        if (trial % 2 == 0) {
            target = M::Zero(2, 2);
            for (const M& b : basis) target += rng.uniform(-2.0, 2.0) * b;
        }
        std::vector<M> extended = basis;
        extended.push_back(target);
        const bool inSpan = family_rank(extended, Field::Real) == family_rank(basis, Field::Real);
        const double residual = lstsq_expand(target, basis, Field::Real).residual;
        EXPECT_EQ(residual <= 1e-12, inSpan) << "trial " << trial << " residual " << residual;
    }
}

}  // namespace
