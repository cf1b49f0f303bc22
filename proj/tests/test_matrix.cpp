#include <gtest/gtest.h>

#include "flagres/matrix.hpp"
#include "flagres/sampling.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace flagres;

TEST(MatMul, IdentityIsNeutral) {
    Sampler rng(1);
    const Matrix g = rng.sl(4);
    EXPECT_EQ(mat_mul(Matrix::identity(4), g), g);
}

TEST(MatMul, UnipotentTimesWeylRepresentativeInSL2) {
    const Matrix n1{{1.0, 1.0}, {0.0, 1.0}};
    const Matrix s{{0.0, kI}, {kI, 0.0}};
    const Matrix expected{{kI, kI}, {kI, 0.0}};
    EXPECT_TRUE(MatrixNear(n1 * s, expected, 0.0));
}

TEST(MatMul, MatchesTripleLoop) {
    Sampler rng(7);
    for (int t = 0; t < 20; ++t) {
        const Matrix x = rng.sl(3), y = rng.sl(3);
        EXPECT_TRUE(MatrixNear(mat_mul(x, y), oracle::triple_loop_product(x, y), 1e-14));
    }
}

TEST(MatMul, DimensionMismatchThrows) {
    EXPECT_THROW(mat_mul(Matrix::identity(2), Matrix::identity(3)), DimensionError);
    EXPECT_THROW(Matrix(0), DimensionError);
}

TEST(MatInv, Examples) {
    EXPECT_EQ(mat_inv(Matrix::identity(3)), Matrix::identity(3));
    EXPECT_TRUE(MatrixNear(mat_inv(Matrix::diagonal({2.0, 0.5})), Matrix::diagonal({0.5, 2.0}), 1e-15));
}

TEST(MatInv, RandomDetOneProductIsIdentity) {
    Sampler rng(3);
    for (int t = 0; t < 50; ++t) {
        const Matrix g = rng.sl(3);
        EXPECT_LE((g * mat_inv(g) - Matrix::identity(3)).frobenius_norm(), 1e-10);
    }
}

TEST(MatInv, SingularThrows) {
    const Matrix s{{1.0, 2.0}, {2.0, 4.0}};
    EXPECT_THROW(mat_inv(s), SingularMatrixError);
    Matrix bad = Matrix::identity(2);
    bad(0, 1) = std::nan("");
    EXPECT_THROW(mat_inv(bad), SingularMatrixError);
}

TEST(Determinant, KnownValues) {
    const Matrix s{{0.0, kI}, {kI, 0.0}};
    EXPECT_NEAR(std::abs(determinant(s) - Complex{1.0, 0.0}), 0.0, 1e-15);
    const Matrix p{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
    EXPECT_NEAR(std::abs(determinant(p) + Complex{1.0, 0.0}), 0.0, 1e-15);
}

TEST(NilpotentExp, TruncatesExactly) {
    Matrix x(3);
    x(0, 1) = 2.0;
    x(1, 2) = 3.0;
    const Matrix e = nilpotent_exp(x);
    EXPECT_EQ(e(0, 1), Complex(2.0));
    EXPECT_EQ(e(1, 2), Complex(3.0));
    EXPECT_EQ(e(0, 2), Complex(3.0));  // x^2 / 2 = 6/2
}
