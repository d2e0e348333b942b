#include <gtest/gtest.h>

#include <random>
#include <string>

#include "common/fixtures.hpp"
#include "snake/error.hpp"
#include "snake/snake.hpp"

namespace {

using namespace snake;

using Bits = std::vector<std::uint8_t>;

std::vector<GivensFactor> factors_in(const SnakeFactorization& snake,
                                     const std::vector<std::size_t>& order) {
    std::vector<GivensFactor> out;
    for (std::size_t k : order) out.push_back(snake.factor(k));
    return out;
}

TEST(GeneratingSequence, PartialSums) {
    const GeneratingSequence g({1, 0, 1, 0, 0, 1, 1, 0, 0});
    EXPECT_EQ(g.partial_sums(), (std::vector<std::size_t>{0, 1, 1, 2, 2, 2, 3, 4, 4, 4}));
    EXPECT_EQ(g.s(1), 1);
    EXPECT_EQ(g.s(9), 0);
    EXPECT_THROW(g.s(0), IndexError);
    EXPECT_THROW(g.s(10), IndexError);
}

TEST(GeneratingSequence, RejectsNonBits) {
    try {
        GeneratingSequence({0, 1, 2, 0});
        FAIL() << "expected ShapeError";
    } catch (const ShapeError& e) {
        EXPECT_EQ(e.index(), 3u);
    }
}

TEST(GeneratingSequence, NamedShapes) {
    EXPECT_EQ(GeneratingSequence::hessenberg(3), GeneratingSequence(Bits{0, 0, 0}));
    EXPECT_EQ(GeneratingSequence::cmv(4), GeneratingSequence(Bits{0, 1, 0, 1}));
    EXPECT_EQ(GeneratingSequence::cmv(5).partial_sums(),
              (std::vector<std::size_t>{0, 0, 1, 1, 2, 2}));
}

TEST(GeneratingSequence, FromMonomials) {
    const std::vector<int> mixed = {0, -1, 1, -2, 2, 3, -3, -4, 4, 5};
    const GeneratingSequence g = GeneratingSequence::from_monomials(mixed);
    EXPECT_EQ(g, fixtures::mixed_shape());
    EXPECT_EQ(g.exponents(), mixed);

    const std::vector<int> poly = {0, 1, 2, 3};
    EXPECT_EQ(GeneratingSequence::from_monomials(poly), GeneratingSequence::hessenberg(3));
    const std::vector<int> cmv = {0, 1, -1, 2, -2};
    EXPECT_EQ(GeneratingSequence::from_monomials(cmv), GeneratingSequence::cmv(4));
}

TEST(GeneratingSequence, FromMonomialsRejectsGaps) {
    const std::vector<int> gap = {0, 2};
    try {
        GeneratingSequence::from_monomials(gap);
        FAIL() << "expected ShapeError";
    } catch (const ShapeError& e) {
        EXPECT_EQ(e.index(), 1u);
        EXPECT_NE(std::string(e.what()).find("prefix {0,2} is not a contiguous range"),
                  std::string::npos);
    }
    const std::vector<int> late = {0, 1, -1, 3};
    EXPECT_THROW(GeneratingSequence::from_monomials(late), ShapeError);
    const std::vector<int> repeat = {0, 1, 1};
    EXPECT_THROW(GeneratingSequence::from_monomials(repeat), ShapeError);
    const std::vector<int> offset = {1, 0};
    EXPECT_THROW(GeneratingSequence::from_monomials(offset), ShapeError);
}

TEST(GeneratingSequence, ExponentsRoundTripForRandomShapes) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const GeneratingSequence g = fixtures::random_shape(rng, 15);
        const std::vector<int> r = g.exponents();
        EXPECT_EQ(GeneratingSequence::from_monomials(r), g);
        for (std::size_t n = 1; n <= g.size(); ++n) {
            EXPECT_LE(g.p(n), n);
            EXPECT_GE(g.p(n), g.p(n - 1));
            EXPECT_GE(n - g.p(n), n - 1 - g.p(n - 1));
        }
        EXPECT_EQ(g.flipped().flipped(), g);
    }
}

TEST(GivensFactor, CanonicalBlock) {
    const Complex a(0.3, -0.4);
    const GivensFactor f = GivensFactor::from_schur(2, a);
    EXPECT_EQ(f.k, 2u);
    EXPECT_TRUE(f.canonical);
    EXPECT_EQ(f.block(0, 0), std::conj(a));
    EXPECT_EQ(f.block(1, 1), -a);
    EXPECT_NEAR(f.block(0, 1).real(), std::sqrt(0.75), 1e-15);
    EXPECT_EQ(f.block(1, 0), f.block(0, 1));
    EXPECT_NEAR(std::abs(f.block.determinant() + 1.0), 0.0, 1e-15);
    EXPECT_LE(unitarity_defect(f.block), 1e-14);
}

TEST(BuildSnake, MixedShapeOrder) {
    std::mt19937_64 rng(2);
    const SnakeFactorization s(fixtures::random_schur(rng, 10), fixtures::mixed_shape());
    EXPECT_EQ(s.left(), (std::vector<std::size_t>{7, 6, 3, 1}));
    EXPECT_EQ(s.right(), (std::vector<std::size_t>{0, 2, 4, 5, 8, 9}));
    EXPECT_EQ(s.order(), (std::vector<std::size_t>{7, 6, 3, 1, 0, 2, 4, 5, 8, 9}));
}

TEST(BuildSnake, HessenbergIsAllRight) {
    const SnakeFactorization s(SchurSequence(std::vector<Complex>(5, 0.2)),
                               GeneratingSequence::hessenberg(4));
    EXPECT_TRUE(s.left().empty());
    EXPECT_EQ(s.right(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(BuildSnake, CmvRegroupsIntoEvenTimesOdd) {
    std::mt19937_64 rng(4);
    const SnakeFactorization s(fixtures::random_schur(rng, 9), GeneratingSequence::cmv(8));
    EXPECT_EQ(s.left(), (std::vector<std::size_t>{8, 6, 4, 2}));
    const auto snake_factors = factors_in(s, s.order());
    const auto regrouped = factors_in(s, {8, 6, 4, 2, 0, 1, 3, 5, 7});
    EXPECT_LE(max_abs_diff(multiply_factors(10, snake_factors), multiply_factors(10, regrouped)),
              1e-14);
}

TEST(BuildSnake, RegroupingCommutingFactorsKeepsProduct) {
    std::mt19937_64 rng(6);
    const SnakeFactorization s(fixtures::random_schur(rng, 10), fixtures::mixed_shape());
    // 6 and 3, 0 and 2, 5 and 8 are at distance >= 2.
    const auto base = multiply_factors(11, factors_in(s, s.order()));
    const auto swapped = multiply_factors(11, factors_in(s, {7, 3, 6, 1, 2, 0, 4, 8, 5, 9}));
    EXPECT_LE(max_abs_diff(base, swapped), 1e-14);
}

TEST(BuildSnake, RejectsLengthMismatch) {
    EXPECT_THROW(SnakeFactorization(SchurSequence({0.1, 0.2}), GeneratingSequence::cmv(3)),
                 ValidationError);
    EXPECT_THROW(SnakeFactorization(SchurSequence({0.1, 0.2, 0.3}), GeneratingSequence::cmv(1)),
                 ValidationError);
    EXPECT_THROW(SnakeFactorization(SchurSequence(), GeneratingSequence()), ValidationError);
    EXPECT_NO_THROW(SnakeFactorization(SchurSequence({0.1, 0.2}), GeneratingSequence::cmv(1)));
    EXPECT_NO_THROW(SnakeFactorization(SchurSequence({0.1, 0.2}), GeneratingSequence::cmv(2)));
}

TEST(MaterializeWindow, FreeHessenbergIsShift) {
    const SnakeFactorization s(SchurSequence(std::vector<Complex>(3, 0.0)),
                               GeneratingSequence::hessenberg(2));
    const ComplexMatrix w = materialize_window(s, 2);
    ASSERT_EQ(w.rows(), 4);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i) expected(i + 1, i) = 1.0;
    expected(0, 3) = 1.0;
    EXPECT_EQ(max_abs_diff(w, expected), 0.0);
}

TEST(MaterializeWindow, RejectsMissingFactors) {
    const SnakeFactorization s(SchurSequence({0.1, 0.2, 0.3}), GeneratingSequence::cmv(2));
    EXPECT_THROW(materialize_window(s, 3), IndexError);
}

TEST(MaterializeWindow, UnitaryUpTo128Factors) {
    std::mt19937_64 rng(8);
    for (std::size_t m : {1u, 5u, 33u, 127u}) {
        const SnakeFactorization s(fixtures::random_schur(rng, m + 1), fixtures::random_shape(rng, m));
        EXPECT_LE(unitarity_defect(materialize_window(s, m)), 1e-13) << m;
    }
}

TEST(MaterializeWindow, SubSnakeLocality) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<std::size_t> pick(0, 11);
    for (int trial = 0; trial < 20; ++trial) {
        const SnakeFactorization s(fixtures::random_schur(rng, 18), fixtures::random_shape(rng, 17));
        const std::size_t m = 11;
        const ComplexMatrix small = materialize_window(s, m);
        const ComplexMatrix large = materialize_window(s, m + 5);
        for (int sample = 0; sample < 20; ++sample) {
            const auto i = static_cast<Eigen::Index>(pick(rng));
            const auto j = static_cast<Eigen::Index>(pick(rng));
            EXPECT_LE(std::abs(small(i, j) - large(i, j)), 1e-14);
        }
    }
}

}  // namespace
