#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"
#include "weyrkit/partition.hpp"
#include "weyrkit/weyrform.hpp"

namespace weyrkit {
namespace {

using testing::example1_a;
using testing::example1_b;
using testing::Rng;

TEST(Partition, ValidatesParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    const Partition p{2, 2, 1};
    EXPECT_EQ(p.weight(), 5u);
    EXPECT_EQ(p.part(3), 1u);
    EXPECT_EQ(p.part(4), 0u);
    EXPECT_EQ(to_string(p), "(2,2,1)");
    EXPECT_EQ(to_string(Partition()), "()");
}

TEST(Partition, Dual) {
    EXPECT_EQ(dual_partition(Partition{2, 2, 1}), (Partition{3, 2}));
    EXPECT_EQ(dual_partition(Partition{4}), (Partition{1, 1, 1, 1}));
    for (const auto& p : testing::partitions_up_to(8)) {
        EXPECT_EQ(dual_partition(dual_partition(p)), p);
        EXPECT_EQ(dual_partition(p).weight(), p.weight());
    }
}

TEST(Partition, EnumerationCounts) {
    const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22};
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        EXPECT_EQ(all.size(), counts[n - 1]);
        EXPECT_EQ(all.front(), Partition({n}));
        EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend()));
    }
}

TEST(WeyrCharacteristic, Examples) {
    EXPECT_EQ(weyr_characteristic(example1_a(), 2), (Partition{2, 2, 1}));
    EXPECT_EQ(weyr_characteristic(example1_b(), 2), (Partition{3, 2}));
    EXPECT_EQ(weyr_characteristic(Matrix(3, 3), 0), (Partition{3}));
    EXPECT_THROW(weyr_characteristic(example1_a(), 1), NotAnEigenvalue);
}

TEST(EigenStructure, Examples) {
    const auto s = eigen_structure(example1_a());
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.blocks()[0].eigenvalue, 2);
    EXPECT_EQ(s.blocks()[0].characteristic, (Partition{2, 2, 1}));

    const auto d = eigen_structure(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d.blocks()[0].characteristic, (Partition{2}));
    EXPECT_EQ(d.blocks()[1].eigenvalue, 2);
    EXPECT_EQ(d.blocks()[1].characteristic, (Partition{1}));

    EXPECT_THROW(eigen_structure(Matrix{{0, -1}, {1, 0}}), IrrationalSpectrum);
}

TEST(EigenStructure, RejectsBadBlocks) {
    EXPECT_THROW(EigenStructure({{1, Partition{1}}, {1, Partition{2}}}), std::invalid_argument);
    EXPECT_THROW(EigenStructure({{1, Partition()}}), std::invalid_argument);
    const EigenStructure s({{3, Partition{1}}, {-1, Partition{2, 1}}});
    EXPECT_EQ(s.blocks()[0].eigenvalue, -1);
    EXPECT_EQ(s.dim(), 4u);
    EXPECT_EQ(s.shifted(1).blocks()[1].eigenvalue, 2);
}

TEST(NilpotentWeyr, Examples) {
    EXPECT_EQ(nilpotent_weyr(Partition{1, 1}), (Matrix{{0, 1}, {0, 0}}));
    Matrix expected(5, 5);
    expected(0, 2) = 1;
    expected(1, 3) = 1;
    expected(2, 4) = 1;
    EXPECT_EQ(nilpotent_weyr(Partition{2, 2, 1}), expected);
    for (const auto& g : testing::partitions_up_to(6)) {
        const Matrix n = nilpotent_weyr(g);
        EXPECT_TRUE(matpow(n, g.length()).is_zero());
        EXPECT_EQ(weyr_characteristic(n, 0), g);
    }
}

TEST(WeyrMatrix, Examples) {
    EXPECT_TRUE(weyr_matrix(EigenStructure({{0, Partition{3}}})).is_zero());
    EXPECT_EQ(weyr_matrix(EigenStructure({{2, Partition{2, 2, 1}}})),
              Rational(2) * Matrix::identity(5) + nilpotent_weyr(Partition{2, 2, 1}));
    EXPECT_EQ(weyr_matrix(EigenStructure({{1, Partition{1}}, {2, Partition{1}}})),
              (Matrix{{1, 0}, {0, 2}}));
}

TEST(WeyrTransform, Example1) {
    const Matrix a = example1_a();
    const auto d = weyr_transform(a);
    EXPECT_EQ(d.weyr, Rational(2) * Matrix::identity(5) + nilpotent_weyr(Partition{2, 2, 1}));
    EXPECT_EQ(d.p_inv * a * d.p, d.weyr);
    EXPECT_EQ(d.p * d.p_inv, Matrix::identity(5));
}

TEST(WeyrTransform, WeyrInputGivesIdentity) {
    const EigenStructure s({{-1, Partition{2, 1}}, {3, Partition{3, 2, 2}}});
    const auto d = weyr_transform(weyr_matrix(s));
    EXPECT_EQ(d.p, Matrix::identity(s.dim()));
    EXPECT_EQ(d.weyr, weyr_matrix(s));
}

TEST(WeyrTransform, AscendingOrderPermutes) {
    const auto d = weyr_transform(Matrix{{2, 0}, {0, 1}});
    EXPECT_EQ(d.weyr, (Matrix{{1, 0}, {0, 2}}));
    EXPECT_EQ(d.p, (Matrix{{0, 1}, {1, 0}}));
}

TEST(WeyrTransform, RoundTripAllSmallPartitions) {
    Rng rng(testing::kSeed + 10);
    for (const auto& g : testing::partitions_up_to(8)) {
        const EigenStructure s({{Rational(1, 2), g}});
        const Matrix a = testing::random_conjugate(rng, s);
        EXPECT_EQ(eigen_structure(a), s) << to_string(g);
        const auto d = weyr_transform(a);
        EXPECT_EQ(d.weyr, weyr_matrix(s));
        EXPECT_EQ(d.p_inv * a * d.p, d.weyr);
    }
}

TEST(WeyrTransform, MultiEigenvalueSimilarityInvariance) {
    Rng rng(testing::kSeed + 11);
    for (int trial = 0; trial < 30; ++trial) {
        const EigenStructure s = testing::random_structure(rng, 7, 1 + trial % 3);
        const Matrix a = testing::random_conjugate(rng, s);
        const Matrix a2 = testing::conjugate(a, testing::random_unimodular(rng, s.dim()));
        EXPECT_EQ(eigen_structure(a), s);
        EXPECT_EQ(eigen_structure(a2), s);
        const auto d = weyr_transform(a2);
        EXPECT_EQ(d.p_inv * a2 * d.p, weyr_matrix(s));
    }
}

TEST(DeclaredStructure, Checks) {
    const Matrix a = example1_a();
    EXPECT_FALSE(check_declared_structure(a, EigenStructure({{2, Partition{2, 2, 1}}})));
    EXPECT_TRUE(check_declared_structure(a, EigenStructure({{2, Partition{3, 2}}})));
    EXPECT_TRUE(check_declared_structure(a, EigenStructure({{1, Partition{2, 2, 1}}})));
    EXPECT_TRUE(check_declared_structure(a, EigenStructure({{2, Partition{2, 2}}})));
    const auto d = weyr_transform(a, EigenStructure({{2, Partition{2, 2, 1}}}));
    EXPECT_EQ(d.p_inv * a * d.p, d.weyr);
}

}  // namespace
}  // namespace weyrkit
