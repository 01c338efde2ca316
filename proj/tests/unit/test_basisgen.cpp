#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weyrkit/basisgen.hpp"
#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"
#include "weyrkit/kernelcalc.hpp"

namespace weyrkit {
namespace {

using testing::e5;
using testing::Rng;

const Partition kGamma{2, 2, 1};
const Partition kDelta{3, 2};

std::vector<Matrix> dense(const std::vector<BasisElement>& basis) {
    std::vector<Matrix> out;
    for (const auto& e : basis) {
        out.push_back(e.materialize());
    }
    return out;
}

std::size_t span_rank(const std::vector<Matrix>& elements) {
    if (elements.empty()) {
        return 0;
    }
    Matrix stacked = vec(elements.front());
    for (std::size_t i = 1; i < elements.size(); ++i) {
        stacked = hstack(stacked, vec(elements[i]));
    }
    return rank(stacked);
}

TEST(BlockEmbed, Examples) {
    const BlockType one{Partition{1}, Partition{1}};
    EXPECT_EQ(block_embed(one, 1, 1, Matrix{{1}}), (Matrix{{1}}));

    const BlockType t{kGamma, kDelta};
    EXPECT_EQ(block_embed(t, 1, 2, Matrix::unit(1, 1, 0, 0)), e5(1, 4));

    const BlockType small{Partition{2}, Partition{2}};
    const Matrix z{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(block_embed(small, 1, 1, z), (Matrix{{1, 2}, {4, 5}}));

    EXPECT_THROW(block_embed(t, 4, 1, z), ShapeError);
    EXPECT_THROW(block_embed(t, 1, 0, z), ShapeError);
}

TEST(BlockEmbed, Linear) {
    Rng rng(testing::kSeed + 40);
    const BlockType t{kGamma, kDelta};
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix z1 = testing::random_matrix(rng, 2, 3);
        const Matrix z2 = testing::random_matrix(rng, 2, 3);
        EXPECT_EQ(block_embed(t, 2, 1, z1 + z2), block_embed(t, 2, 1, z1) + block_embed(t, 2, 1, z2));
    }
}

TEST(KernelBasis1, Example1) {
    const auto basis = kernel_basis_1(kGamma, kDelta);
    ASSERT_EQ(basis.size(), 10u);
    EXPECT_TRUE(testing::same_matrix_set(dense(basis), testing::example1_basis_k1()));

    const auto unit = kernel_basis_1(Partition{1}, Partition{1});
    ASSERT_EQ(unit.size(), 1u);
    EXPECT_EQ(unit[0].materialize(), (Matrix{{1}}));
}

TEST(KernelBasis1, CountsAndAgreesWithKernelBasisK) {
    for (const auto& g : testing::partitions_up_to(5)) {
        for (const auto& d : testing::partitions_up_to(5)) {
            const auto b1 = kernel_basis_1(g, d);
            std::size_t expected = 0;
            for (std::size_t i = 1; i <= std::min(g.length(), d.length()); ++i) {
                expected += g.part(i) * d.part(i);
            }
            EXPECT_EQ(b1.size(), expected);
            const auto bk = kernel_basis_k(g, d, 1);
            ASSERT_EQ(bk.size(), b1.size());
            for (std::size_t i = 0; i < bk.size(); ++i) {
                EXPECT_EQ(bk[i].materialize(), b1[i].materialize());
                for (const auto& x : bk[i].coefficients) {
                    EXPECT_EQ(x, 1);
                }
            }
        }
    }
}

TEST(KernelBasisK, Example1) {
    const auto basis = kernel_basis_k(kGamma, kDelta, 2);
    ASSERT_EQ(basis.size(), 18u);
    EXPECT_TRUE(testing::same_matrix_set(dense(basis), testing::example1_basis_k2()));
    bool found = false;
    for (const auto& e : basis) {
        if (e.r == 2 && e.s == 1 && e.chain_length() == 2) {
            EXPECT_EQ(e.coefficients, (std::vector<Rational>{1, 2}));
            EXPECT_EQ(e.symbol().substr(0, 10), "(E21+2E32)");
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(kernel_basis_k(kGamma, kDelta, 0), std::invalid_argument);
}

TEST(KernelBasisK, VerifiesAgainstOracle) {
    Rng rng(testing::kSeed + 41);
    for (int trial = 0; trial < 40; ++trial) {
        const Partition g = testing::random_partition_up_to(rng, 6);
        const Partition d = testing::random_partition_up_to(rng, 6);
        const SylvesterOperator op(nilpotent_weyr(g), nilpotent_weyr(d));
        for (std::size_t k = 1; k < g.length() + d.length(); ++k) {
            const auto basis = kernel_basis_k(g, d, k);
            EXPECT_EQ(basis.size(), d_ijk(g, d, k));
            EXPECT_EQ(kernel_basis_k_size(g, d, k), basis.size());
            const Verdict v = verify_kernel_basis(op, k, dense(basis));
            EXPECT_TRUE(v) << to_string(g) << to_string(d) << " k=" << k << ": " << v.reason;
        }
    }
}

TEST(KernelBasisK, Nested) {
    for (const auto& g : testing::partitions_up_to(5)) {
        for (const auto& d : testing::partitions_up_to(4)) {
            const SylvesterOperator op(nilpotent_weyr(g), nilpotent_weyr(d));
            std::vector<Matrix> prev;
            for (std::size_t k = 1; k < g.length() + d.length(); ++k) {
                const auto cur = dense(kernel_basis_k(g, d, k));
                for (const auto& x : cur) {
                    ASSERT_TRUE(apply_power(op, x, k + 1).is_zero());
                }
                std::vector<Matrix> both = cur;
                both.insert(both.end(), prev.begin(), prev.end());
                EXPECT_EQ(span_rank(both), cur.size());
                prev = cur;
            }
        }
    }
}

TEST(OperatorKernelBasis, Example1AndDisjoint) {
    const EigenStructure sa({{2, kGamma}});
    const EigenStructure sb({{2, kDelta}});
    EXPECT_TRUE(testing::same_matrix_set(materialize(operator_kernel_basis(sa, sb, 1), sa, sb),
                                         testing::example1_basis_k1()));
    const auto k2 = materialize(operator_kernel_basis(sa, sb, 2), sa, sb);
    EXPECT_TRUE(testing::same_matrix_set(k2, testing::example1_basis_k2()));
    const Matrix e31 = e5(3, 1) + Rational(2) * e5(5, 4);
    EXPECT_NE(std::find(k2.begin(), k2.end(), e31), k2.end());

    const EigenStructure other({{1, Partition{2}}});
    EXPECT_TRUE(operator_kernel_basis(sa, other, 3).empty());
}

TEST(OperatorKernelBasis, MultiEigenvalueCountsAndVerification) {
    Rng rng(testing::kSeed + 42);
    for (int trial = 0; trial < 10; ++trial) {
        const EigenStructure sa = testing::random_structure(rng, 5, 2);
        const EigenStructure sb = testing::random_structure(rng, 4, 2);
        const SylvesterOperator op(weyr_matrix(sa), weyr_matrix(sb));
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto basis = operator_kernel_basis(sa, sb, k);
            EXPECT_EQ(basis.size(), kernel_dim(sa, sb, k));
            EXPECT_TRUE(verify_kernel_basis(op, k, materialize(basis, sa, sb)));
        }
    }
}

TEST(Pullback, IdentityAndExample1) {
    const EigenStructure sa({{2, kGamma}});
    const EigenStructure sb({{2, kDelta}});
    const auto weyr = materialize(operator_kernel_basis(sa, sb, 1), sa, sb);

    const WeyrDecomposition id_a{sa, weyr_matrix(sa), Matrix::identity(5), Matrix::identity(5)};
    const WeyrDecomposition id_b{sb, weyr_matrix(sb), Matrix::identity(5), Matrix::identity(5)};
    EXPECT_EQ(pullback_basis(id_a, id_b, weyr), weyr);

    const auto da = weyr_transform(testing::example1_a());
    const auto db = weyr_transform(testing::example1_b());
    const auto original = pullback_basis(da, db, weyr);
    EXPECT_TRUE(verify_kernel_basis(
        SylvesterOperator(testing::example1_a(), testing::example1_b()), 1, original));

    const WeyrDecomposition back_a{sa, weyr_matrix(sa), da.p_inv, da.p};
    const WeyrDecomposition back_b{sb, weyr_matrix(sb), db.p_inv, db.p};
    EXPECT_EQ(pullback_basis(back_a, back_b, original), weyr);

    EXPECT_THROW(pullback_basis(da, db, {Matrix(4, 5)}), ShapeError);
}

TEST(Stratification, Example1Element) {
    const BasisElement e{{kGamma, kDelta}, 2, 1, coefficient_solve(1, 2, 1).x, 1, 1};
    EXPECT_EQ(e.materialize(), e5(3, 1) + Rational(2) * e5(5, 4));
    EXPECT_TRUE(stratification_check(kGamma, kDelta, 1, e));

    for (const auto& b : kernel_basis_1(kGamma, kDelta)) {
        EXPECT_TRUE(stratification_check(kGamma, kDelta, 0, b)) << b.symbol();
    }

    BasisElement wrong = e;
    wrong.coefficients = {1, 1};
    EXPECT_FALSE(stratification_check(kGamma, kDelta, 1, wrong));
}

TEST(Stratification, RandomPartitions) {
    Rng rng(testing::kSeed + 43);
    for (int trial = 0; trial < 30; ++trial) {
        const Partition g = testing::random_partition_up_to(rng, 7);
        const Partition d = testing::random_partition_up_to(rng, 7);
        for (std::size_t k = 0; k + 2 <= g.length() + d.length(); ++k) {
            for (const auto& e : stratification_elements(g, d, k)) {
                const Verdict v = stratification_check(g, d, k, e);
                EXPECT_TRUE(v) << to_string(g) << to_string(d) << " k=" << k << ": " << v.reason;
            }
        }
    }
}

}  // namespace
}  // namespace weyrkit
