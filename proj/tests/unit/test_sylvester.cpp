#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"
#include "weyrkit/sylvester.hpp"
#include "weyrkit/weyrform.hpp"

namespace weyrkit {
namespace {

using testing::example1_a;
using testing::example1_b;
using testing::Rng;

SylvesterOperator example1() { return {example1_a(), example1_b()}; }

TEST(Sylvester, RejectsNonSquare) {
    EXPECT_THROW(SylvesterOperator(Matrix(2, 3), Matrix(2, 2)), ShapeError);
    const SylvesterOperator op(Matrix(2, 2), Matrix(3, 3));
    EXPECT_THROW(apply(op, Matrix(3, 2)), ShapeError);
}

TEST(Sylvester, ApplyExamples) {
    const Matrix a = example1_a();
    EXPECT_TRUE(apply(SylvesterOperator(a, a), Matrix::identity(5)).is_zero());
    Rng rng(testing::kSeed + 20);
    const SylvesterOperator zero(Matrix(3, 3), Matrix(2, 2));
    EXPECT_TRUE(apply(zero, testing::random_matrix(rng, 3, 2)).is_zero());

    const Matrix x = Matrix::unit(5, 5, 0, 3);
    EXPECT_EQ(apply(example1(), x), example1_a() * x - x * example1_b());
    EXPECT_EQ(apply_power(example1(), x, 0), x);
}

TEST(Sylvester, VectorizeExamples) {
    EXPECT_TRUE(vectorize(SylvesterOperator(Matrix(2, 2), Matrix(3, 3))).is_zero());
    EXPECT_EQ(vectorize(SylvesterOperator(Matrix{{5}}, Matrix{{2}})), (Matrix{{3}}));
    EXPECT_EQ(nullity(vectorize(example1())), 10u);
}

TEST(Sylvester, VecRoundTripAndCompatibility) {
    Rng rng(testing::kSeed + 21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % 4;
        const SylvesterOperator op(testing::random_matrix(rng, m, m),
                                   testing::random_matrix(rng, n, n));
        const Matrix x = testing::random_matrix(rng, m, n);
        EXPECT_EQ(unvec(vec(x), m, n), x);
        EXPECT_EQ(vectorize(op) * vec(x), vec(apply(op, x)));
    }
    // Column stacking: entry (i, j) at j*m + i.
    const Matrix v = vec(Matrix{{1, 2}, {3, 4}});
    EXPECT_EQ(v, Matrix::column_vector({1, 3, 2, 4}));
}

TEST(Oracle, KernelDims) {
    EXPECT_EQ(oracle_kernel_dims(example1(), 4), (std::vector<std::size_t>{10, 18, 23, 25}));
    EXPECT_EQ(oracle_kernel_dims(SylvesterOperator(Matrix{{0}}, Matrix{{1}}), 3),
              (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(oracle_kernel_dims(SylvesterOperator(Matrix{{0}}, Matrix{{0}}), 3),
              (std::vector<std::size_t>{1, 1, 1}));
    EXPECT_EQ(oracle_kernel_dims_until_stable(example1()),
              (std::vector<std::size_t>{10, 18, 23, 25, 25}));
}

TEST(Oracle, KerCapIm) {
    EXPECT_EQ(oracle_ker_cap_im(example1(), 0), 10u);
    EXPECT_EQ(oracle_ker_cap_im(example1(), 1), 8u);
    EXPECT_EQ(oracle_ker_cap_im(example1(), 3), 2u);
    EXPECT_EQ(oracle_ker_cap_im(example1(), 4), 0u);
}

TEST(Oracle, Centralizer) {
    EXPECT_EQ(oracle_centralizer_dim(example1_a()), 9u);
    EXPECT_EQ(oracle_centralizer_dim(Matrix::identity(3)), 9u);
    EXPECT_EQ(oracle_centralizer_dim(Matrix{{1, 0}, {0, 2}}), 2u);
}

TEST(VerifyKernelBasis, PaperListsAndFailures) {
    const EigenStructure sa({{2, Partition{2, 2, 1}}});
    const EigenStructure sb({{2, Partition{3, 2}}});
    const SylvesterOperator weyr(weyr_matrix(sa), weyr_matrix(sb));
    EXPECT_TRUE(verify_kernel_basis(weyr, 1, testing::example1_basis_k1()));
    EXPECT_TRUE(verify_kernel_basis(weyr, 2, testing::example1_basis_k2()));

    auto dup = testing::example1_basis_k1();
    dup.back() = dup.front();
    const Verdict v = verify_kernel_basis(weyr, 1, dup);
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("dependent"), std::string::npos) << v.reason;

    auto short_list = testing::example1_basis_k1();
    short_list.pop_back();
    EXPECT_FALSE(verify_kernel_basis(weyr, 1, short_list));

    // ker φ² elements are not all in ker φ.
    EXPECT_FALSE(verify_kernel_basis(weyr, 1, testing::example1_basis_k2()));
}

}  // namespace
}  // namespace weyrkit
