#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"
#include "weyrkit/partition.hpp"
#include "weyrkit/weyrform.hpp"

namespace weyrkit::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20240611;

Matrix example1_a();
Matrix example1_b();

// 5x5 unit matrix e_ij with 1-based indices, as written in the example.
Matrix e5(std::size_t i, std::size_t j);

// The published bases of ker φ and ker φ² for the Weyr pair of the example.
std::vector<Matrix> example1_basis_k1();
std::vector<Matrix> example1_basis_k2();

// Order-insensitive comparison of two lists of matrices (multiset equality).
bool same_matrix_set(std::vector<Matrix> a, std::vector<Matrix> b);

Partition random_partition(Rng& rng, std::size_t weight);
// Weight drawn uniformly from [1, max_weight].
Partition random_partition_up_to(Rng& rng, std::size_t max_weight);

// Integer matrix with determinant 1: a product of random elementary row
// operations, so its inverse is integral too.
Matrix random_unimodular(Rng& rng, std::size_t n);

// Random rational matrix with small entries; may be singular.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3);

// Structure with `eigenvalues` distinct values from a fixed small pool
// (integers and halves) and total dimension at most max_dim.
EigenStructure random_structure(Rng& rng, std::size_t max_dim, std::size_t eigenvalues);

// P W P⁻¹ for the Weyr matrix of s and a random unimodular P.
Matrix random_conjugate(Rng& rng, const EigenStructure& s);

Matrix conjugate(const Matrix& w, const Matrix& p);

// Every partition of weight 1..max_weight.
std::vector<Partition> partitions_up_to(std::size_t max_weight);

}  // namespace weyrkit::testing
