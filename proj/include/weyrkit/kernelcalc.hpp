#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"
#include "weyrkit/partition.hpp"
#include "weyrkit/weyrform.hpp"

// Closed-form kernel dimensions of powers of X -> AX - XB in terms of the
// Weyr characteristics of A and B.
namespace weyrkit {

/// dim ker φ^k for the nilpotent pair (N_α, N_β):
///
///   Σ_{r=2..k} Σ_{l=0..min(p,q)} α_{r+l} (β_{1+l} - β_{2+k-r+l})
///     + Σ_{l=0..min(p,q)} α_{1+l} Σ_{s=1..k} β_{s+l}
///
/// with parts beyond a partition's length read as zero. Requires k >= 1.
std::size_t d_ijk(const Partition& alpha, const Partition& beta, std::size_t k);

struct KernelDimReport {
    std::size_t k_max = 0;
    // (i, j) -> [d_ij1, ..., d_ijK] for every pair with λ_i = μ_j (0-based block indices).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> per_pair;
    std::vector<std::size_t> totals;  // totals[k-1] = dim ker φ^k
};

// Sum of d_ijk over block pairs with equal eigenvalues.
std::size_t kernel_dim(const EigenStructure& sa, const EigenStructure& sb, std::size_t k);

KernelDimReport kernel_dim_report(const EigenStructure& sa, const EigenStructure& sb,
                                  std::size_t k_max);

// Sorted, deduplicated λ_i - μ_j.
std::vector<Rational> operator_eigenvalues(const EigenStructure& sa, const EigenStructure& sb);

struct OperatorWeyr {
    Rational eigenvalue;
    Partition characteristic;
    std::size_t index() const { return characteristic.length(); }
};

/// Weyr characteristic of φ_AB at λ, term by term:
///
///   ω_k = Σ_{λ_i - λ = μ_j} Σ_{l} ( α_{i,1+l} β_{j,k+l}
///           + Σ_{r=2..k} α_{i,r+l} (β_{j,1+k-r+l} - β_{j,2+k-r+l}) )
///
/// for k = 1..q, q = max(p_i + q_j - 1). The result is cross-checked against
/// first differences of kernel_dim on the shifted structure. Throws
/// NotAnEigenvalue when λ is not an operator eigenvalue.
OperatorWeyr operator_weyr(const EigenStructure& sa, const EigenStructure& sb,
                           const Rational& lambda);

// Largest p_i + q_j - 1 over pairs with λ_i - μ_j = λ; 0 when there is none.
std::size_t operator_index(const EigenStructure& sa, const EigenStructure& sb,
                           const Rational& lambda);

// Σ_i Σ_j α_ij²
std::size_t centralizer_dim(const EigenStructure& s);

/// l x l matrix with entry (i, j) = C(m+n, m+i-j), 1-based.
Matrix binomial_matrix(std::size_t m, std::size_t n, std::size_t l);

/// Π_{i=1..l} (m+n+i-1)! (i-1)! / ((m+i-1)! (n+i-1)!)
Rational binomial_det_formula(std::size_t m, std::size_t n, std::size_t l);

struct CoefficientSolution {
    std::size_t power = 0;  // exponent of φ the chain is solved for
    std::size_t r = 1;      // starting block row of the chain
    std::size_t l = 0;      // chain length minus one
    std::vector<Rational> x;
};

/// Unique solution x_0..x_l of
///   Σ_j (-1)^(m+i-j) C(m+n, m+i-j) x_j = 1,  i = 0..l,
/// with m = power - r + 1 and n = r - 1. Throws std::invalid_argument when
/// r == 0 or r > power + 1.
CoefficientSolution coefficient_solve(std::size_t power, std::size_t r, std::size_t l);

// The coefficient matrix of that system.
Matrix coefficient_system(std::size_t power, std::size_t r, std::size_t l);

using InvariantTable = std::map<Rational, Partition>;

// λ -> operator Weyr characteristic, for every operator eigenvalue.
InvariantTable invariant_table(const EigenStructure& sa, const EigenStructure& sb);

/// Builds the table from matrices, using declared structures where given
/// (they must already have been checked). Propagates IrrationalSpectrum.
InvariantTable invariant_table(const Matrix& a, const Matrix& b,
                               const std::optional<EigenStructure>& declared_a = std::nullopt,
                               const std::optional<EigenStructure>& declared_b = std::nullopt);

bool operators_similar(const InvariantTable& t1, const InvariantTable& t2);

struct SimilarityWitness {
    Rational eigenvalue;
    // First k with differing dim ker φ^k_{A-λI,B}. A λ missing from one table
    // counts as dimension 0 there.
    std::size_t k = 0;
    std::size_t left = 0;   // dim ker at k for the first table
    std::size_t right = 0;  // and for the second
};

// nullopt when the tables agree.
std::optional<SimilarityWitness> first_difference(const InvariantTable& t1,
                                                  const InvariantTable& t2);

}  // namespace weyrkit
