#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"
#include "weyrkit/partition.hpp"
#include "weyrkit/sylvester.hpp"
#include "weyrkit/weyrform.hpp"

// Explicit kernel bases of powers of φ_γδ(X) = N_γ X - X N_δ and of
// φ_{W_A W_B}, kept in symbolic block-chain form.
namespace weyrkit {

/// Block grid of a |γ| x |δ| matrix: cell (i, j) is γ_i x δ_j.
struct BlockType {
    Partition rows;
    Partition cols;

    std::size_t row_offset(std::size_t i) const;  // 1-based block index -> first row
    std::size_t col_offset(std::size_t j) const;
};

/// E_ij(γ,δ) ⊠ Z: a |γ| x |δ| zero matrix whose cell (i, j) holds the
/// upper-left min(γ_i, rows Z) x min(δ_j, cols Z) corner of Z. Block indices
/// are 1-based; throws ShapeError when out of range.
Matrix block_embed(const BlockType& type, std::size_t i, std::size_t j, const Matrix& z);

/// Σ_t x_t E_{r+t, s+t}(γ,δ) ⊠ e_{u,v}, t = 0..coefficients.size()-1.
/// All indices 1-based.
struct BasisElement {
    BlockType type;
    std::size_t r = 1;
    std::size_t s = 1;
    std::vector<Rational> coefficients;
    std::size_t u = 1;
    std::size_t v = 1;
    // Stratum: the element dies under φ^(level+1) but not under φ^level.
    std::size_t level = 0;

    std::size_t chain_length() const { return coefficients.size(); }
    Matrix materialize() const;
    // "(E21+2E32)⊠e11"
    std::string symbol() const;
};

/// Basis of ker φ_γδ from its two families of all-ones chains: full chains
/// ending in the last block column, and truncated chains ending in cell
/// (i, j) with i <= j < q whose inner column lies in (δ_{j+1}, δ_j]. Sorted
/// into the same canonical order as kernel_basis_k.
std::vector<BasisElement> kernel_basis_1(const Partition& gamma, const Partition& delta);

/// Basis of ker φ_γδ^k (k >= 1), built stratum by stratum so that it extends
/// the basis of ker φ^(k-1). Stratum k' = 0..k-1 takes every chain start
/// (r, s, l) of the ker φ^(k'+1) construction (r = 1 with ascending s, then
/// s = 1 with r = 2..k'+1, l ascending), inner (u, v) row-major with
/// u <= γ_{r+l} and δ_{2+k'-r+s+l} < v <= δ_{1+k'-r+s+l}, and coefficients
/// coefficient_solve(k', r, l) scaled so that x_0 > 0. Empty ranges are
/// skipped. Stratum 0 is kernel_basis_1.
std::vector<BasisElement> kernel_basis_k(const Partition& gamma, const Partition& delta,
                                         std::size_t k);

// Count only; equals d_ijk when the construction is right.
std::size_t kernel_basis_k_size(const Partition& gamma, const Partition& delta, std::size_t k);

/// A chain for the nilpotent pair (α_i, β_j) placed in outer cell (i, j) of
/// the (|α_1|, ...) x (|β_1|, ...) grid. Outer indices 1-based.
struct OperatorBasisElement {
    std::size_t outer_i = 1;
    std::size_t outer_j = 1;
    BasisElement inner;

    Matrix materialize(const EigenStructure& sa, const EigenStructure& sb) const;
    std::string symbol() const;
};

/// Basis of ker φ^k_{W_A W_B}: kernel_basis_k of every pair with λ_i = μ_j,
/// outer pairs in block order.
std::vector<OperatorBasisElement> operator_kernel_basis(const EigenStructure& sa,
                                                        const EigenStructure& sb, std::size_t k);

std::vector<Matrix> materialize(const std::vector<OperatorBasisElement>& basis,
                                const EigenStructure& sa, const EigenStructure& sb);

/// X' -> P X' Q⁻¹ for each element: Weyr coordinates back to the original
/// (A, B) coordinates.
std::vector<Matrix> pullback_basis(const WeyrDecomposition& decomp_a,
                                   const WeyrDecomposition& decomp_b,
                                   const std::vector<Matrix>& weyr_basis);

/// Every admissible (r, s, l) chain of the ker φ^{k+1} grid, each with
/// coefficients from coefficient_solve(k, r, l): the inputs
/// stratification_check expects.
std::vector<BasisElement> stratification_elements(const Partition& gamma,
                                                  const Partition& delta, std::size_t k);

/// Applies φ_γδ k times to the element and compares with the predicted
/// Σ_{j=0..l} E_{1+j, k-r+1+s+j} ⊠ e_{u,v}; then checks that one more
/// application gives zero. The element's coefficients must come from
/// coefficient_solve(k, r, l).
Verdict stratification_check(const Partition& gamma, const Partition& delta, std::size_t k,
                             const BasisElement& element);

}  // namespace weyrkit
