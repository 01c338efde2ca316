#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"

// The operator X -> AX - XB as a concrete linear map, plus the brute-force
// oracle for the kernels of its powers. Nothing here depends on Weyr data:
// the oracle only uses exact matrix algebra.
namespace weyrkit {

class SylvesterOperator {
public:
    // Throws ShapeError unless both matrices are square.
    SylvesterOperator(Matrix a, Matrix b);

    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    std::size_t rows() const { return a_.rows(); }  // m
    std::size_t cols() const { return b_.rows(); }  // n
    std::size_t dim() const { return rows() * cols(); }

private:
    Matrix a_;
    Matrix b_;
};

// AX - XB; X must be m x n.
Matrix apply(const SylvesterOperator& op, const Matrix& x);
// `times` successive applications.
Matrix apply_power(const SylvesterOperator& op, const Matrix& x, std::size_t times);

// Column-stacking vec: entry (i, j) lands at index j*m + i.
Matrix vec(const Matrix& x);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

/// Φ = I_n ⊗ A - Bᵀ ⊗ I_m, so that Φ vec(X) = vec(AX - XB).
Matrix vectorize(const SylvesterOperator& op);

/// [nullity(Φ¹), ..., nullity(Φ^k_max)] by repeated multiplication.
std::vector<std::size_t> oracle_kernel_dims(const SylvesterOperator& op, std::size_t k_max);

/// oracle_kernel_dims continued until two consecutive powers agree. The last
/// entry is the first stable value.
std::vector<std::size_t> oracle_kernel_dims_until_stable(const SylvesterOperator& op);

/// dim(ker φ ∩ im φ^ℓ); im φ⁰ is the whole space.
std::size_t oracle_ker_cap_im(const SylvesterOperator& op, std::size_t ell);

/// nullity of I ⊗ A - Aᵀ ⊗ I.
std::size_t oracle_centralizer_dim(const Matrix& a);

struct Verdict {
    bool holds = true;
    std::string reason;  // first failing condition, empty when it holds

    explicit operator bool() const { return holds; }
};

/// Holds iff every element is killed by φ^k, the vectorized elements are
/// linearly independent and their count equals nullity(Φ^k).
Verdict verify_kernel_basis(const SylvesterOperator& op, std::size_t k,
                            const std::vector<Matrix>& basis);

}  // namespace weyrkit
