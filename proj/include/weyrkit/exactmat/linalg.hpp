#pragma once

#include <cstddef>
#include <vector>

#include "weyrkit/exactmat/kernels.hpp"
#include "weyrkit/exactmat/matrix.hpp"

namespace weyrkit {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

/// Reduced row echelon form by fraction pivoting (first nonzero entry in the
/// column). The result is unique, so serial and parallel runs agree exactly.
RrefResult rref(Matrix m, kernels::Exec exec = kernels::Exec::parallel);

std::size_t rank(const Matrix& m);
std::size_t nullity(const Matrix& m);

/// Canonical nullspace basis: one column per free variable of rref(m), in
/// increasing free-column order, with that free variable set to 1 and the
/// other free variables set to 0.
Matrix nullspace(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b, kernels::Exec exec = kernels::Exec::parallel);

// matpow(a, 0) is the identity.
Matrix matpow(const Matrix& a, std::size_t k);

// Block (i, j) of kron(a, b) is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// [nullity(M), nullity(M^2), ..., nullity(M^q)] where q is the first
/// exponent with nullity(M^q) == nullity(M^(q+1)).
std::vector<std::size_t> nullity_chain(const Matrix& m);

Rational determinant(const Matrix& m);

// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);

/// Unique solution of a x = b for square invertible a; b may have several
/// columns. Throws std::domain_error when a is singular.
Matrix solve(const Matrix& a, const Matrix& b);

/// Basis (as columns) of span(U) ∩ span(V) by the Zassenhaus construction:
/// row-reduce [[Uᵀ, Uᵀ], [Vᵀ, 0]] and keep the right halves of rows whose left
/// half vanished. Inputs may be spanning sets rather than bases.
Matrix subspace_intersection(const Matrix& u, const Matrix& v);

// Columns of m that form a basis of its column space (pivot columns).
Matrix column_space(const Matrix& m);

}  // namespace weyrkit
