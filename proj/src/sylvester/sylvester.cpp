#include "weyrkit/sylvester.hpp"

#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"

namespace weyrkit {

SylvesterOperator::SylvesterOperator(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.is_square() || !b_.is_square()) {
        throw ShapeError("Sylvester operator needs square A and B");
    }
}

Matrix apply(const SylvesterOperator& op, const Matrix& x) {
    if (x.rows() != op.rows() || x.cols() != op.cols()) {
        throw ShapeError("apply: X must be " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()));
    }
    return op.a() * x - x * op.b();
}

Matrix apply_power(const SylvesterOperator& op, const Matrix& x, std::size_t times) {
    Matrix y = x;
    for (std::size_t i = 0; i < times; ++i) {
        y = apply(op, y);
    }
    return y;
}

Matrix vec(const Matrix& x) {
    Matrix v(x.rows() * x.cols(), 1);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        for (std::size_t i = 0; i < x.rows(); ++i) {
            v(j * x.rows() + i, 0) = x(i, j);
        }
    }
    return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) {
        throw ShapeError("unvec: vector length does not match target shape");
    }
    Matrix x(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            x(i, j) = v(j * rows + i, 0);
        }
    }
    return x;
}

Matrix vectorize(const SylvesterOperator& op) {
    return kron(Matrix::identity(op.cols()), op.a()) -
           kron(op.b().transpose(), Matrix::identity(op.rows()));
}

std::vector<std::size_t> oracle_kernel_dims(const SylvesterOperator& op, std::size_t k_max) {
    const Matrix phi = vectorize(op);
    std::vector<std::size_t> dims;
    Matrix power = phi;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (k > 1) {
            power = power * phi;
        }
        dims.push_back(nullity(power));
    }
    return dims;
}

std::vector<std::size_t> oracle_kernel_dims_until_stable(const SylvesterOperator& op) {
    const Matrix phi = vectorize(op);
    std::vector<std::size_t> dims{nullity(phi)};
    Matrix power = phi;
    for (;;) {
        power = power * phi;
        dims.push_back(nullity(power));
        if (dims.back() == dims[dims.size() - 2]) {
            return dims;
        }
    }
}

std::size_t oracle_ker_cap_im(const SylvesterOperator& op, std::size_t ell) {
    const Matrix phi = vectorize(op);
    return subspace_intersection(nullspace(phi), matpow(phi, ell)).cols();
}

std::size_t oracle_centralizer_dim(const Matrix& a) {
    return nullity(vectorize(SylvesterOperator(a, a)));
}

Verdict verify_kernel_basis(const SylvesterOperator& op, std::size_t k,
                            const std::vector<Matrix>& basis) {
    std::vector<Matrix> columns;
    columns.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Matrix& x = basis[i];
        if (x.rows() != op.rows() || x.cols() != op.cols()) {
            return {false, "element " + std::to_string(i) + " has the wrong shape"};
        }
        if (!apply_power(op, x, k).is_zero()) {
            return {false, "element " + std::to_string(i) + " is not annihilated by phi^" +
                               std::to_string(k)};
        }
        columns.push_back(vec(x));
    }
    const Matrix stacked = hstack(columns, op.dim());
    if (rank(stacked) != basis.size()) {
        return {false, "elements are linearly dependent"};
    }
    const std::size_t expected = nullity(matpow(vectorize(op), k));
    if (basis.size() != expected) {
        return {false, "basis has " + std::to_string(basis.size()) + " elements but dim ker phi^" +
                           std::to_string(k) + " = " + std::to_string(expected)};
    }
    return {};
}

}  // namespace weyrkit
