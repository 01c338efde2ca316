#include "weyrkit/exactmat/linalg.hpp"

#include <stdexcept>

#include "weyrkit/errors.hpp"

namespace weyrkit {

namespace {

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square()) {
        throw ShapeError(std::string(op) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

RrefResult rref(Matrix m, kernels::Exec exec) {
    RrefResult out;
    std::vector<std::size_t> support;
    Rational inv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, row);

        // Entries left of col in the pivot row are already zero.
        inv = 1 / m(row, col);
        support.clear();
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (sgn(m(row, j)) != 0) {
                m(row, j) *= inv;
                support.push_back(j);
            }
        }
        kernels::eliminate(m, row, col, support, exec);
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = out.pivot_columns.size();
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

Matrix nullspace(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_columns) {
        is_pivot[c] = true;
    }
    Matrix basis(n, n - r.rank);
    std::size_t out_col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        basis(f, out_col) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) {
            basis(r.pivot_columns[i], out_col) = -r.reduced(i, f);
        }
        ++out_col;
    }
    return basis;
}

Matrix matmul(const Matrix& a, const Matrix& b, kernels::Exec exec) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
    }
    Matrix out(a.rows(), b.cols());
    kernels::matmul(a, b, out, exec);
    return out;
}

Matrix matpow(const Matrix& a, std::size_t k) {
    require_square(a, "matpow");
    Matrix result = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < k; ++i) {
        result = result * a;
    }
    return result;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a(i, j);
            if (sgn(aij) == 0) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<std::size_t> nullity_chain(const Matrix& m) {
    require_square(m, "nullity_chain");
    std::vector<std::size_t> chain{nullity(m)};
    Matrix power = m;
    for (;;) {
        power = power * m;
        const std::size_t next = nullity(power);
        if (next == chain.back()) {
            return chain;
        }
        chain.push_back(next);
    }
}

Rational determinant(const Matrix& m) {
    require_square(m, "determinant");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    Rational factor;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            a.swap_rows(pivot, col);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) {
                continue;
            }
            factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
            }
        }
    }
    return det;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    require_square(a, "solve");
    if (b.rows() != a.rows()) {
        throw ShapeError("solve: right-hand side has wrong row count");
    }
    const std::size_t n = a.rows();
    const RrefResult r = rref(hstack(a, b));
    if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) {
        throw std::domain_error("solve: singular system");
    }
    Matrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            x(i, j) = r.reduced(i, n + j);
        }
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    require_square(m, "inverse");
    return solve(m, Matrix::identity(m.rows()));
}

Matrix subspace_intersection(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows()) {
        throw ShapeError("subspace_intersection: ambient dimensions differ (" +
                         std::to_string(u.rows()) + " vs " + std::to_string(v.rows()) + ")");
    }
    const std::size_t n = u.rows();
    Matrix z(u.cols() + v.cols(), 2 * n);
    for (std::size_t c = 0; c < u.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            z(c, i) = u(i, c);
            z(c, n + i) = u(i, c);
        }
    }
    for (std::size_t c = 0; c < v.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            z(u.cols() + c, i) = v(i, c);
        }
    }
    const RrefResult r = rref(std::move(z));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivot_columns[i] >= n) {
            keep.push_back(i);
        }
    }
    Matrix basis(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            basis(i, c) = r.reduced(keep[c], n + i);
        }
    }
    return basis;
}

Matrix column_space(const Matrix& m) {
    const RrefResult r = rref(m);
    Matrix basis(m.rows(), r.rank);
    for (std::size_t c = 0; c < r.rank; ++c) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            basis(i, c) = m(i, r.pivot_columns[c]);
        }
    }
    return basis;
}

}  // namespace weyrkit
