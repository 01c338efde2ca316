#include "weyrkit/exactmat/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/kernels.hpp"

namespace weyrkit {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m.at(i, j) = 1;
    return m;
}

Matrix Matrix::column_vector(std::vector<Rational> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
}

Rational& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) {
        throw ShapeError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                         shape(*this));
    }
    return (*this)(i, j);
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw ShapeError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                         shape(*this));
    }
    return (*this)(i, j);
}

Matrix Matrix::column(std::size_t j) const {
    if (j >= cols_) {
        throw ShapeError("column index out of range");
    }
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        c(i, 0) = (*this)(i, j);
    }
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) {
        throw ShapeError("trace of non-square " + shape(*this));
    }
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return sgn(x) == 0; });
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    auto ra = row(a);
    auto rb = row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
    for (auto& x : entries_) {
        x *= scalar;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(Matrix a, const Rational& scalar) { return a *= scalar; }
Matrix operator*(const Rational& scalar, Matrix a) { return a *= scalar; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: shape mismatch " + shape(a) + " * " + shape(b));
    }
    Matrix out(a.rows(), b.cols());
    kernels::parallel::matmul(a, b, out);
    return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) {
        throw ShapeError("hstack: row mismatch " + shape(left) + " | " + shape(right));
    }
    Matrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) {
            m(i, j) = left(i, j);
        }
        for (std::size_t j = 0; j < right.cols(); ++j) {
            m(i, left.cols() + j) = right(i, j);
        }
    }
    return m;
}

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) {
            throw ShapeError("hstack: row mismatch");
        }
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                m(i, offset + j) = b(i, j);
            }
        }
        offset += b.cols();
    }
    return m;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) {
        throw ShapeError("vstack: column mismatch " + shape(top) + " / " + shape(bottom));
    }
    std::vector<Rational> entries(top.entries());
    entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

Matrix direct_sum(std::span<const Matrix> blocks) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                m(r0 + i, c0 + j) = b(i, j);
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

std::string to_string(const Matrix& m) {
    std::vector<std::string> cells;
    cells.reserve(m.rows() * m.cols());
    std::size_t width = 1;
    for (const auto& x : m.entries()) {
        cells.push_back(x.get_str());
        width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& c = cells[i * m.cols() + j];
            os << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace weyrkit
