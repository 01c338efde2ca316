#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weyrkit/exactmat/rational.hpp"

namespace weyrkit {

/// Dense row-major matrix of exact rationals.
///
/// Indices are 0-based throughout the C++ API. Every binary operation checks
/// conformance and throws ShapeError on mismatch.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    // e_ij: a single 1 at (i, j).
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static Matrix column_vector(std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    const std::vector<Rational>& entries() const { return entries_; }

    Matrix column(std::size_t j) const;
    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    void swap_rows(std::size_t a, std::size_t b);

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& scalar);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, const Rational& scalar);
Matrix operator*(const Rational& scalar, Matrix a);
// Dispatches to the parallel matmul kernel.
Matrix operator*(const Matrix& a, const Matrix& b);

// Side-by-side and stacked concatenation. Empty-column operands are allowed
// as long as row counts agree.
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix hstack(std::span<const Matrix> blocks, std::size_t rows);
Matrix vstack(const Matrix& top, const Matrix& bottom);

// Block-diagonal assembly.
Matrix direct_sum(std::span<const Matrix> blocks);

std::string to_string(const Matrix& m);

}  // namespace weyrkit
