#include "weyrkit/exactmat/kernels.hpp"

#include <omp.h>

#include <cstdint>

namespace weyrkit::kernels {

namespace {

// Row i of out = row i of a times b, skipping structural zeros.
void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i, Rational& tmp) {
    const std::size_t inner = a.cols();
    const std::size_t n = b.cols();
    for (std::size_t k = 0; k < inner; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& bkj = b(k, j);
            if (sgn(bkj) == 0) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
            out(i, j) += tmp;
        }
    }
}

void eliminate_row(Matrix& m, std::size_t i, std::size_t pivot_row, std::size_t pivot_col,
                   std::span<const std::size_t> support, Rational& factor, Rational& tmp) {
    if (sgn(m(i, pivot_col)) == 0) {
        return;
    }
    factor = m(i, pivot_col);
    for (std::size_t j : support) {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m(pivot_row, j).get_mpq_t());
        m(i, j) -= tmp;
    }
}

}  // namespace

namespace serial {

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
    Rational tmp;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        matmul_row(a, b, out, i, tmp);
    }
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_support) {
    Rational factor;
    Rational tmp;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i != pivot_row) {
            eliminate_row(m, i, pivot_row, pivot_col, pivot_support, factor, tmp);
        }
    }
}

}  // namespace serial

namespace parallel {

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.rows() * a.cols() * b.cols() < kParallelWorkThreshold) {
        serial::matmul(a, b, out);
        return;
    }
    const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel
    {
        Rational tmp;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < rows; ++i) {
            matmul_row(a, b, out, static_cast<std::size_t>(i), tmp);
        }
    }
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_support) {
    if (m.rows() * pivot_support.size() < kParallelWorkThreshold) {
        serial::eliminate(m, pivot_row, pivot_col, pivot_support);
        return;
    }
    const auto rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel
    {
        Rational factor;
        Rational tmp;
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < rows; ++i) {
            if (static_cast<std::size_t>(i) != pivot_row) {
                eliminate_row(m, static_cast<std::size_t>(i), pivot_row, pivot_col,
                              pivot_support, factor, tmp);
            }
        }
    }
}

}  // namespace parallel

}  // namespace weyrkit::kernels
