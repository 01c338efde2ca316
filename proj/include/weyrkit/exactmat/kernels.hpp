#pragma once

#include <cstddef>
#include <span>

#include "weyrkit/exactmat/matrix.hpp"

// Inner loops of the exact core. Each kernel has a serial reference version
// and an OpenMP version; both must produce bit-identical results.
namespace weyrkit::kernels {

enum class Exec { serial, parallel };

// Below this many scalar multiply-adds the parallel kernels stay on one thread.
inline constexpr std::size_t kParallelWorkThreshold = 4096;

namespace serial {

// out = a * b. out must already be shaped a.rows() x b.cols() and zeroed.
void matmul(const Matrix& a, const Matrix& b, Matrix& out);

// Clears column `pivot_col` in every row except `pivot_row`, whose pivot entry
// is already 1. `pivot_support` lists the nonzero columns of the pivot row
// (all at or right of pivot_col).
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_support);

}  // namespace serial

namespace parallel {

void matmul(const Matrix& a, const Matrix& b, Matrix& out);

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_support);

}  // namespace parallel

inline void matmul(const Matrix& a, const Matrix& b, Matrix& out, Exec exec) {
    exec == Exec::serial ? serial::matmul(a, b, out) : parallel::matmul(a, b, out);
}

inline void eliminate(Matrix& m, std::size_t pivot_row, std::size_t pivot_col,
                      std::span<const std::size_t> pivot_support, Exec exec) {
    exec == Exec::serial ? serial::eliminate(m, pivot_row, pivot_col, pivot_support)
                         : parallel::eliminate(m, pivot_row, pivot_col, pivot_support);
}

}  // namespace weyrkit::kernels
