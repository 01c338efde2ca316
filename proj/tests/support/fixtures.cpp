#include "fixtures.hpp"

#include <algorithm>

#include "weyrkit/exactmat/linalg.hpp"

namespace weyrkit::testing {

Matrix example1_a() {
    return {{4, 2, 0, 2, 2},
            {1, 3, 1, 0, 1},
            {-2, -2, 1, -1, -2},
            {-1, -2, -1, 1, 0},
            {-1, -1, 0, -1, 1}};
}

Matrix example1_b() {
    return {{5, 4, 2, 3, 1},
            {-1, 0, -1, -1, -1},
            {-2, -4, 0, -2, -2},
            {-1, 0, 0, 1, 1},
            {2, 4, 2, 2, 4}};
}

Matrix e5(std::size_t i, std::size_t j) { return Matrix::unit(5, 5, i - 1, j - 1); }

std::vector<Matrix> example1_basis_k1() {
    return {e5(1, 4), e5(1, 5), e5(2, 4), e5(2, 5), e5(1, 3),
            e5(2, 3), e5(1, 1) + e5(3, 4), e5(1, 2) + e5(3, 5), e5(2, 1) + e5(4, 4),
            e5(2, 2) + e5(4, 5)};
}

std::vector<Matrix> example1_basis_k2() {
    return {e5(1, 4),
            e5(1, 5),
            e5(2, 4),
            e5(2, 5),
            e5(1, 1),
            e5(1, 2),
            e5(1, 3),
            e5(2, 1),
            e5(2, 2),
            e5(2, 3),
            e5(1, 1) + e5(3, 4),
            e5(1, 2) + e5(3, 5),
            e5(2, 1) + e5(4, 4),
            e5(2, 2) + e5(4, 5),
            e5(3, 3),
            e5(4, 3),
            e5(3, 1) + Rational(2) * e5(5, 4),
            e5(3, 2) + Rational(2) * e5(5, 5)};
}

namespace {

bool matrix_less(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::make_pair(a.rows(), a.cols()) < std::make_pair(b.rows(), b.cols());
    }
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

}  // namespace

bool same_matrix_set(std::vector<Matrix> a, std::vector<Matrix> b) {
    std::sort(a.begin(), a.end(), matrix_less);
    std::sort(b.begin(), b.end(), matrix_less);
    return a == b;
}

Partition random_partition(Rng& rng, std::size_t weight) {
    const auto all = partitions_of(weight);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

Partition random_partition_up_to(Rng& rng, std::size_t max_weight) {
    std::uniform_int_distribution<std::size_t> w(1, max_weight);
    return random_partition(rng, w(rng));
}

Matrix random_unimodular(Rng& rng, std::size_t n) {
    Matrix p = Matrix::identity(n);
    if (n < 2) {
        return p;
    }
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        const std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        if (i == j) {
            j = (j + 1) % n;
        }
        const Rational c = mult(rng);
        // row_i += c * row_j
        for (std::size_t col = 0; col < n; ++col) {
            p(i, col) += c * p(j, col);
        }
    }
    return p;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

EigenStructure random_structure(Rng& rng, std::size_t max_dim, std::size_t eigenvalues) {
    std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(0), Rational(1),
                               Rational(2),  Rational(1, 2), Rational(-3, 2)};
    std::shuffle(pool.begin(), pool.end(), rng);
    eigenvalues = std::clamp<std::size_t>(eigenvalues, 1, std::min(max_dim, pool.size()));
    std::size_t budget = max_dim;
    std::vector<EigenBlock> blocks;
    for (std::size_t i = 0; i < eigenvalues; ++i) {
        const std::size_t reserve = eigenvalues - i - 1;
        std::uniform_int_distribution<std::size_t> w(1, budget - reserve);
        const std::size_t weight = w(rng);
        budget -= weight;
        blocks.push_back({pool[i], random_partition(rng, weight)});
    }
    return EigenStructure(std::move(blocks));
}

Matrix conjugate(const Matrix& w, const Matrix& p) { return p * w * inverse(p); }

Matrix random_conjugate(Rng& rng, const EigenStructure& s) {
    return conjugate(weyr_matrix(s), random_unimodular(rng, s.dim()));
}

std::vector<Partition> partitions_up_to(std::size_t max_weight) {
    std::vector<Partition> out;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        for (auto& p : partitions_of(w)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace weyrkit::testing
