#include "weyrkit/weyrform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"
#include "weyrkit/exactmat/polynomial.hpp"

namespace weyrkit {

namespace {

Matrix shift_diagonal(Matrix a, const Rational& lambda) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        a(i, i) -= lambda;
    }
    return a;
}

// Weyr-adapted basis of the generalized eigenspace of `lambda`, stage-major.
Matrix weyr_basis_for(const Matrix& a, const EigenBlock& block) {
    const std::size_t m = a.rows();
    const std::size_t q = block.index();
    const Matrix n = shift_diagonal(a, block.eigenvalue);

    // kernels[k] = canonical basis of ker N^k, k = 0..q.
    std::vector<Matrix> kernels{Matrix(m, 0)};
    Matrix power = Matrix::identity(m);
    for (std::size_t k = 1; k <= q; ++k) {
        power = power * n;
        kernels.push_back(nullspace(power));
    }

    std::vector<Matrix> stages(q + 1);
    Matrix carried(m, 0);  // images of stage k+1 under N
    for (std::size_t k = q; k >= 1; --k) {
        const std::size_t want = block.characteristic.part(k);
        Matrix chosen = carried;
        Matrix span = hstack(kernels[k - 1], chosen);
        std::size_t span_rank = rank(span);
        const Matrix& candidates = kernels[k];
        for (std::size_t c = 0; c < candidates.cols() && chosen.cols() < want; ++c) {
            Matrix trial = hstack(span, candidates.column(c));
            const std::size_t trial_rank = rank(trial);
            if (trial_rank > span_rank) {
                span = std::move(trial);
                span_rank = trial_rank;
                chosen = hstack(chosen, candidates.column(c));
            }
        }
        if (chosen.cols() != want) {
            throw std::logic_error("weyr_transform: stage " + std::to_string(k) +
                                   " could not be completed");
        }
        carried = n * chosen;
        stages[k] = std::move(chosen);
    }
    return hstack(std::span<const Matrix>(stages.data() + 1, q), m);
}

}  // namespace

EigenStructure::EigenStructure(std::vector<EigenBlock> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(),
              [](const EigenBlock& x, const EigenBlock& y) { return x.eigenvalue < y.eigenvalue; });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].characteristic.empty()) {
            throw std::invalid_argument("eigenvalue " + to_string(blocks_[i].eigenvalue) +
                                        " has an empty characteristic");
        }
        if (i > 0 && blocks_[i].eigenvalue == blocks_[i - 1].eigenvalue) {
            throw std::invalid_argument("eigenvalue " + to_string(blocks_[i].eigenvalue) +
                                        " listed twice");
        }
        dim_ += blocks_[i].characteristic.weight();
    }
}

const EigenBlock* EigenStructure::find(const Rational& eigenvalue) const {
    for (const auto& b : blocks_) {
        if (b.eigenvalue == eigenvalue) {
            return &b;
        }
    }
    return nullptr;
}

EigenStructure EigenStructure::shifted(const Rational& shift) const {
    std::vector<EigenBlock> moved = blocks_;
    for (auto& b : moved) {
        b.eigenvalue -= shift;
    }
    return EigenStructure(std::move(moved));
}

Partition weyr_characteristic(const Matrix& a, const Rational& lambda) {
    if (!a.is_square()) {
        throw ShapeError("weyr_characteristic: matrix must be square");
    }
    const auto chain = nullity_chain(shift_diagonal(a, lambda));
    if (chain.front() == 0) {
        throw NotAnEigenvalue(to_string(lambda) + " is not an eigenvalue");
    }
    std::vector<std::size_t> parts;
    std::size_t previous = 0;
    for (std::size_t value : chain) {
        parts.push_back(value - previous);
        previous = value;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw std::logic_error("nullity differences increased; arithmetic is broken");
        }
    }
    return Partition(std::move(parts));
}

EigenStructure eigen_structure(const Matrix& a) {
    if (!a.is_square()) {
        throw ShapeError("eigen_structure: matrix must be square");
    }
    if (a.rows() == 0) {
        return EigenStructure();
    }
    const Polynomial chi = char_poly(a);
    const RationalRoots roots = rational_roots(chi);
    if (!roots.fully_split) {
        throw IrrationalSpectrum("characteristic polynomial " + to_string(chi) +
                                 " does not split over the rationals; supply a declared "
                                 "eigen-structure with --declared");
    }
    std::vector<EigenBlock> blocks;
    for (const auto& [lambda, multiplicity] : roots.roots) {
        Partition w = weyr_characteristic(a, lambda);
        if (w.weight() != multiplicity) {
            throw std::logic_error("Weyr weight disagrees with algebraic multiplicity at " +
                                   to_string(lambda));
        }
        blocks.push_back({lambda, std::move(w)});
    }
    return EigenStructure(std::move(blocks));
}

Matrix nilpotent_weyr(const Partition& gamma) {
    const std::size_t n = gamma.weight();
    Matrix m(n, n);
    std::size_t row0 = 0;
    for (std::size_t i = 1; i < gamma.length(); ++i) {
        const std::size_t col0 = row0 + gamma.part(i);
        for (std::size_t t = 0; t < gamma.part(i + 1); ++t) {
            m(row0 + t, col0 + t) = 1;
        }
        row0 = col0;
    }
    return m;
}

Matrix weyr_matrix(const EigenStructure& s) {
    std::vector<Matrix> blocks;
    for (const auto& b : s.blocks()) {
        Matrix w = nilpotent_weyr(b.characteristic);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            w(i, i) = b.eigenvalue;
        }
        blocks.push_back(std::move(w));
    }
    return direct_sum(blocks);
}

WeyrDecomposition weyr_transform(const Matrix& a) {
    return weyr_transform(a, eigen_structure(a));
}

WeyrDecomposition weyr_transform(const Matrix& a, const EigenStructure& s) {
    if (!a.is_square() || a.rows() != s.dim()) {
        throw ShapeError("weyr_transform: structure dimension does not match the matrix");
    }
    std::vector<Matrix> columns;
    for (const auto& block : s.blocks()) {
        columns.push_back(weyr_basis_for(a, block));
    }
    WeyrDecomposition d;
    d.structure = s;
    d.weyr = weyr_matrix(s);
    d.p = hstack(columns, a.rows());
    d.p_inv = inverse(d.p);
    if (d.p_inv * a * d.p != d.weyr) {
        throw std::logic_error("weyr_transform: P^-1 A P does not equal the Weyr matrix");
    }
    return d;
}

std::optional<std::string> check_declared_structure(const Matrix& a, const EigenStructure& s) {
    if (!a.is_square()) {
        return "matrix is not square";
    }
    if (s.dim() != a.rows()) {
        return "declared weights sum to " + std::to_string(s.dim()) + " but the matrix is " +
               std::to_string(a.rows()) + "x" + std::to_string(a.rows());
    }
    for (const auto& b : s.blocks()) {
        Partition actual;
        try {
            actual = weyr_characteristic(a, b.eigenvalue);
        } catch (const NotAnEigenvalue&) {
            return "declared eigenvalue " + to_string(b.eigenvalue) + " is not an eigenvalue";
        }
        if (actual != b.characteristic) {
            return "declared characteristic " + to_string(b.characteristic) + " at " +
                   to_string(b.eigenvalue) + " but the matrix has " + to_string(actual);
        }
    }
    return std::nullopt;
}

}  // namespace weyrkit
