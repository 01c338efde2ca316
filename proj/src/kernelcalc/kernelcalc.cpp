#include "weyrkit/kernelcalc.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"

namespace weyrkit {

namespace {

std::int64_t part(const Partition& p, std::size_t i) { return static_cast<std::int64_t>(p.part(i)); }

// Inner sum of the ω_k formula for one (α, β) pair.
std::int64_t omega_term(const Partition& alpha, const Partition& beta, std::size_t k) {
    const std::size_t l_max = std::min(alpha.length(), beta.length());
    std::int64_t total = 0;
    for (std::size_t l = 0; l <= l_max; ++l) {
        total += part(alpha, 1 + l) * part(beta, k + l);
        for (std::size_t r = 2; r <= k; ++r) {
            total += part(alpha, r + l) *
                     (part(beta, 1 + k - r + l) - part(beta, 2 + k - r + l));
        }
    }
    return total;
}

}  // namespace

std::size_t d_ijk(const Partition& alpha, const Partition& beta, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("d_ijk: k must be positive");
    }
    const std::size_t l_max = std::min(alpha.length(), beta.length());
    std::int64_t total = 0;
    for (std::size_t r = 2; r <= k; ++r) {
        for (std::size_t l = 0; l <= l_max; ++l) {
            total += part(alpha, r + l) * (part(beta, 1 + l) - part(beta, 2 + k - r + l));
        }
    }
    for (std::size_t l = 0; l <= l_max; ++l) {
        std::int64_t tail = 0;
        for (std::size_t s = 1; s <= k; ++s) {
            tail += part(beta, s + l);
        }
        total += part(alpha, 1 + l) * tail;
    }
    if (total < 0) {
        throw std::logic_error("d_ijk evaluated to a negative dimension");
    }
    return static_cast<std::size_t>(total);
}

std::size_t kernel_dim(const EigenStructure& sa, const EigenStructure& sb, std::size_t k) {
    std::size_t total = 0;
    for (const auto& a : sa.blocks()) {
        for (const auto& b : sb.blocks()) {
            if (a.eigenvalue == b.eigenvalue) {
                total += d_ijk(a.characteristic, b.characteristic, k);
            }
        }
    }
    return total;
}

KernelDimReport kernel_dim_report(const EigenStructure& sa, const EigenStructure& sb,
                                  std::size_t k_max) {
    KernelDimReport report;
    report.k_max = k_max;
    report.totals.assign(k_max, 0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        for (std::size_t j = 0; j < sb.size(); ++j) {
            if (sa.blocks()[i].eigenvalue != sb.blocks()[j].eigenvalue) {
                continue;
            }
            auto& row = report.per_pair[{i, j}];
            for (std::size_t k = 1; k <= k_max; ++k) {
                row.push_back(d_ijk(sa.blocks()[i].characteristic, sb.blocks()[j].characteristic, k));
                report.totals[k - 1] += row.back();
            }
        }
    }
    return report;
}

std::vector<Rational> operator_eigenvalues(const EigenStructure& sa, const EigenStructure& sb) {
    std::set<Rational> values;
    for (const auto& a : sa.blocks()) {
        for (const auto& b : sb.blocks()) {
            values.insert(a.eigenvalue - b.eigenvalue);
        }
    }
    return {values.begin(), values.end()};
}

std::size_t operator_index(const EigenStructure& sa, const EigenStructure& sb,
                           const Rational& lambda) {
    std::size_t q = 0;
    for (const auto& a : sa.blocks()) {
        for (const auto& b : sb.blocks()) {
            if (a.eigenvalue - lambda == b.eigenvalue) {
                q = std::max(q, a.index() + b.index() - 1);
            }
        }
    }
    return q;
}

OperatorWeyr operator_weyr(const EigenStructure& sa, const EigenStructure& sb,
                           const Rational& lambda) {
    const std::size_t q = operator_index(sa, sb, lambda);
    if (q == 0) {
        throw NotAnEigenvalue(to_string(lambda) + " is not an eigenvalue of the operator");
    }
    std::vector<std::size_t> omega;
    for (std::size_t k = 1; k <= q; ++k) {
        std::int64_t w = 0;
        for (const auto& a : sa.blocks()) {
            for (const auto& b : sb.blocks()) {
                if (a.eigenvalue - lambda == b.eigenvalue) {
                    w += omega_term(a.characteristic, b.characteristic, k);
                }
            }
        }
        if (w <= 0) {
            throw std::logic_error("operator Weyr part " + std::to_string(k) + " is not positive");
        }
        omega.push_back(static_cast<std::size_t>(w));
    }

    // Cross-check against dim ker φ^k_{A-λI,B}.
    const EigenStructure shifted = sa.shifted(lambda);
    std::size_t previous = 0;
    for (std::size_t k = 1; k <= q + 1; ++k) {
        const std::size_t dim = kernel_dim(shifted, sb, k);
        const std::size_t expected = k <= q ? omega[k - 1] : 0;
        if (dim - previous != expected) {
            throw std::logic_error("operator Weyr part " + std::to_string(k) +
                                   " disagrees with kernel dimension differences");
        }
        previous = dim;
    }
    // Partition's constructor rejects an increasing sequence.
    return {lambda, Partition(std::move(omega))};
}

std::size_t centralizer_dim(const EigenStructure& s) {
    std::size_t total = 0;
    for (const auto& b : s.blocks()) {
        for (std::size_t part : b.characteristic.parts()) {
            total += part * part;
        }
    }
    return total;
}

Matrix binomial_matrix(std::size_t m, std::size_t n, std::size_t l) {
    Matrix out(l, l);
    for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = 1; j <= l; ++j) {
            const long lower = static_cast<long>(m + i) - static_cast<long>(j);
            out(i - 1, j - 1) = Rational(binomial(static_cast<long>(m + n), lower));
        }
    }
    return out;
}

Rational binomial_det_formula(std::size_t m, std::size_t n, std::size_t l) {
    Rational product = 1;
    for (std::size_t i = 1; i <= l; ++i) {
        Rational term(factorial(m + n + i - 1) * factorial(i - 1),
                      factorial(m + i - 1) * factorial(n + i - 1));
        term.canonicalize();
        product *= term;
    }
    return product;
}

Matrix coefficient_system(std::size_t power, std::size_t r, std::size_t l) {
    if (r == 0 || r > power + 1) {
        throw std::invalid_argument("coefficient system needs 1 <= r <= power + 1");
    }
    const long m = static_cast<long>(power) - static_cast<long>(r) + 1;
    const long n = static_cast<long>(r) - 1;
    Matrix sys(l + 1, l + 1);
    for (std::size_t i = 0; i <= l; ++i) {
        for (std::size_t j = 0; j <= l; ++j) {
            const long lower = m + static_cast<long>(i) - static_cast<long>(j);
            Integer c = binomial(m + n, lower);
            if (lower % 2 != 0) {
                c = -c;
            }
            sys(i, j) = Rational(c);
        }
    }
    return sys;
}

CoefficientSolution coefficient_solve(std::size_t power, std::size_t r, std::size_t l) {
    const Matrix sys = coefficient_system(power, r, l);
    const Matrix ones = Matrix::column_vector(std::vector<Rational>(l + 1, Rational(1)));
    const Matrix x = solve(sys, ones);
    if (sys * x != ones) {
        throw std::logic_error("coefficient system solution failed re-substitution");
    }
    CoefficientSolution out{power, r, l, {}};
    for (std::size_t j = 0; j <= l; ++j) {
        out.x.push_back(x(j, 0));
    }
    return out;
}

InvariantTable invariant_table(const EigenStructure& sa, const EigenStructure& sb) {
    InvariantTable table;
    for (const auto& lambda : operator_eigenvalues(sa, sb)) {
        table.emplace(lambda, operator_weyr(sa, sb, lambda).characteristic);
    }
    return table;
}

InvariantTable invariant_table(const Matrix& a, const Matrix& b,
                               const std::optional<EigenStructure>& declared_a,
                               const std::optional<EigenStructure>& declared_b) {
    const EigenStructure sa = declared_a ? *declared_a : eigen_structure(a);
    const EigenStructure sb = declared_b ? *declared_b : eigen_structure(b);
    return invariant_table(sa, sb);
}

bool operators_similar(const InvariantTable& t1, const InvariantTable& t2) { return t1 == t2; }

std::optional<SimilarityWitness> first_difference(const InvariantTable& t1,
                                                  const InvariantTable& t2) {
    std::set<Rational> keys;
    for (const auto& [lambda, w] : t1) {
        keys.insert(lambda);
    }
    for (const auto& [lambda, w] : t2) {
        keys.insert(lambda);
    }
    static const Partition none;
    for (const auto& lambda : keys) {
        const auto i1 = t1.find(lambda);
        const auto i2 = t2.find(lambda);
        const Partition& w1 = i1 == t1.end() ? none : i1->second;
        const Partition& w2 = i2 == t2.end() ? none : i2->second;
        std::size_t dim1 = 0;
        std::size_t dim2 = 0;
        const std::size_t k_max = std::max(w1.length(), w2.length());
        for (std::size_t k = 1; k <= k_max; ++k) {
            dim1 += w1.part(k);
            dim2 += w2.part(k);
            if (dim1 != dim2) {
                return SimilarityWitness{lambda, k, dim1, dim2};
            }
        }
    }
    return std::nullopt;
}

}  // namespace weyrkit
