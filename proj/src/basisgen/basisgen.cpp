#include "weyrkit/basisgen.hpp"

#include <algorithm>
#include <tuple>

#include "weyrkit/errors.hpp"
#include "weyrkit/kernelcalc.hpp"

namespace weyrkit {

namespace {

std::string index_pair(std::size_t i, std::size_t j) {
    if (i < 10 && j < 10) {
        return std::to_string(i) + std::to_string(j);
    }
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string coefficient_prefix(const Rational& x, bool first) {
    std::string sign = sgn(x) < 0 ? "-" : (first ? "" : "+");
    const Rational mag = abs(x);
    if (mag == 1) {
        return sign;
    }
    if (mag.get_den() == 1) {
        return sign + mag.get_str();
    }
    return sign + "(" + mag.get_str() + ")";
}

std::size_t offset_of(const Partition& p, std::size_t block) {
    std::size_t off = 0;
    for (std::size_t i = 1; i < block; ++i) {
        off += p.part(i);
    }
    return off;
}

std::vector<std::size_t> weight_offsets(const EigenStructure& s) {
    std::vector<std::size_t> offsets{0};
    for (const auto& b : s.blocks()) {
        offsets.push_back(offsets.back() + b.characteristic.weight());
    }
    return offsets;
}

// Writes the chain into `out` at the given base offsets, dropping terms whose
// inner position falls outside the cell (the ⊠ truncation).
void write_chain(const BasisElement& e, Matrix& out, std::size_t row_base, std::size_t col_base) {
    const Partition& g = e.type.rows;
    const Partition& d = e.type.cols;
    for (std::size_t t = 0; t < e.coefficients.size(); ++t) {
        const std::size_t bi = e.r + t;
        const std::size_t bj = e.s + t;
        if (bi > g.length() || bj > d.length() || e.u > g.part(bi) || e.v > d.part(bj)) {
            continue;
        }
        out(row_base + offset_of(g, bi) + e.u - 1, col_base + offset_of(d, bj) + e.v - 1) =
            e.coefficients[t];
    }
}

}  // namespace

std::size_t BlockType::row_offset(std::size_t i) const { return offset_of(rows, i); }
std::size_t BlockType::col_offset(std::size_t j) const { return offset_of(cols, j); }

Matrix block_embed(const BlockType& type, std::size_t i, std::size_t j, const Matrix& z) {
    if (i < 1 || i > type.rows.length() || j < 1 || j > type.cols.length()) {
        throw ShapeError("block_embed: cell (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside a " + std::to_string(type.rows.length()) + "x" +
                         std::to_string(type.cols.length()) + " grid");
    }
    Matrix out(type.rows.weight(), type.cols.weight());
    const std::size_t h = std::min(type.rows.part(i), z.rows());
    const std::size_t w = std::min(type.cols.part(j), z.cols());
    const std::size_t r0 = type.row_offset(i);
    const std::size_t c0 = type.col_offset(j);
    for (std::size_t a = 0; a < h; ++a) {
        for (std::size_t b = 0; b < w; ++b) {
            out(r0 + a, c0 + b) = z(a, b);
        }
    }
    return out;
}

Matrix BasisElement::materialize() const {
    Matrix out(type.rows.weight(), type.cols.weight());
    write_chain(*this, out, 0, 0);
    return out;
}

std::string BasisElement::symbol() const {
    std::string chain;
    for (std::size_t t = 0; t < coefficients.size(); ++t) {
        chain += coefficient_prefix(coefficients[t], t == 0) + "E" + index_pair(r + t, s + t);
    }
    if (coefficients.size() > 1) {
        chain = "(" + chain + ")";
    }
    return chain + "⊠e" + index_pair(u, v);
}

std::vector<BasisElement> kernel_basis_1(const Partition& gamma, const Partition& delta) {
    const std::size_t p = gamma.length();
    const std::size_t q = delta.length();
    const BlockType type{gamma, delta};
    std::vector<BasisElement> out;
    auto emit = [&](std::size_t s, std::size_t length, std::size_t u_max, std::size_t v_lo,
                    std::size_t v_hi) {
        for (std::size_t u = 1; u <= u_max; ++u) {
            for (std::size_t v = v_lo; v <= v_hi; ++v) {
                out.push_back({type, 1, s, std::vector<Rational>(length, Rational(1)), u, v});
            }
        }
    };
    // Chains E_{1,j} + ... + E_{q+1-j,q}, inner column anywhere in δ_q.
    for (std::size_t j = (q > p ? q - p : 0) + 1; j <= q; ++j) {
        emit(j, q - j + 1, gamma.part(q + 1 - j), 1, delta.part(q));
    }
    // Chains E_{1,j-i+1} + ... + E_{i,j}, inner column in (δ_{j+1}, δ_j].
    for (std::size_t j = 1; j < q; ++j) {
        for (std::size_t i = 1; i <= std::min(j, p); ++i) {
            emit(j - i + 1, i, gamma.part(i), delta.part(j + 1) + 1, delta.part(j));
        }
    }
    std::sort(out.begin(), out.end(), [](const BasisElement& a, const BasisElement& b) {
        return std::make_tuple(a.s, a.chain_length(), a.u, a.v) <
               std::make_tuple(b.s, b.chain_length(), b.u, b.v);
    });
    return out;
}

namespace {

// Calls visit(r, s, l) for every admissible chain start of the ker φ^grid
// construction: r = 1 with ascending s, then s = 1 with r = 2..grid.
template <typename Visit>
void for_each_chain_start(const Partition& gamma, const Partition& delta, std::size_t grid,
                          Visit&& visit) {
    const auto p = static_cast<long>(gamma.length());
    const auto q = static_cast<long>(delta.length());
    for (long s = 1; s <= q; ++s) {
        for (long l = 0; l <= std::min(p - 1, q - s); ++l) {
            visit(1, static_cast<std::size_t>(s), static_cast<std::size_t>(l));
        }
    }
    for (long r = 2; r <= static_cast<long>(grid); ++r) {
        for (long l = 0; l <= std::min(p - r, q - 1); ++l) {
            visit(static_cast<std::size_t>(r), 1, static_cast<std::size_t>(l));
        }
    }
}

struct InnerRange {
    std::size_t u_max;
    std::size_t v_lo;
    std::size_t v_hi;
    bool empty() const { return u_max == 0 || v_lo > v_hi; }
    std::size_t size() const { return empty() ? 0 : u_max * (v_hi - v_lo + 1); }
};

// Stratum `level` of the basis: elements killed by φ^(level+1) whose image
// under φ^level is a nonzero chain starting in block row 1.
InnerRange stratum_range(const Partition& gamma, const Partition& delta, std::size_t level,
                         std::size_t r, std::size_t s, std::size_t l) {
    const std::size_t top = 1 + level + s + l - r;
    return {gamma.part(r + l), delta.part(top + 1) + 1, delta.part(top)};
}

std::vector<Rational> stratum_coefficients(std::size_t level, std::size_t r, std::size_t l) {
    auto x = coefficient_solve(level, r, l).x;
    if (sgn(x.front()) < 0) {
        for (auto& c : x) {
            c = -c;
        }
    }
    return x;
}

void push_range(std::vector<BasisElement>& out, const BlockType& type, std::size_t r,
                std::size_t s, const std::vector<Rational>& coeffs, const InnerRange& range,
                std::size_t level) {
    for (std::size_t u = 1; u <= range.u_max; ++u) {
        for (std::size_t v = range.v_lo; v <= range.v_hi; ++v) {
            out.push_back({type, r, s, coeffs, u, v, level});
        }
    }
}

}  // namespace

std::vector<BasisElement> kernel_basis_k(const Partition& gamma, const Partition& delta,
                                         std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("kernel_basis_k: k must be positive");
    }
    const BlockType type{gamma, delta};
    std::vector<BasisElement> out;
    for (std::size_t level = 0; level < k; ++level) {
        for_each_chain_start(gamma, delta, level + 1,
                             [&](std::size_t r, std::size_t s, std::size_t l) {
                                 const auto range = stratum_range(gamma, delta, level, r, s, l);
                                 if (!range.empty()) {
                                     push_range(out, type, r, s, stratum_coefficients(level, r, l),
                                                range, level);
                                 }
                             });
    }
    return out;
}

std::size_t kernel_basis_k_size(const Partition& gamma, const Partition& delta, std::size_t k) {
    std::size_t count = 0;
    for (std::size_t level = 0; level < k; ++level) {
        for_each_chain_start(gamma, delta, level + 1,
                             [&](std::size_t r, std::size_t s, std::size_t l) {
                                 count += stratum_range(gamma, delta, level, r, s, l).size();
                             });
    }
    return count;
}

std::vector<BasisElement> stratification_elements(const Partition& gamma,
                                                  const Partition& delta, std::size_t k) {
    const BlockType type{gamma, delta};
    std::vector<BasisElement> out;
    for_each_chain_start(gamma, delta, k + 1, [&](std::size_t r, std::size_t s, std::size_t l) {
        const std::size_t lo = 2 + k + s + l - r;
        const InnerRange range{gamma.part(r + l), delta.part(lo) + 1, delta.part(s + l)};
        if (!range.empty()) {
            push_range(out, type, r, s, coefficient_solve(k, r, l).x, range, k);
        }
    });
    return out;
}

Matrix OperatorBasisElement::materialize(const EigenStructure& sa,
                                         const EigenStructure& sb) const {
    const auto rows = weight_offsets(sa);
    const auto cols = weight_offsets(sb);
    if (outer_i < 1 || outer_i > sa.size() || outer_j < 1 || outer_j > sb.size()) {
        throw ShapeError("operator basis element refers to a missing eigenvalue block");
    }
    Matrix out(sa.dim(), sb.dim());
    write_chain(inner, out, rows[outer_i - 1], cols[outer_j - 1]);
    return out;
}

std::string OperatorBasisElement::symbol() const {
    return "E" + index_pair(outer_i, outer_j) + "⊠[" + inner.symbol() + "]";
}

std::vector<OperatorBasisElement> operator_kernel_basis(const EigenStructure& sa,
                                                        const EigenStructure& sb, std::size_t k) {
    std::vector<OperatorBasisElement> out;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        for (std::size_t j = 0; j < sb.size(); ++j) {
            if (sa.blocks()[i].eigenvalue != sb.blocks()[j].eigenvalue) {
                continue;
            }
            for (auto& e : kernel_basis_k(sa.blocks()[i].characteristic,
                                          sb.blocks()[j].characteristic, k)) {
                out.push_back({i + 1, j + 1, std::move(e)});
            }
        }
    }
    return out;
}

std::vector<Matrix> materialize(const std::vector<OperatorBasisElement>& basis,
                                const EigenStructure& sa, const EigenStructure& sb) {
    std::vector<Matrix> out;
    out.reserve(basis.size());
    for (const auto& e : basis) {
        out.push_back(e.materialize(sa, sb));
    }
    return out;
}

std::vector<Matrix> pullback_basis(const WeyrDecomposition& decomp_a,
                                   const WeyrDecomposition& decomp_b,
                                   const std::vector<Matrix>& weyr_basis) {
    std::vector<Matrix> out;
    out.reserve(weyr_basis.size());
    for (const auto& x : weyr_basis) {
        if (x.rows() != decomp_a.p.cols() || x.cols() != decomp_b.p_inv.rows()) {
            throw ShapeError("pullback_basis: element has the wrong shape");
        }
        out.push_back(decomp_a.p * x * decomp_b.p_inv);
    }
    return out;
}

Verdict stratification_check(const Partition& gamma, const Partition& delta, std::size_t k,
                             const BasisElement& element) {
    if (element.r == 0 || element.r > k + 1) {
        return {false, "chain start row r must satisfy 1 <= r <= k + 1"};
    }
    const SylvesterOperator op(nilpotent_weyr(gamma), nilpotent_weyr(delta));
    const BlockType type{gamma, delta};
    const Matrix z = Matrix::unit(element.u, element.v, element.u - 1, element.v - 1);

    Matrix predicted(gamma.weight(), delta.weight());
    for (std::size_t j = 0; j < element.chain_length(); ++j) {
        const std::size_t col_block = k - element.r + 1 + element.s + j;
        if (col_block <= delta.length()) {
            predicted += block_embed(type, 1 + j, col_block, z);
        }
    }
    const Matrix image = apply_power(op, element.materialize(), k);
    if (image != predicted) {
        return {false, "phi^" + std::to_string(k) + " of " + element.symbol() +
                           " differs from the predicted chain"};
    }
    if (!apply(op, image).is_zero()) {
        return {false, "phi^" + std::to_string(k + 1) + " of " + element.symbol() +
                           " is nonzero"};
    }
    return {};
}

}  // namespace weyrkit
