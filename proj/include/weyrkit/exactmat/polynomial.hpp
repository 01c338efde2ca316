#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"

namespace weyrkit {

// Rational polynomial, coefficients in ascending degree. Trailing zeros are
// trimmed on construction, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const;
    // Matrix substitution p(A), Horner form.
    Matrix operator()(const Matrix& a) const;

    // Quotient by (x - root); the remainder is discarded.
    Polynomial deflate(const Rational& root) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

std::string to_string(const Polynomial& p);

/// Monic det(xI - A) by the Faddeev–LeVerrier recurrence.
Polynomial char_poly(const Matrix& a);

struct RationalRoots {
    // Ascending by root value.
    std::vector<std::pair<Rational, std::size_t>> roots;
    bool fully_split = false;
};

/// All rational roots with multiplicity, via the rational-root theorem on the
/// integer-cleared polynomial. Throws std::invalid_argument for the zero
/// polynomial.
RationalRoots rational_roots(const Polynomial& p);

}  // namespace weyrkit
