#include "weyrkit/exactmat/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "weyrkit/errors.hpp"

namespace weyrkit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
    if (!a.is_square()) {
        throw ShapeError("polynomial substitution needs a square matrix");
    }
    const std::size_t n = a.rows();
    Matrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) {
            acc(i, i) += *it;
        }
    }
    return acc;
}

Polynomial Polynomial::deflate(const Rational& root) const {
    if (coeffs_.size() <= 1) {
        return Polynomial();
    }
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
        carry = carry * root + coeffs_[i];
        q[i - 1] = carry;
    }
    return Polynomial(std::move(q));
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) {
            continue;
        }
        Rational mag = abs(c[i]);
        os << (sgn(c[i]) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || i == 0) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << "x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) {
        throw ShapeError("char_poly: matrix must be square");
    }
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) += c[n - k + 1];
        }
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<Integer> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    return divisors;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("rational_roots: zero polynomial");
    }
    RationalRoots out;
    Polynomial rest = p;
    auto take_root = [&](const Rational& r) {
        std::size_t mult = 0;
        while (rest.degree() >= 1 && sgn(rest(r)) == 0) {
            rest = rest.deflate(r);
            ++mult;
        }
        if (mult > 0) {
            out.roots.emplace_back(r, mult);
        }
    };

    take_root(0);

    if (rest.degree() >= 1) {
        Integer lcm_den = 1;
        for (const auto& c : rest.coefficients()) {
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        }
        const Integer constant = rest.coefficients().front().get_num() *
                                 (lcm_den / rest.coefficients().front().get_den());
        const Integer leading = rest.coefficients().back().get_num() *
                                (lcm_den / rest.coefficients().back().get_den());
        std::vector<Rational> candidates;
        for (const auto& num : positive_divisors(constant)) {
            for (const auto& den : positive_divisors(leading)) {
                Rational c(num, den);
                c.canonicalize();
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            take_root(c);
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t total = 0;
    for (const auto& [r, mult] : out.roots) {
        total += mult;
    }
    out.fully_split = static_cast<long>(total) == p.degree();
    return out;
}

}  // namespace weyrkit
