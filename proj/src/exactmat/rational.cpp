#include "weyrkit/exactmat/rational.hpp"

#include <cctype>

#include "weyrkit/errors.hpp"

namespace weyrkit {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty() || den.front() == '-' || den.front() == '+') {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
    }
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace weyrkit
