#include "eigenseq/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eigenseq {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    // mpz does not accept a leading '+'.
    const auto strip = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class n(strip(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
        }
        d = mpz_class(std::string(den), 10);
        if (d == 0) {
            throw std::invalid_argument("malformed rational (zero denominator): \"" + std::string(text) + "\"");
        }
    }
    mpq_class q(n, d);
    return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

Rational pow(const Rational &base, std::uint64_t exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1U) {
            result *= b;
        }
        exp >>= 1U;
        if (exp > 0) {
            b *= b;
        }
    }
    return result;
}

Rational factorial(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return Rational(0);
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

} // namespace eigenseq
