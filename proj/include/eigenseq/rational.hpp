#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eigenseq {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    // Accepts "p", "-p", "p/q" (q nonzero). Whitespace is not allowed.
    static Rational parse(std::string_view text);

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class &get() const { return value_; }
    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
    friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
    friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    mpq_class value_;
};

// base^exp with 0^0 = 1.
Rational pow(const Rational &base, std::uint64_t exp);

// Exact n!, C(n, k) (zero when k > n).
Rational factorial(std::uint64_t n);
Rational binomial(std::uint64_t n, std::uint64_t k);

} // namespace eigenseq
