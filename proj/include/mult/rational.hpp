#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mult {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator.  Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT: implicit by design of arithmetic code
    Rational(const Integer& n);  // NOLINT
    Rational(const Integer& num, const Integer& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p" or "p/q".  Throws FormatError on anything else.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; throws ModelError when not integral.
    Integer to_integer() const;
    double to_double() const { return value_.get_d(); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) for 0 <= k; zero when k > n >= 0.
Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(unsigned n);

/// Mathematical (floor) division and the matching non-negative remainder.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// Integer formatting helper shared by the JSON and text renderers.
std::string to_string(const Integer& z);
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace mult
