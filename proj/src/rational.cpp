#include "mult/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "mult/error.hpp"

namespace mult {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ModelError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    Integer num, den{1};
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw FormatError("malformed rational '" + std::string(text) + "'");
        return Rational(num);
    }
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den) ||
        text[slash + 1] == '-' || text[slash + 1] == '+')
        throw FormatError("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw ModelError("expected an integer, got " + to_string());
    return value_.get_num();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ModelError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result{1};
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    // Falling factorial over k! works for negative n as well.
    Integer num{1};
    for (std::int64_t i = 0; i < k; ++i) num *= Integer(static_cast<long>(n - i));
    Integer den = factorial(static_cast<unsigned>(k));
    return num / den;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool fits_int64(const Integer& z) { return z.fits_slong_p() != 0; }

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw ModelError("integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

}  // namespace mult
