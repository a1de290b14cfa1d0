#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "mult/rational.hpp"

namespace mult {

struct LeadingTerm {
    int degree;  ///< -1 for the zero polynomial
    Rational coeff;
};

/// Dense univariate polynomial over Q.  Coefficients are stored constant term
/// first with no trailing zeros, so the zero polynomial is the empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// c * t^k
    static Polynomial monomial(const Rational& c, unsigned k);
    /// The indeterminate t.
    static Polynomial t() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;

    LeadingTerm leading_term() const;

    Rational operator()(const Rational& x) const;
    Rational evaluate(const Rational& x) const { return (*this)(x); }

    /// g(t + c), expanded.
    Polynomial shifted(const Rational& c) const;
    /// g(a*t + b), expanded.
    Polynomial compose_linear(const Rational& a, const Rational& b) const;
    /// g(t + 1) - g(t)
    Polynomial forward_difference() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned k) const;

    /// Human form in the variable `var`, e.g. "4t+1", "1/2t^3-t", "0".
    std::string to_string(char var = 't') const;
    /// Expression form that the series parser reads back, e.g. "(1/2)*t^3-t".
    std::string to_expression(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Exact polynomial arithmetic selected by `op`.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);
/// g(t + c)
Polynomial poly_shift(const Polynomial& g, const Rational& c);
LeadingTerm leading_term(const Polynomial& g);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace mult
