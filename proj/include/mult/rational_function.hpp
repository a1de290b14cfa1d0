#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mult/polynomial.hpp"

namespace mult {

/// p(t)/q(t) with q(0) != 0, stored with q(0) normalized to 1.  No polynomial
/// gcd is taken, so two functions compare equal only when their normalized
/// numerator and denominator are identical.
class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction();
    /// Throws NotExpandableError when q(0) = 0 (including q = 0).
    RationalFunction(Polynomial numerator, Polynomial denominator);
    explicit RationalFunction(Polynomial polynomial);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// "(p)/(q)" in the series-expression grammar; parse_series reads it back.
    std::string to_string() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Coefficients c_0..c_{n_max} of the power series of f at t = 0, computed
/// by the linear recurrence c_n = p_n - sum_{k>=1} q_k c_{n-k}.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::int64_t n_max);

/// Same expansion in integer arithmetic; throws ModelError if p or q has a
/// non-integral coefficient after normalization.
std::vector<Integer> integer_series_coefficients(const RationalFunction& f, std::int64_t n_max);

}  // namespace mult
