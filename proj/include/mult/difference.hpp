#pragma once

#include <cstdint>
#include <functional>

#include "mult/length_function.hpp"
#include "mult/polynomial.hpp"

namespace mult {

/// Any exact function Z -> Q the difference operators can be applied to.
using NumericFunction = std::function<Rational(std::int64_t)>;

NumericFunction as_numeric(const Polynomial& g);
NumericFunction as_numeric(const LengthFunction& lf);

enum class DeltaMode { recursive, closed };

/// Index-d difference operator: Delta^1 f(n) = f(n+d) - f(n), iterated s
/// times.  The closed mode sums (-1)^i C(s,i) f(n + (s-i)d).
Rational delta(const NumericFunction& f, int s, std::int64_t d, std::int64_t n, DeltaMode mode);

/// Negative operator: Delta^{-1} f(n) = f(n+1) - f(n+d+1), iterated s
/// times.  The closed mode sums (-1)^i C(s,i) f(n + d*i + s).
Rational delta_neg(const NumericFunction& f, int s, std::int64_t d, std::int64_t n, DeltaMode mode);

/// sum_{i=0}^{s} (-1)^i C(s,i) i^n, with 0^0 = 1.
Rational alternating_binomial_moment(int s, int n);

/// sum_{i=0}^{s} (-1)^i C(s,i) (m + d*i)^n, with 0^0 = 1.
Rational shifted_binomial_moment(int s, int n, std::int64_t m, std::int64_t d);

/// S with S(x) = g(0) + g(1) + ... + g(x-1) for every integer x >= 0.
/// Built from the Newton expansion g(i) = sum_k Delta^k g(0) C(i,k) using
/// sum_{i<x} C(i,k) = C(x,k+1).
Polynomial summation_polynomial(const Polynomial& g);

/// g(N) + g(N+1) + ... + g(n), in closed form.  Empty (zero) when n < N.
Rational faulhaber_sum(const Polynomial& g, std::int64_t N, std::int64_t n);

/// Unit-step forward difference applied `times` times, symbolically.
Polynomial unit_difference(const Polynomial& g, int times);

}  // namespace mult
