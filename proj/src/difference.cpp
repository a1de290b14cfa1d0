#include "mult/difference.hpp"

#include "mult/error.hpp"

namespace mult {

NumericFunction as_numeric(const Polynomial& g) {
    return [g](std::int64_t n) { return g(Rational(n)); };
}

NumericFunction as_numeric(const LengthFunction& lf) {
    return [lf](std::int64_t n) { return Rational(lf.evaluate(n)); };
}

namespace {

Rational delta_recursive(const NumericFunction& f, int s, std::int64_t d, std::int64_t n) {
    if (s == 0) return f(n);
    return delta_recursive(f, s - 1, d, n + d) - delta_recursive(f, s - 1, d, n);
}

Rational delta_neg_recursive(const NumericFunction& f, int s, std::int64_t d, std::int64_t n) {
    if (s == 0) return f(n);
    return delta_neg_recursive(f, s - 1, d, n + 1) - delta_neg_recursive(f, s - 1, d, n + d + 1);
}

void require_order(int s) {
    if (s < 0) throw PreconditionError("difference order must be nonnegative, got " + std::to_string(s));
}

Rational power_with_zero(const Rational& base, int n) {
    return n == 0 ? Rational(1) : pow(base, static_cast<unsigned>(n));
}

}  // namespace

Rational delta(const NumericFunction& f, int s, std::int64_t d, std::int64_t n, DeltaMode mode) {
    require_order(s);
    if (mode == DeltaMode::recursive) return delta_recursive(f, s, d, n);
    Rational acc;
    for (int i = 0; i <= s; ++i) {
        Rational term = Rational(binomial(s, i)) * f(n + (s - i) * d);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rational delta_neg(const NumericFunction& f, int s, std::int64_t d, std::int64_t n, DeltaMode mode) {
    require_order(s);
    if (mode == DeltaMode::recursive) return delta_neg_recursive(f, s, d, n);
    Rational acc;
    for (int i = 0; i <= s; ++i) {
        Rational term = Rational(binomial(s, i)) * f(n + d * i + s);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rational alternating_binomial_moment(int s, int n) { return shifted_binomial_moment(s, n, 0, 1); }

Rational shifted_binomial_moment(int s, int n, std::int64_t m, std::int64_t d) {
    Rational acc;
    for (int i = 0; i <= s; ++i) {
        Rational term = Rational(binomial(s, i)) * power_with_zero(Rational(m + d * i), n);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Polynomial summation_polynomial(const Polynomial& g) {
    const int r = g.degree();
    Polynomial sum;
    if (r < 0) return sum;
    // Delta^k g(0) for k = 0..r from the values g(0..r).
    std::vector<Rational> col;
    for (int i = 0; i <= r; ++i) col.push_back(g(Rational(i)));
    // C(x, k+1) built incrementally: C(x,1) = x, C(x,k+1) = C(x,k)(x-k)/(k+1).
    Polynomial binom = Polynomial::t();
    for (int k = 0; k <= r; ++k) {
        sum += binom * col[0];
        for (std::size_t j = 0; j + 1 < col.size(); ++j) col[j] = col[j + 1] - col[j];
        col.pop_back();
        binom = binom * Polynomial({Rational(-(k + 1)), Rational(1)}) * Rational(Integer(1), Integer(k + 2));
    }
    return sum;
}

Rational faulhaber_sum(const Polynomial& g, std::int64_t N, std::int64_t n) {
    if (n < N) return {};
    const Polynomial S = summation_polynomial(g);
    return S(Rational(n + 1)) - S(Rational(N));
}

Polynomial unit_difference(const Polynomial& g, int times) {
    Polynomial out = g;
    for (int k = 0; k < times && !out.is_zero(); ++k) out = out.forward_difference();
    return out;
}

}  // namespace mult
