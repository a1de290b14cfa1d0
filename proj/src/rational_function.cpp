#include "mult/rational_function.hpp"

#include <algorithm>

#include "mult/error.hpp"

namespace mult {

RationalFunction::RationalFunction() : den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw NotExpandableError("denominator is the zero polynomial");
    const Rational q0 = den_.coeff(0);
    if (q0.is_zero()) throw NotExpandableError("denominator has zero constant term");
    if (q0 != Rational(1)) {
        const Rational inv = Rational(1) / q0;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction::RationalFunction(Polynomial polynomial)
    : num_(std::move(polynomial)), den_(Polynomial::constant(1)) {}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_expression() + ")/(" + den_.to_expression() + ")";
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::int64_t n_max) {
    if (n_max < 0) return {};
    const auto& q = f.denominator().coeffs();
    const auto n = static_cast<std::size_t>(n_max) + 1;
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = f.numerator().coeff(i);
        const std::size_t kmax = std::min(i, q.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k)
            if (!q[k].is_zero()) v -= q[k] * c[i - k];
        c[i] = std::move(v);
    }
    return c;
}

std::vector<Integer> integer_series_coefficients(const RationalFunction& f, std::int64_t n_max) {
    if (n_max < 0) return {};
    auto to_ints = [](const Polynomial& p) {
        std::vector<Integer> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(c.to_integer());
        return out;
    };
    const std::vector<Integer> p = to_ints(f.numerator());
    const std::vector<Integer> q = to_ints(f.denominator());
    const auto n = static_cast<std::size_t>(n_max) + 1;
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer v = i < p.size() ? p[i] : Integer(0);
        const std::size_t kmax = std::min(i, q.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k)
            if (q[k] != 0) v -= q[k] * c[i - k];
        c[i] = std::move(v);
    }
    return c;
}

}  // namespace mult
