#include "mult/multiplicity.hpp"

#include <algorithm>
#include <string>

#include "mult/difference.hpp"
#include "mult/error.hpp"

namespace mult {

namespace {

Integer require_integer(const Rational& r, const char* what) {
    if (!r.is_integer()) throw ModelError(std::string(what) + " is not an integer: " + r.to_string());
    return r.numerator();
}

NumericFunction herbrand_numeric(const LengthFunction& lf) {
    return [&lf](std::int64_t n) { return Rational(herbrand(lf, n)); };
}

Integer signed_power(std::int64_t base, int e) {
    Integer out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

// sum_i (-1)^i C(r, i) H_{c(i)}(t + shift(i)) for a given residue class.
// With index d the block variable moves by one per step of d in n, so
// Delta^r and Delta^{-r} both become integer shifts of the H_j.
Polynomial positive_difference_poly(const std::vector<Polynomial>& H, int j, int r) {
    Polynomial acc;
    for (int i = 0; i <= r; ++i) {
        Polynomial term = H[static_cast<std::size_t>(j)].shifted(Rational(r - i)) * Rational(binomial(r, i));
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Polynomial negative_difference_poly(const std::vector<Polynomial>& H, int j, int r, int d) {
    // Delta^{-r} h(dm+j) = sum_i (-1)^i C(r,i) h(dm + j + r + d*i).
    const std::int64_t k = j + r;
    const auto cls = static_cast<std::size_t>(floor_mod(k, d));
    const std::int64_t carry = floor_div(k, d);
    Polynomial acc;
    for (int i = 0; i <= r; ++i) {
        Polynomial term = H[cls].shifted(Rational(carry + i)) * Rational(binomial(r, i));
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Integer common_constant(const std::vector<Polynomial>& per_class, const char* what) {
    std::optional<Rational> value;
    for (std::size_t j = 0; j < per_class.size(); ++j) {
        const Polynomial& p = per_class[j];
        if (p.degree() > 0)
            throw ModelError(std::string(what) + " is not constant in residue class " + std::to_string(j) + ": " +
                             p.to_string());
        const Rational c = p.coeff(0);
        if (value && *value != c)
            throw ModelError(std::string(what) + " disagrees across residue classes: " + value->to_string() + " vs " +
                             c.to_string() + " in class " + std::to_string(j));
        value = c;
    }
    return require_integer(value.value_or(Rational{}), what);
}

std::vector<Rational> leading_coefficients(const QuasiPolynomial& qp, int s) {
    if (s <= 0) return {};
    return qp.coefficients_of_degree(s - 1);
}

// (s-1)! d^(s-1) sum_i (-1)^i a_i
Integer coefficient_formula(const std::vector<Rational>& a, int s, int d) {
    Rational alt;
    for (std::size_t i = 0; i < a.size(); ++i) alt += (i % 2 == 0) ? a[i] : -a[i];
    const Rational value = alt * Rational(factorial(static_cast<unsigned>(s - 1))) * Rational(signed_power(d, s - 1));
    return require_integer(value, "coefficient-convention multiplicity");
}

MultiplicityReport base_report(const LengthFunction& lf, int s, Side side) {
    if (s < 0) throw PreconditionError("s must be nonnegative, got " + std::to_string(s));
    MultiplicityReport r;
    r.side = side;
    r.s = s;
    r.cx = complexity(lf, Side::positive);
    r.cx_neg = complexity(lf, Side::negative);
    r.polys = lf.side_polys(Side::positive);
    if (!lf.neg_tail().is_vanishing()) r.polys_neg = lf.neg_tail().qp;
    const int own = side == Side::positive ? r.cx : *r.cx_neg;
    if (s < own)
        throw PreconditionError("s below complexity: s=" + std::to_string(s) + ", " +
                                (side == Side::positive ? "cx=" : "cx_neg=") + std::to_string(own));
    return r;
}

void fill_euler(MultiplicityReport& r, const LengthFunction& lf, Side side) {
    const Side other = side == Side::positive ? Side::negative : Side::positive;
    if (!lf.tail(other).is_eventually_zero())
        throw PreconditionError(side == Side::positive
                                    ? "e^0 needs lambda(n) = 0 for n << 0, but the negative tail does not vanish"
                                    : "e_0 needs lambda(n) = 0 for n >> 0, but the positive tail does not vanish");
    r.e_delta = euler_characteristic(lf);
    r.e_coeff = r.e_delta;
    r.euler = true;
    r.stabilization_index = side == Side::positive ? lf.positive_onset() : lf.negative_onset();
}

}  // namespace

Integer herbrand(const LengthFunction& lf, std::int64_t n) {
    Integer acc = 0;
    for (int i = 0; i < lf.d(); ++i) {
        if (floor_mod(n + i, 2) == 0)
            acc += lf.evaluate(n + i);
        else
            acc -= lf.evaluate(n + i);
    }
    return acc;
}

std::vector<Polynomial> herbrand_polys(const QuasiPolynomial& qp) {
    std::vector<Polynomial> H(static_cast<std::size_t>(qp.d));
    for (int j = 0; j < qp.d; ++j) {
        Polynomial acc;
        for (int k = 0; k < qp.d; ++k) {
            const Polynomial& g = qp.polys[static_cast<std::size_t>(k)];
            Polynomial term = k >= j ? g : g.shifted(1);
            if (k % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        H[static_cast<std::size_t>(j)] = std::move(acc);
    }
    return H;
}

MultiplicityReport multiplicity_pos(const LengthFunction& lf, int s) {
    MultiplicityReport r = base_report(lf, s, Side::positive);
    if (s == 0) {
        fill_euler(r, lf, Side::positive);
        return r;
    }
    const int d = lf.d();
    const std::vector<Polynomial> H = herbrand_polys(r.polys);
    std::vector<Polynomial> per_class;
    for (int j = 0; j < d; ++j) per_class.push_back(positive_difference_poly(H, j, s - 1));
    r.e_delta = common_constant(per_class, "stabilized Delta^(s-1) h");

    // The symbolic value holds once every lambda(n + k) involved is in the tail.
    const std::int64_t onset = lf.positive_onset();
    const NumericFunction h = herbrand_numeric(lf);
    const Rational target(r.e_delta);
    for (std::int64_t n = onset; n < onset + 3 * d; ++n)
        if (delta(h, s - 1, d, n, DeltaMode::closed) != target)
            throw ModelError("numeric Delta^(s-1) h disagrees with the symbolic value at n=" + std::to_string(n));
    std::int64_t idx = onset;
    const std::int64_t floor_n = lf.start() - static_cast<std::int64_t>(s + 1) * d;
    while (idx - 1 >= floor_n && delta(h, s - 1, d, idx - 1, DeltaMode::closed) == target) --idx;
    r.stabilization_index = idx;

    r.leading = leading_coefficients(r.polys, s);
    r.e_coeff = coefficient_formula(r.leading, s, d);
    if (r.e_coeff != signed_power(d, s - 1) * r.e_delta)
        throw ModelError("convention bridge e_coeff = d^(s-1) e_delta fails");
    return r;
}

MultiplicityReport multiplicity_neg(const LengthFunction& lf, int s) {
    MultiplicityReport r = base_report(lf, s, Side::negative);
    if (s == 0) {
        fill_euler(r, lf, Side::negative);
        return r;
    }
    const int d = lf.d();
    const QuasiPolynomial qp = lf.side_polys(Side::negative);
    const std::vector<Polynomial> H = herbrand_polys(qp);
    std::vector<Polynomial> per_class;
    for (int j = 0; j < d; ++j) per_class.push_back(negative_difference_poly(H, j, s - 1, d));
    r.e_delta = common_constant(per_class, "stabilized Delta^(-(s-1)) h");

    // Largest n whose Delta^{-(s-1)} h window stays inside the negative tail.
    const std::int64_t onset = lf.negative_onset() - (d - 1) - static_cast<std::int64_t>(s - 1) * (d + 1);
    const NumericFunction h = herbrand_numeric(lf);
    const Rational target(r.e_delta);
    for (std::int64_t n = onset; n > onset - 3 * d; --n)
        if (delta_neg(h, s - 1, d, n, DeltaMode::closed) != target)
            throw ModelError("numeric Delta^(-(s-1)) h disagrees with the symbolic value at n=" + std::to_string(n));
    std::int64_t idx = onset;
    const std::int64_t ceil_n = lf.end() + static_cast<std::int64_t>(s + 1) * (d + 1);
    while (idx + 1 <= ceil_n && delta_neg(h, s - 1, d, idx + 1, DeltaMode::closed) == target) ++idx;
    r.stabilization_index = idx;

    r.leading = leading_coefficients(qp, s);
    r.e_coeff = coefficient_formula(r.leading, s, d);
    Integer bridge = signed_power(d, s - 1) * r.e_delta;
    if ((s - 1) % 2 != 0) bridge = -bridge;
    if (r.e_coeff != bridge) throw ModelError("convention bridge e_coeff = (-d)^(s-1) e_delta fails");
    return r;
}

Integer multiplicity(const LengthFunction& lf, int s, Convention c, Side side) {
    const MultiplicityReport r = side == Side::positive ? multiplicity_pos(lf, s) : multiplicity_neg(lf, s);
    return r.value(c);
}

Integer euler_characteristic(const LengthFunction& lf) {
    if (!lf.has_finite_support())
        throw PreconditionError("Euler characteristic needs finite support (both tails eventually zero)");
    Integer acc = 0;
    for (std::size_t k = 0; k < lf.core().size(); ++k) {
        const std::int64_t n = lf.start() + static_cast<std::int64_t>(k);
        if (floor_mod(n, 2) == 0)
            acc += lf.core()[k];
        else
            acc -= lf.core()[k];
    }
    return acc;
}

Rational alternating_partial_sum(const LengthFunction& lf, std::int64_t n) {
    Rational acc;
    if (n < 0) return acc;
    auto add_direct = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t j = lo; j <= hi; ++j) {
            if (floor_mod(j, 2) == 0)
                acc += Rational(lf.evaluate(j));
            else
                acc -= Rational(lf.evaluate(j));
        }
    };
    add_direct(0, std::min(n, lf.end()));
    const std::int64_t lo = std::max<std::int64_t>(0, lf.end() + 1);
    if (n < lo || lf.pos_tail().is_vanishing()) return acc;
    const QuasiPolynomial& qp = lf.pos_tail().qp;
    const int d = qp.d;
    for (int i = 0; i < d; ++i) {
        const std::int64_t m_lo = floor_div(lo - i + d - 1, d);
        const std::int64_t m_hi = floor_div(n - i, d);
        const Rational part = faulhaber_sum(qp.polys[static_cast<std::size_t>(i)], m_lo, m_hi);
        if (i % 2 == 0)
            acc += part;
        else
            acc -= part;
    }
    return acc;
}

Rational limit_estimate(const LengthFunction& lf, int s, std::int64_t n, LimitConstant constant) {
    if (s < 1) throw PreconditionError("limit estimator needs s >= 1");
    if (n < 1) throw PreconditionError("limit estimator needs n >= 1");
    const int d = lf.d();
    const int d_power = constant == LimitConstant::paper ? 2 * s - 1 : s;
    const Rational c = Rational(factorial(static_cast<unsigned>(s))) * Rational(signed_power(d, d_power));
    return c * alternating_partial_sum(lf, n) / pow(Rational(n), static_cast<unsigned>(s));
}

Integer theta_invariant(const LengthFunction& tor) {
    if (tor.d() != 2) throw PreconditionError("theta needs d = 2, got " + std::to_string(tor.d()));
    const LengthFunction lf = reflect(tor);
    if (!lf.pos_tail().is_eventually_zero())
        throw PreconditionError("Tor lengths must vanish in negative homological degrees");
    Integer theta = 0;
    if (!lf.neg_tail().is_eventually_zero()) {
        const QuasiPolynomial& qp = lf.neg_tail().qp;
        if (qp.max_degree() > 0)
            throw PreconditionError("Tor lengths are not eventually constant on each parity; theta is undefined");
        theta = require_integer(qp.polys[0].coeff(0) - qp.polys[1].coeff(0), "theta");
    }
    const Integer e1 = multiplicity_neg(lf, 1).e_delta;
    if (e1 != theta)
        throw ModelError("theta " + theta.get_str() + " disagrees with e_1 = " + e1.get_str());
    return theta;
}

Integer serre_intersection(const std::vector<Integer>& tor) {
    Integer acc = 0;
    for (std::size_t n = 0; n < tor.size(); ++n) acc += (n % 2 == 0) ? tor[n] : Integer(-tor[n]);
    const Integer e0 = euler_characteristic(reflect(LengthFunction::finite(2, 0, tor)));
    if (e0 != acc) throw ModelError("alternating Tor sum disagrees with e^0 of the reindexed function");
    return acc;
}

WindowResult vanishing_window_check(const LengthFunction& lf, std::int64_t m0, Parity parity) {
    const int cx = complexity(lf, Side::positive);
    const Integer e = multiplicity_pos(lf, cx).e_delta;
    if (e != 0)
        throw PreconditionError("vanishing window check needs e^" + std::to_string(cx) + " = 0, got " + e.get_str());

    const int d = lf.d();
    const int run = d / 2;
    const int want = parity == Parity::even ? 0 : 1;
    const std::int64_t first = floor_mod(m0, 2) == want ? m0 : m0 + 1;

    // Past every real root of the tail polynomials the nonzero classes never
    // vanish again, so a zero run (if any) starts below this bound.
    const QuasiPolynomial qp = lf.side_polys(Side::positive);
    std::int64_t root_blocks = 0;
    for (const auto& g : qp.polys)
        if (!g.is_zero()) root_blocks = std::max(root_blocks, cauchy_root_bound(g));
    const std::int64_t tail_start = std::max(lf.end() + 1, lf.positive_onset());
    const std::int64_t scan_hi =
        std::max({first, tail_start, static_cast<std::int64_t>(d) * (root_blocks + 1)}) + 2 * d + 2 * run;

    WindowResult result;
    bool found = false;
    for (std::int64_t n = first; n <= scan_hi && !found; n += 2) {
        bool zero_run = true;
        for (int k = 0; k < run && zero_run; ++k) zero_run = lf.evaluate(n + 2 * k) == 0;
        if (zero_run) {
            found = true;
            result.window_start = n;
        }
    }
    if (!found) return result;

    // lambda = 0 on [m0, inf) iff it vanishes through the core and every
    // tail polynomial is zero; a nonzero one shows up within maxdeg+2 blocks.
    std::int64_t check_hi = std::max({m0, tail_start, result.window_start + 2 * run});
    if (!qp.is_zero()) check_hi += static_cast<std::int64_t>(d) * (qp.max_degree() + 2);
    for (std::int64_t n = m0; n <= check_hi; ++n)
        if (lf.evaluate(n) != 0) {
            result.kind = WindowResult::Kind::violated;
            result.violation = n;
            return result;
        }
    result.kind = WindowResult::Kind::confirmed;
    return result;
}

const char* to_string(Convention c) { return c == Convention::delta ? "delta" : "coefficient"; }

const char* to_string(Side s) { return s == Side::positive ? "positive" : "negative"; }

const char* to_string(WindowResult::Kind k) {
    switch (k) {
        case WindowResult::Kind::confirmed: return "confirmed";
        case WindowResult::Kind::window_not_found: return "window_not_found";
        case WindowResult::Kind::violated: return "violated";
    }
    return "";
}

}  // namespace mult
