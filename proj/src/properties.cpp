#include "mult/properties.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "mult/difference.hpp"
#include "mult/error.hpp"
#include "mult/multiplicity.hpp"
#include "mult/rational_function.hpp"

namespace mult {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Polynomial binomial_basis(int k) {
    Polynomial p = Polynomial::constant(1);
    for (int j = 0; j < k; ++j) p = p * Polynomial({Rational(-j), Rational(1)}) * Rational(Integer(1), Integer(j + 1));
    return p;
}

// Runs `body` for each case; a false return or an Error counts as a failure.
PropertyResult run_cases(const std::string& name, int cases, const std::function<bool(int, std::string&)>& body) {
    PropertyResult r{name, cases, 0, ""};
    for (int k = 0; k < cases; ++k) {
        std::string note;
        bool ok = false;
        try {
            ok = body(k, note);
        } catch (const Error& e) {
            note = std::string("error: ") + e.what();
        }
        if (!ok) {
            if (r.failures == 0) r.first_failure = "case " + std::to_string(k) + ": " + note;
            ++r.failures;
        }
    }
    return r;
}

int random_even_d(Rng& rng, std::initializer_list<int> choices) {
    const auto idx = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(choices.size()) - 1));
    return *(choices.begin() + idx);
}

Integer power_of(std::int64_t base, int e) {
    Integer out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

}  // namespace

Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
    return Rational(uniform(rng, -max_abs_num, max_abs_num), uniform(rng, 1, max_den));
}

Polynomial random_polynomial(Rng& rng, int max_degree) {
    const auto deg = uniform(rng, 0, max_degree);
    std::vector<Rational> c;
    for (std::int64_t k = 0; k <= deg; ++k) c.push_back(random_rational(rng, 9, 6));
    return Polynomial(std::move(c));
}

LengthFunction random_length_function(Rng& rng, int d, int max_degree) {
    QuasiPolynomial qp = QuasiPolynomial::zero(d, uniform(rng, 0, 2 * d));
    for (auto& g : qp.polys) {
        const auto deg = uniform(rng, -1, max_degree);
        for (int k = 0; k <= deg; ++k) g += binomial_basis(k) * Rational(uniform(rng, 0, 4));
    }
    std::vector<Integer> core;
    const std::int64_t hi = qp.boundary + d * (qp.max_degree() + 2) + uniform(rng, 0, d);
    for (std::int64_t n = 0; n <= hi; ++n)
        core.push_back(n < qp.boundary ? Integer(uniform(rng, 0, 9)) : qp(n).numerator());
    Tail pos = qp.is_zero() ? Tail::vanishing() : Tail::quasipoly(std::move(qp));
    return LengthFunction(d, 0, std::move(core), std::move(pos), Tail::vanishing());
}

PropertyResult property_fit_round_trip(Rng& rng, int cases) {
    return run_cases("quasi-polynomial fit round trip", cases, [&](int, std::string& note) {
        const int d = random_even_d(rng, {2, 4, 6});
        QuasiPolynomial truth = QuasiPolynomial::zero(d, 0);
        for (auto& g : truth.polys) g = uniform(rng, 0, 5) == 0 ? Polynomial() : random_polynomial(rng, 5);
        const std::int64_t blocks = 2 * (truth.max_degree() + 2) + 6;
        std::map<std::int64_t, Rational> samples;
        for (std::int64_t n = 0; n < d * blocks; ++n) samples.emplace(n, truth(n));
        const QuasiPolynomial fitted = fit_quasipoly(samples, d);
        if (fitted.polys != truth.polys || fitted.boundary != 0) {
            note = "d=" + std::to_string(d) + " g_0=" + truth.polys[0].to_string() + " fitted " + fitted.polys[0].to_string();
            return false;
        }
        return true;
    });
}

PropertyResult property_series_remultiplication(Rng& rng, int cases) {
    return run_cases("series re-multiplication", cases, [&](int, std::string& note) {
        const Polynomial p = random_polynomial(rng, 6);
        Polynomial q = random_polynomial(rng, 6);
        if (q.coeff(0).is_zero()) q += Polynomial::constant(1);
        const RationalFunction f(p, q);
        const auto n_max = uniform(rng, 0, 200);
        const std::vector<Rational> c = series_coefficients(f, n_max);
        const Polynomial& num = f.numerator();
        const Polynomial& den = f.denominator();
        for (std::int64_t n = 0; n <= n_max; ++n) {
            Rational acc;
            for (std::int64_t k = 0; k <= std::min<std::int64_t>(n, den.degree()); ++k)
                acc += den.coeff(static_cast<std::size_t>(k)) * c[static_cast<std::size_t>(n - k)];
            if (acc != num.coeff(static_cast<std::size_t>(n))) {
                note = f.to_string() + " mismatch at t^" + std::to_string(n);
                return false;
            }
        }
        return true;
    });
}

PropertyResult property_shift_alternation(Rng& rng, int cases) {
    return run_cases("shift alternation", cases, [&](int, std::string& note) {
        const LengthFunction lf = random_length_function(rng, random_even_d(rng, {2, 4}), 3);
        const int s = std::max(complexity(lf, Side::positive), 1) + static_cast<int>(uniform(rng, 0, 1));
        for (Convention c : {Convention::delta, Convention::coefficient}) {
            const Integer e = multiplicity(lf, s, c);
            const Integer e1 = multiplicity(shift(lf, 1), s, c);
            const Integer ed = multiplicity(shift(lf, lf.d()), s, c);
            if (e1 != -e || ed != e) {
                note = std::string(to_string(c)) + " s=" + std::to_string(s) + ": e=" + e.get_str() +
                       " shift1=" + e1.get_str() + " shiftd=" + ed.get_str();
                return false;
            }
        }
        return true;
    });
}

PropertyResult property_vanishing_above_complexity(Rng& rng, int cases) {
    return run_cases("vanishing above complexity", cases, [&](int, std::string& note) {
        const LengthFunction lf = random_length_function(rng, random_even_d(rng, {2, 4, 6}), 4);
        const int cx = complexity(lf, Side::positive);
        for (int s = cx + 1; s <= cx + 2; ++s)
            for (Convention c : {Convention::delta, Convention::coefficient})
                if (multiplicity(lf, s, c) != 0) {
                    note = "cx=" + std::to_string(cx) + " s=" + std::to_string(s) + " " + to_string(c);
                    return false;
                }
        return true;
    });
}

PropertyResult property_convention_bridge(Rng& rng, int cases) {
    return run_cases("convention bridge", cases, [&](int, std::string& note) {
        const LengthFunction lf = random_length_function(rng, random_even_d(rng, {2, 4, 6}), 4);
        const int s = std::max(complexity(lf, Side::positive), 1);
        const MultiplicityReport r = multiplicity_pos(lf, s);
        if (r.e_coeff != power_of(lf.d(), s - 1) * r.e_delta) {
            note = "e_coeff=" + r.e_coeff.get_str() + " e_delta=" + r.e_delta.get_str();
            return false;
        }
        return true;
    });
}

PropertyResult property_split_additivity(Rng& rng, int cases) {
    return run_cases("split additivity", cases, [&](int, std::string& note) {
        const int d = random_even_d(rng, {2, 4});
        const LengthFunction a = random_length_function(rng, d, 3);
        const LengthFunction b = random_length_function(rng, d, 3);
        const LengthFunction sum = pointwise_sum(a, b);
        const int s = std::max({complexity(a, Side::positive), complexity(b, Side::positive), 1});
        for (Convention c : {Convention::delta, Convention::coefficient}) {
            const Integer ea = multiplicity(a, s, c);
            const Integer eb = multiplicity(b, s, c);
            const Integer es = multiplicity(sum, s, c);
            if (es != ea + eb) {
                note = std::string(to_string(c)) + ": " + es.get_str() + " != " + ea.get_str() + " + " + eb.get_str();
                return false;
            }
        }
        return true;
    });
}

PropertyResult property_difference_operators(Rng& rng, int cases) {
    return run_cases("difference operators", cases, [&](int, std::string& note) {
        const Polynomial g = random_polynomial(rng, 6);
        const NumericFunction f = as_numeric(g);
        const int s = static_cast<int>(uniform(rng, 0, 6));
        const int d = random_even_d(rng, {2, 4, 6});
        const std::int64_t n = uniform(rng, -20, 20);
        const Rational fwd = delta(f, s, d, n, DeltaMode::closed);
        const Rational bwd = delta_neg(f, s, d, n, DeltaMode::closed);
        const Rational mirrored = delta(f, s, d, n + s, DeltaMode::closed);
        const bool ok = fwd == delta(f, s, d, n, DeltaMode::recursive) &&
                        bwd == delta_neg(f, s, d, n, DeltaMode::recursive) &&
                        bwd == (s % 2 == 0 ? mirrored : -mirrored);
        if (!ok) note = "g=" + g.to_string() + " s=" + std::to_string(s) + " d=" + std::to_string(d) + " n=" + std::to_string(n);
        return ok;
    });
}

PropertyResult property_faulhaber(Rng& rng, int cases) {
    return run_cases("Faulhaber partial sums", cases, [&](int, std::string& note) {
        const Polynomial g = random_polynomial(rng, 5);
        const std::int64_t N = uniform(rng, 0, 10);
        const std::int64_t n = uniform(rng, N, 200);
        Rational brute;
        for (std::int64_t i = N; i <= n; ++i) brute += g(Rational(i));
        if (faulhaber_sum(g, N, n) != brute) {
            note = "g=" + g.to_string() + " N=" + std::to_string(N) + " n=" + std::to_string(n);
            return false;
        }
        return true;
    });
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, int cases) {
    using Suite = PropertyResult (*)(Rng&, int);
    const Suite suites[] = {property_fit_round_trip,         property_series_remultiplication,
                            property_shift_alternation,      property_vanishing_above_complexity,
                            property_convention_bridge,      property_split_additivity,
                            property_difference_operators,   property_faulhaber};
    std::vector<PropertyResult> out;
    std::uint64_t k = 0;
    for (Suite suite : suites) {
        Rng rng(seed * 1000003u + k++);
        out.push_back(suite(rng, cases));
    }
    return out;
}

}  // namespace mult
