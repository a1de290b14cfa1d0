#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mult/error.hpp"
#include "mult/multiplicity.hpp"
#include "mult/properties.hpp"
#include "mult/series_parser.hpp"

using namespace mult;

namespace {

Polynomial P(std::initializer_list<std::int64_t> c) {
    std::vector<Rational> v;
    for (auto x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

LengthFunction series(const char* expr, int d, std::int64_t probe = 80) {
    return from_series(parse_series(expr), d, probe);
}

// lambda(2m) = r, lambda(2m+1) = 0 for m >= 1, zero below.
LengthFunction xy(int r) {
    auto v = [r](std::int64_t n) -> Integer { return n >= 2 && n % 2 == 0 ? Integer(r) : Integer(0); };
    QuasiPolynomial q{2, {Polynomial({Rational(r)}), Polynomial()}, 2};
    return LengthFunction::assemble(2, 0, 1, v, Tail::quasipoly(q), Tail::vanishing());
}

// Oracles work from values alone: h by its definition, Delta by recursion.
Integer brute_h(const LengthFunction& lf, std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t i = 0; i < lf.d(); ++i) {
        const Integer v = lf(n + i);
        if ((n + i) % 2 == 0)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

Integer brute_delta_h(const LengthFunction& lf, int k, std::int64_t n) {
    if (k == 0) return brute_h(lf, n);
    return brute_delta_h(lf, k - 1, n + lf.d()) - brute_delta_h(lf, k - 1, n);
}

Integer brute_delta_neg_h(const LengthFunction& lf, int k, std::int64_t n) {
    if (k == 0) return brute_h(lf, n);
    return brute_delta_neg_h(lf, k - 1, n + 1) - brute_delta_neg_h(lf, k - 1, n + lf.d() + 1);
}

}  // namespace

TEST_CASE("herbrand difference") {
    CHECK(herbrand(xy(3), 4) == 3);
    const LengthFunction hyper = LengthFunction::assemble(
        2, 0, 1, [](std::int64_t n) -> Integer { return n >= 0 ? 1 : 0; },
        Tail::quasipoly(QuasiPolynomial{2, {P({1}), P({1})}, 0}), Tail::vanishing());
    CHECK(herbrand(hyper, 2) == 0);
    CHECK(herbrand(hyper, -1) == 1);
    const LengthFunction jst = series("t^2/(1-t^2)^2", 2);
    for (std::int64_t n = -5; n < 30; ++n) CHECK(herbrand(jst, n) == brute_h(jst, n));
    const auto H = herbrand_polys(jst.side_polys(Side::positive));
    REQUIRE(H.size() == 2);
    CHECK(H[0] == P({0, 1}));
    CHECK(H[1] == P({1, 1}));
}

TEST_CASE("positive multiplicity on the worked examples") {
    for (int r : {1, 2, 3, 5}) {
        CHECK(multiplicity(xy(r), 1, Convention::delta) == r);
        CHECK(multiplicity(xy(r), 1, Convention::coefficient) == r);
        CHECK(multiplicity(shift(xy(r), 1), 1, Convention::delta) == -r);
    }
    const LengthFunction jst2 = series("t^2/(1-t^2)^2", 2);
    const MultiplicityReport r = multiplicity_pos(jst2, 2);
    CHECK(r.cx == 2);
    CHECK(r.e_delta == 1);
    CHECK(r.e_coeff == 2);
    REQUIRE(r.leading.size() == 2);
    CHECK(r.leading[0] == 1);
    CHECK(r.leading[1] == 0);
    CHECK(multiplicity(series("t^3/(1-t^2)^3", 2), 3, Convention::delta) == -1);
    CHECK(multiplicity(series("t^3/(1-t^2)^3", 2), 3, Convention::coefficient) == -4);

    const LengthFunction s4 = series("(1-t^4)/((1-t)*(1-t^2)*(1-t^3))", 6, 120);
    CHECK(multiplicity(s4, 2, Convention::delta) == 0);
    CHECK(multiplicity(s4, 2, Convention::coefficient) == 0);

    for (int c : {2, 3, 5}) {
        const std::string expr = "1/(1-t)^" + std::to_string(c);
        const LengthFunction qci = series(expr.c_str(), 2, 120);
        CHECK(complexity(qci, Side::positive) == c);
        CHECK(multiplicity(qci, c, Convention::delta) == 0);
        CHECK(multiplicity(qci, c, Convention::coefficient) == 0);
    }

    CHECK(multiplicity(LengthFunction::finite(2, 0, {1}), 0, Convention::delta) == 1);
    CHECK(multiplicity_pos(LengthFunction::finite(2, 0, {1}), 0).euler);
    CHECK(multiplicity(LengthFunction::zero(2), 0, Convention::coefficient) == 0);
}

TEST_CASE("multiplicity preconditions") {
    const LengthFunction jst2 = series("t^2/(1-t^2)^2", 2);
    CHECK_THROWS_AS(multiplicity_pos(jst2, 1), PreconditionError);
    try {
        multiplicity_pos(jst2, 1);
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("s below complexity") != std::string::npos);
    }
    // cx = 0 with a non-vanishing negative side has no Euler sum.
    const LengthFunction left = LengthFunction::assemble(
        2, -4, 0, [](std::int64_t n) -> Integer { return n <= 0 ? 1 : 0; }, Tail::vanishing(),
        Tail::quasipoly(QuasiPolynomial{2, {P({1}), P({1})}, 0}));
    CHECK_THROWS_AS(multiplicity_pos(left, 0), PreconditionError);
    CHECK_THROWS_AS(euler_characteristic(left), PreconditionError);
    CHECK_NOTHROW(multiplicity_pos(left, 1));
}

TEST_CASE("stabilized difference matches the brute-force oracle") {
    Rng rng(99);
    for (int k = 0; k < 40; ++k) {
        const int d = 2 * (1 + k % 3);
        const LengthFunction lf = random_length_function(rng, d, 3);
        const int cx = complexity(lf, Side::positive);
        for (int s = std::max(cx, 1); s <= cx + 2; ++s) {
            const MultiplicityReport r = multiplicity_pos(lf, s);
            const std::int64_t n0 = lf.positive_onset() + 5 * d;
            for (std::int64_t n = n0; n < n0 + 2 * d; ++n) CHECK(brute_delta_h(lf, s - 1, n) == r.e_delta);
            CHECK(r.e_coeff == r.e_delta * Integer(pow(Rational(d), static_cast<unsigned>(s - 1)).numerator()));
            CHECK(multiplicity_pos(shift(lf, 1), s).e_delta == -r.e_delta);
            CHECK(multiplicity_pos(shift(lf, d), s).e_delta == r.e_delta);
            // The reported index is where stabilization starts.
            for (std::int64_t n = r.stabilization_index; n < n0; ++n) CHECK(brute_delta_h(lf, s - 1, n) == r.e_delta);
        }
    }
}

TEST_CASE("negative multiplicity") {
    const LengthFunction two = LengthFunction::assemble(
        2, -4, 4, [](std::int64_t n) -> Integer { return n % 2 == 0 ? 3 : 0; },
        Tail::quasipoly(QuasiPolynomial{2, {P({3}), P({})}, 0}), Tail::quasipoly(QuasiPolynomial{2, {P({3}), P({})}, 0}));
    CHECK(multiplicity_neg(two, 1).e_delta == 3);
    CHECK(multiplicity_pos(two, 1).e_delta == 3);

    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
        const int d = 2 * (1 + k % 2);
        const LengthFunction lf = reflect(random_length_function(rng, d, 2));
        const int cx = complexity(lf, Side::negative);
        for (int s = std::max(cx, 1); s <= cx + 1; ++s) {
            const MultiplicityReport r = multiplicity_neg(lf, s);
            const std::int64_t n0 = lf.negative_onset() - 10 * d - 5 * s;
            for (std::int64_t n = n0; n > n0 - 2 * d; --n) CHECK(brute_delta_neg_h(lf, s - 1, n) == r.e_delta);
            const Rational bridge = pow(Rational(-d), static_cast<unsigned>(s - 1)) * Rational(r.e_delta);
            CHECK(Rational(r.e_coeff) == bridge);
        }
    }

    const LengthFunction fin = LengthFunction::finite(2, -3, {2, 1, 0, 4, 1});
    CHECK(multiplicity_neg(fin, 0).e_delta == multiplicity_pos(fin, 0).e_delta);
    CHECK(euler_characteristic(fin) == -2 + 1 - 0 + 4 - 1);
}

TEST_CASE("theta and serre") {
    const LengthFunction tor = LengthFunction::assemble(
        2, 0, 3, [](std::int64_t n) -> Integer { return n < 0 ? 0 : (n % 2 == 0 ? 5 : 2); },
        Tail::quasipoly(QuasiPolynomial{2, {P({5}), P({2})}, 0}), Tail::vanishing());
    CHECK(theta_invariant(tor) == 3);
    CHECK(multiplicity_neg(reflect(tor), 1).e_delta == 3);
    CHECK(serre_intersection({3, 1}) == 2);
    CHECK(serre_intersection({1, 2, 1}) == 0);
    CHECK(serre_intersection({}) == 0);
    CHECK_THROWS_AS(theta_invariant(LengthFunction::zero(4)), PreconditionError);
    const LengthFunction growing = series("1/(1-t)^2", 2, 40);
    CHECK_THROWS_AS(theta_invariant(growing), PreconditionError);
}

TEST_CASE("limit estimator") {
    const LengthFunction jst2 = series("t^2/(1-t^2)^2", 2);
    CHECK(std::abs(limit_estimate(jst2, 2, 100000, LimitConstant::paper).to_double() - 2.0) < 1e-4);
    CHECK(std::abs(limit_estimate(jst2, 2, 100000, LimitConstant::corrected).to_double() - 1.0) < 1e-4);
    // The partial sum at n = 2M is M(M+1)/2.
    CHECK(alternating_partial_sum(jst2, 2000) == Rational(1000 * 1001 / 2));
    CHECK(std::abs(limit_estimate(xy(3), 1, 100000, LimitConstant::paper).to_double() - 3.0) < 3e-4);

    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        const LengthFunction lf = random_length_function(rng, 2 * (1 + k % 3), 3);
        Rational brute;
        for (std::int64_t j = 0; j <= 700; ++j) brute += (j % 2 == 0) ? Rational(lf(j)) : -Rational(lf(j));
        CHECK(alternating_partial_sum(lf, 700) == brute);
    }
    CHECK_THROWS_AS(limit_estimate(jst2, 0, 10, LimitConstant::paper), PreconditionError);
}

TEST_CASE("vanishing window") {
    CHECK(vanishing_window_check(LengthFunction::zero(2), 0, Parity::even).kind == WindowResult::Kind::confirmed);
    const LengthFunction tail10 = LengthFunction::finite(4, 0, {1, 1, 2, 2, 0, 0, 3, 3, 1, 1});
    CHECK(vanishing_window_check(tail10, 10, Parity::even).kind == WindowResult::Kind::confirmed);
    const WindowResult early = vanishing_window_check(tail10, 4, Parity::even);
    CHECK(early.kind == WindowResult::Kind::violated);
    CHECK(early.window_start == 10);
    CHECK(early.violation == 6);
    const LengthFunction s4 = series("(1-t^4)/((1-t)*(1-t^2)*(1-t^3))", 6, 120);
    CHECK(vanishing_window_check(s4, 0, Parity::odd).kind == WindowResult::Kind::window_not_found);
    CHECK_THROWS_AS(vanishing_window_check(xy(2), 0, Parity::odd), PreconditionError);
}
