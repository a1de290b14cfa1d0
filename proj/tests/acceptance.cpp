// End-to-end acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mult/difference.hpp"
#include "mult/error.hpp"
#include "mult/fixtures.hpp"
#include "mult/koszul.hpp"
#include "mult/properties.hpp"
#include "mult/series_parser.hpp"

using namespace mult;

namespace {

constexpr double kLimitFinalTolerance = 1e-3;
constexpr double kLimitRuntimeSeconds = 1.0;
constexpr std::int64_t kLimitPoints[] = {1000, 10000, 100000};
constexpr int kRandomPolynomials = 50;
constexpr int kSplitPairs = 100;
constexpr int kPropertyCases = 200;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail << what;
        }
    }
};

LengthFunction fixture(const std::string& name) {
    return fixture_function(load_fixture(default_fixture_dir() + "/" + name + ".json"));
}

LengthFunction series(const std::string& expr, int d, std::int64_t probe) {
    return from_series(parse_series(expr), d, probe);
}

Integer pow_int(std::int64_t base, unsigned e) {
    Integer r = 1;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

std::string str(const Integer& z) { return z.get_str(); }

LengthFunction jst(int c) {
    return series("t^" + std::to_string(c) + "/(1-t^2)^" + std::to_string(c), 2, 80);
}

LengthFunction qci(int c) { return series("1/(1-t)^" + std::to_string(c), 2, 120); }

LengthFunction s4() { return series("(1-t^4)/((1-t)*(1-t^2)*(1-t^3))", 6, 120); }

// Hypersurface, xy^r, JST, S4 and quantum complete intersection examples.
std::vector<std::pair<std::string, LengthFunction>> worked_examples() {
    std::vector<std::pair<std::string, LengthFunction>> out;
    out.emplace_back("hypersurface", fixture("hypersurface"));
    for (int r : {1, 2, 5}) out.emplace_back("xy_r" + std::to_string(r), fixture("xy_r" + std::to_string(r)));
    for (int c : {2, 3, 4}) out.emplace_back("jst_c" + std::to_string(c), jst(c));
    out.emplace_back("s4", s4());
    for (int c : {2, 3, 5}) out.emplace_back("qci_c" + std::to_string(c), qci(c));
    return out;
}

void criterion1(Outcome& o) {
    const LengthFunction lf = fixture("hypersurface");
    o.expect(complexity(lf, Side::positive) == 1, "cx != 1");
    const MultiplicityReport r = multiplicity_pos(lf, 1);
    o.expect(r.e_delta == 0 && r.e_coeff == 0, "e1 = " + str(r.e_delta) + "/" + str(r.e_coeff));
    if (o.pass) o.detail << "cx=1, e1=0 (delta and coefficient)";
}

void criterion2(Outcome& o) {
    for (int r : {1, 2, 5}) {
        const LengthFunction lf = fixture("xy_r" + std::to_string(r));
        const MultiplicityReport rep = multiplicity_pos(lf, 1);
        o.expect(rep.e_delta == r && rep.e_coeff == r, "r=" + std::to_string(r) + ": e1=" + str(rep.e_delta));
        const MultiplicityReport sh = multiplicity_pos(shift(lf, 1), 1);
        o.expect(sh.e_delta == -r && sh.e_coeff == -r, "r=" + std::to_string(r) + ": shifted e1=" + str(sh.e_delta));
    }
    if (o.pass) o.detail << "e1 = r and -r after a shift, r in {1,2,5}";
}

void criterion3(Outcome& o) {
    const int want_delta[] = {1, -1, 1};
    std::ostringstream values;
    for (int c : {2, 3, 4}) {
        const LengthFunction lf = jst(c);
        o.expect(complexity(lf, Side::positive) == c, "c=" + std::to_string(c) + ": cx mismatch");
        const MultiplicityReport r = multiplicity_pos(lf, c);
        const Integer coeff = (c % 2 == 0 ? 1 : -1) * pow_int(2, static_cast<unsigned>(c - 1));
        o.expect(r.e_coeff == coeff, "c=" + std::to_string(c) + ": coefficient " + str(r.e_coeff));
        o.expect(r.e_delta == want_delta[c - 2], "c=" + std::to_string(c) + ": delta " + str(r.e_delta));
        values << " c=" << c << ":" << str(r.e_coeff) << "/" << str(r.e_delta);
    }
    if (o.pass) o.detail << "coefficient/delta" << values.str();
}

void criterion4(Outcome& o) {
    const LengthFunction lf = s4();
    const std::int64_t table[6][2] = {{1, 4}, {1, 4}, {2, 4}, {3, 4}, {3, 4}, {4, 4}};
    const QuasiPolynomial qp = lf.side_polys(Side::positive);
    for (int i = 0; i < 6; ++i)
        o.expect(qp.polys[static_cast<std::size_t>(i)] == Polynomial({table[i][0], table[i][1]}),
                 "g_" + std::to_string(i) + " = " + qp.polys[static_cast<std::size_t>(i)].to_string());
    o.expect(complexity(lf, Side::positive) == 2, "cx != 2");
    const MultiplicityReport r = multiplicity_pos(lf, 2);
    o.expect(r.e_delta == 0 && r.e_coeff == 0, "e2 = " + str(r.e_delta) + "/" + str(r.e_coeff));
    if (o.pass) o.detail << "table matches, cx=2, e2=0/0";
}

void criterion5(Outcome& o) {
    for (int c : {2, 3, 5}) {
        const LengthFunction lf = qci(c);
        o.expect(complexity(lf, Side::positive) == c, "c=" + std::to_string(c) + ": cx mismatch");
        const MultiplicityReport r = multiplicity_pos(lf, c);
        const Rational lead(pow_int(2, static_cast<unsigned>(c - 1)), factorial(static_cast<unsigned>(c - 1)));
        o.expect(r.leading.size() == 2 && r.leading[0] == lead && r.leading[1] == lead,
                 "c=" + std::to_string(c) + ": leading coefficients");
        o.expect(r.e_delta == 0 && r.e_coeff == 0, "c=" + std::to_string(c) + ": e^c != 0");
    }
    if (o.pass) o.detail << "leading 2^(c-1)/(c-1)!, e^c=0, c in {2,3,5}";
}

void criterion6(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_final = 0;
    auto run = [&](const std::string& name, const LengthFunction& lf, int s) {
        const MultiplicityReport r = multiplicity_pos(lf, s);
        const std::pair<LimitConstant, Integer> pairs[] = {{LimitConstant::paper, r.e_coeff},
                                                          {LimitConstant::corrected, r.e_delta}};
        for (const auto& [constant, target] : pairs) {
            double previous = INFINITY;
            for (std::int64_t n : kLimitPoints) {
                const double err = std::abs(limit_estimate(lf, s, n, constant).to_double() - target.get_d());
                o.expect(err <= previous, name + ": error grows at n=" + std::to_string(n));
                previous = err;
            }
            o.expect(previous < kLimitFinalTolerance, name + ": final error " + std::to_string(previous));
            worst_final = std::max(worst_final, previous);
        }
    };
    for (int r : {1, 2, 5}) run("xy_r" + std::to_string(r), fixture("xy_r" + std::to_string(r)), 1);
    for (int c : {2, 3, 4}) run("jst_c" + std::to_string(c), jst(c), c);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(seconds < kLimitRuntimeSeconds, "runtime " + std::to_string(seconds) + " s");
    if (o.pass) o.detail << "worst final error " << worst_final << ", " << seconds << " s";
}

void criterion7(Outcome& o) {
    for (int s = 1; s <= 10; ++s)
        for (int n = 0; n < s; ++n) {
            o.expect(alternating_binomial_moment(s, n).is_zero(), "moment s=" + std::to_string(s));
            for (std::int64_t d : {2, 3, 4, 6})
                for (std::int64_t m = -5; m <= 5; ++m)
                    o.expect(shifted_binomial_moment(s, n, m, d).is_zero(), "shifted moment s=" + std::to_string(s));
        }
    Rng rng(kSeed);
    std::uniform_int_distribution<std::int64_t> point(-20, 20);
    for (int k = 0; k < kRandomPolynomials; ++k) {
        const Polynomial g = random_polynomial(rng, 1 + k % 10);
        const auto lt = leading_term(g);
        const int r = lt.degree;
        const auto f = as_numeric(g);
        for (std::int64_t d : {2, 3, 4, 6})
            for (int s = 0; s <= 10; ++s) {
                const std::int64_t n = point(rng);
                const Rational pos = delta(f, s, d, n, DeltaMode::closed);
                o.expect(pos == delta(f, s, d, n, DeltaMode::recursive), "recursive != closed");
                const Rational neg = delta_neg(f, s, d, n, DeltaMode::closed);
                o.expect(neg == delta_neg(f, s, d, n, DeltaMode::recursive), "negative recursive != closed");
                const Rational sign = s % 2 == 0 ? Rational(1) : Rational(-1);
                o.expect(neg == sign * delta(f, s, d, n + s, DeltaMode::closed), "negative identity");
                if (s > r) o.expect(pos.is_zero(), "Delta^s vanishes above the degree");
                if (s == r)
                    o.expect(pos == lt.coeff * Rational(factorial(static_cast<unsigned>(s))) *
                                        pow(Rational(d), static_cast<unsigned>(s)),
                             "Delta^r = a r! d^r");
            }
    }
    if (o.pass) o.detail << o.checks << " identities";
}

void criterion8(Outcome& o) {
    for (const auto& [name, lf] : worked_examples()) {
        const int cx = complexity(lf, Side::positive);
        const Integer e = multiplicity_pos(lf, cx).e_delta;
        const KoszulChain chain = reduce_chain(lf, cx, Side::positive);
        for (std::size_t k = 0; k < chain.values.size(); ++k)
            o.expect(chain.values[k] && *chain.values[k] == e, name + ": value changes at step " + std::to_string(k));
        for (std::size_t k = 0; k < chain.steps.size(); ++k)
            o.expect(complexity(chain.steps[k].result, Side::positive) == cx - 1 - static_cast<int>(k),
                     name + ": cx does not drop by one at step " + std::to_string(k + 1));
        o.expect(euler_characteristic(chain.terminal()) == e, name + ": terminal Euler sum");
    }
    if (o.pass) o.detail << "constant chains on " << worked_examples().size() << " functions";
}

void criterion9(Outcome& o) {
    Rng rng(kSeed + 1);
    for (int k = 0; k < kSplitPairs; ++k) {
        const int d = 2 * (1 + k % 3);
        const LengthFunction a = random_length_function(rng, d, 3);
        const LengthFunction b = random_length_function(rng, d, 3);
        const LengthFunction sum = pointwise_sum(a, b);
        const int s = std::max({complexity(a, Side::positive), complexity(b, Side::positive), 1});
        for (Convention c : {Convention::delta, Convention::coefficient})
            o.expect(multiplicity(sum, s, c) == multiplicity(a, s, c) + multiplicity(b, s, c),
                     "split pair " + std::to_string(k));
    }
    for (const auto& [name, lf] : worked_examples()) {
        const auto tri = koszul_triangle(lf);
        int s = 0;
        for (const auto& f : tri) s = std::max(s, complexity(f, Side::positive));
        const Integer e1 = multiplicity(tri[0], s, Convention::delta);
        const Integer e2 = multiplicity(tri[1], s, Convention::delta);
        const Integer e3 = multiplicity(tri[2], s, Convention::delta);
        o.expect(e2 == e1 + e3, name + ": Koszul triangle " + str(e2) + " != " + str(e1) + " + " + str(e3));
    }
    if (o.pass) o.detail << kSplitPairs << " split pairs, " << worked_examples().size() << " Koszul triangles";
}

void criterion10(Outcome& o) {
    for (const char* name : {"theta_5_2", "theta_periodic", "theta_eventually_zero"}) {
        const Fixture f = load_fixture(default_fixture_dir() + "/" + name + ".json");
        const LengthFunction tor = fixture_tor(f);
        // a and b read off far out on each parity.
        const std::int64_t far = 2 * (tor.end() + 10);
        const Integer a = tor(far);
        const Integer b = tor(far + 1);
        const Integer theta = theta_invariant(tor);
        o.expect(theta == a - b, std::string(name) + ": theta " + str(theta) + " != a-b");
        o.expect(theta == multiplicity_neg(reflect(tor), 1).e_delta, std::string(name) + ": theta != e_1");
    }
    for (const char* name : {"two_sided_d2", "two_sided_d4"}) {
        const LengthFunction lf = fixture(name);
        const int cx = std::max(complexity(lf, Side::positive), complexity(lf, Side::negative));
        for (int s = std::max(cx, 1); s <= cx + 1; ++s)
            o.expect(multiplicity_pos(lf, s).e_delta == multiplicity_neg(lf, s).e_delta,
                     std::string(name) + ": e^s != e_s at s=" + std::to_string(s));
    }
    for (const char* name : {"finite_pair", "finite_unit", "vanishing_from_10", "zero", "serre_pair"}) {
        const LengthFunction lf = fixture(name);
        o.expect(multiplicity_pos(lf, 0).e_delta == multiplicity_neg(lf, 0).e_delta,
                 std::string(name) + ": e_0 != e^0");
    }
    if (o.pass) o.detail << "theta = a-b = e_1, e^s = e_s two-sided, e_0 = e^0";
}

void criterion11(Outcome& o) {
    struct Case {
        LengthFunction lf;
        std::int64_t m0;
    };
    const std::vector<Case> cases{{fixture("vanishing_from_10"), 10},
                                  {fixture("zero"), 0},
                                  {LengthFunction::finite(2, 0, {1, 1, 0, 0}), 2},
                                  {LengthFunction::finite(6, -3, {2, 1, 1, 2, 0, 0, 0, 0, 0, 0}), 1}};
    for (const auto& c : cases)
        for (Parity p : {Parity::even, Parity::odd}) {
            const WindowResult r = vanishing_window_check(c.lf, c.m0, p);
            o.expect(r.kind == WindowResult::Kind::confirmed, std::string("expected confirmed, got ") + to_string(r.kind));
        }
    for (Parity p : {Parity::even, Parity::odd}) {
        const WindowResult r = vanishing_window_check(s4(), 0, p);
        o.expect(r.kind == WindowResult::Kind::window_not_found, std::string("S4: ") + to_string(r.kind));
    }
    if (o.pass) o.detail << cases.size() << " vanishing functions confirmed, S4 window_not_found";
}

void criterion12(Outcome& o) {
    for (const auto& r : run_properties(kSeed, kPropertyCases)) {
        o.expect(r.cases == kPropertyCases, r.name + ": ran " + std::to_string(r.cases) + " cases");
        o.expect(r.passed(), r.name + ": " + r.first_failure);
    }
    if (o.pass) o.detail << "8 suites x " << kPropertyCases << " cases, seed " << kSeed;
}

}  // namespace

int main() {
    const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2,  criterion3,  criterion4,
                                                             criterion5, criterion6,  criterion7,  criterion8,
                                                             criterion9, criterion10, criterion11, criterion12};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k](o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
