#include "mult/koszul.hpp"

#include <set>
#include <sstream>

#include "mult/error.hpp"

namespace mult {

namespace {

constexpr std::size_t kMaxListedViolations = 10;

// Tail of n -> src(n+d) - src(n) (sign = +1) or src(n) - src(n+d) (sign = -1).
Tail difference_tail(const Tail& t, int sign, Side side, int d) {
    if (t.is_vanishing()) return t;
    QuasiPolynomial q = t.qp;
    for (auto& g : q.polys) {
        Polynomial diff = g.forward_difference();
        g = sign > 0 ? diff : -diff;
    }
    if (side == Side::negative) q.boundary -= d;
    if (q.is_zero()) return Tail::vanishing();
    return Tail::quasipoly(std::move(q));
}

}  // namespace

LengthFunction reduce(const LengthFunction& lf, Side regime, Certificate* certificate) {
    const int d = lf.d();
    // The negative regime is the positive difference of lambda(n+1), negated.
    const LengthFunction src = regime == Side::positive ? lf : shift(lf, 1);
    const int sign = regime == Side::positive ? 1 : -1;
    const auto value_at = [&](std::int64_t n) -> Integer {
        Integer v = src.evaluate(n + d) - src.evaluate(n);
        return sign > 0 ? v : Integer(-v);
    };

    std::int64_t lo = src.start() - d;
    std::int64_t hi = src.end();
    std::vector<std::int64_t> bad;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (value_at(n) < 0) bad.push_back(n);

    Tail pos = difference_tail(src.pos_tail(), sign, Side::positive, d);
    Tail neg = difference_tail(src.neg_tail(), sign, Side::negative, d);
    if (!pos.is_vanishing())
        if (auto n = first_negative(pos.qp, hi, Side::positive)) bad.push_back(*n);
    if (!neg.is_vanishing())
        if (auto n = first_negative(neg.qp, lo, Side::negative)) bad.push_back(*n);

    if (!bad.empty()) {
        std::ostringstream os;
        os << "not eventually injective in model: "
           << (regime == Side::positive ? "lambda(n+d) - lambda(n)" : "lambda(n+1) - lambda(n+d+1)")
           << " is negative at n =";
        for (std::size_t k = 0; k < bad.size() && k < kMaxListedViolations; ++k) os << (k ? ", " : " ") << bad[k];
        if (bad.size() > kMaxListedViolations) os << ", ...";
        throw ModelError(os.str());
    }

    LengthFunction out = LengthFunction::assemble(d, lo, hi, value_at, std::move(pos), std::move(neg));
    if (certificate) *certificate = Certificate{out.start(), out.end(), true, true};
    return out;
}

KoszulChain reduce_chain(const LengthFunction& lf, int s, Side regime) {
    if (s < 0) throw PreconditionError("chain length s must be nonnegative");
    const int cx = complexity(lf, regime);
    if (s < cx)
        throw PreconditionError("s below complexity: s=" + std::to_string(s) + ", " +
                                (regime == Side::positive ? "cx=" : "cx_neg=") + std::to_string(cx));
    KoszulChain chain{lf, regime, s, {}, {}};
    auto value_of = [&](const LengthFunction& f, int index) -> std::optional<Integer> {
        try {
            return multiplicity(f, index, Convention::delta, regime);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
    };
    chain.values.push_back(value_of(lf, s));
    for (int k = 1; k <= s; ++k) {
        Certificate cert;
        LengthFunction next = reduce(chain.terminal(), regime, &cert);
        chain.values.push_back(value_of(next, s - k));
        chain.steps.push_back(KoszulStep{regime, std::move(next), cert});
    }
    return chain;
}

std::array<LengthFunction, 3> koszul_triangle(const LengthFunction& lf) {
    return {lf, shift(lf, lf.d()), reduce(lf, Side::positive)};
}

MultiplicityFn implemented_multiplicity(Convention c) {
    return [c](const LengthFunction& lf, int s) -> std::optional<Integer> {
        try {
            return multiplicity(lf, s, c, Side::positive);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
    };
}

AxiomReport axioms_check(const MultiplicityFn& f, const std::vector<NamedFunction>& fixtures) {
    AxiomReport report;
    auto show = [](const std::optional<Integer>& v) { return v ? v->get_str() : std::string("undefined"); };
    for (const auto& [name, lf] : fixtures) {
        auto fail = [&](int axiom, std::string detail) {
            report.failures.push_back(AxiomFailure{name, axiom, std::move(detail)});
        };
        const int cx = complexity(lf, Side::positive);

        for (int s = cx + 1; s <= cx + 2; ++s) {
            ++report.checks;
            const auto v = f(lf, s);
            if (!v || *v != 0) fail(1, "f(s=" + std::to_string(s) + ") = " + show(v) + ", expected 0");
        }

        if (cx == 0 && lf.neg_tail().is_eventually_zero()) {
            ++report.checks;
            const auto v = f(lf, 0);
            const Integer euler = euler_characteristic(lf);
            if (!v || *v != euler) fail(2, "f(s=0) = " + show(v) + ", Euler sum " + euler.get_str());
        }

        std::optional<LengthFunction> reduced;
        try {
            reduced = reduce(lf, Side::positive);
        } catch (const ModelError&) {
            continue;  // no injective z in the model, axiom (3) says nothing
        }
        const std::set<int> indices{std::max(cx, 1), cx + 1};
        for (int s : indices) {
            ++report.checks;
            const auto before = f(lf, s);
            const auto after = f(*reduced, s - 1);
            if (!before || !after || *before != *after)
                fail(3, "f(s=" + std::to_string(s) + ") = " + show(before) + ", f(reduced, s=" +
                            std::to_string(s - 1) + ") = " + show(after));
        }

        std::optional<Integer> forced;
        try {
            forced = reduce_chain(lf, cx, Side::positive).values.back();
        } catch (const ModelError&) {
            continue;
        }
        ++report.checks;
        const auto v = f(lf, cx);
        if (!forced || !v || *forced != *v)
            fail(4, "f(s=cx=" + std::to_string(cx) + ") = " + show(v) + ", axioms force " + show(forced));
    }
    return report;
}

}  // namespace mult
