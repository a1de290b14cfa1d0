#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mult/length_function.hpp"

namespace mult {

/// delta: the stabilized iterated difference of h.
/// coefficient: (s-1)! d^(s-1) sum_i (-1)^i a_i from the leading coefficients.
enum class Convention { delta, coefficient };

struct MultiplicityReport {
    Side side = Side::positive;
    int s = 0;
    int cx = 0;
    std::optional<int> cx_neg;
    QuasiPolynomial polys;
    std::optional<QuasiPolynomial> polys_neg;
    /// a_i: coefficient of t^(s-1) in g_i (empty when s = 0).
    std::vector<Rational> leading;
    Integer e_delta;
    Integer e_coeff;
    /// Positive side: smallest n from which the stabilized value holds for
    /// every larger n.  Negative side: largest n below which it holds.
    std::int64_t stabilization_index = 0;
    /// True when s = 0 and the value is the alternating Euler sum.
    bool euler = false;

    const Integer& value(Convention c) const { return c == Convention::delta ? e_delta : e_coeff; }
};

/// h(n) = sum_{i<d} (-1)^(n+i) lambda(n+i).
Integer herbrand(const LengthFunction& lf, std::int64_t n);

/// Per residue class j, the polynomial H_j with h(dm + j) = H_j(m) wherever
/// the whole window n..n+d-1 lies in the tail on `side`.
std::vector<Polynomial> herbrand_polys(const QuasiPolynomial& qp);

/// e^s.  Throws PreconditionError when s < cx, or when s = 0 and the
/// negative side does not vanish; ModelError if residue classes disagree.
MultiplicityReport multiplicity_pos(const LengthFunction& lf, int s);
/// e_s, the mirror on the negative side using Delta^{-(s-1)}.
MultiplicityReport multiplicity_neg(const LengthFunction& lf, int s);

Integer multiplicity(const LengthFunction& lf, int s, Convention c, Side side = Side::positive);

/// sum_n (-1)^n lambda(n); requires both tails to be eventually zero.
Integer euler_characteristic(const LengthFunction& lf);

enum class LimitConstant { paper, corrected };

/// C * P(n) / n^s with P(n) = sum_{j=0}^{n} (-1)^j lambda(j), where C is
/// s! d^(2s-1) (paper) or s! d^s (corrected).  Tail sums are closed form.
Rational limit_estimate(const LengthFunction& lf, int s, std::int64_t n, LimitConstant constant);
/// P(n) alone.
Rational alternating_partial_sum(const LengthFunction& lf, std::int64_t n);

/// Input is tor(n) = length Tor_n in homological degree n.  Returns the
/// stabilized even-minus-odd difference, cross-checked against e_1 of the
/// reindexed function n -> tor(-n).
Integer theta_invariant(const LengthFunction& tor);

/// sum_n (-1)^n tor[n], cross-checked against the Euler characteristic of
/// the reindexed length function.
Integer serre_intersection(const std::vector<Integer>& tor);

enum class Parity { even, odd };

struct WindowResult {
    enum class Kind { confirmed, window_not_found, violated };
    Kind kind = Kind::window_not_found;
    std::int64_t window_start = 0;  ///< first degree of the zero run (confirmed / violated)
    std::int64_t violation = 0;     ///< first n >= m0 with lambda(n) != 0 (violated)
};

/// If lambda vanishes on d/2 consecutive degrees of the given parity at or
/// after m0, checks that it vanishes for every n >= m0.  Requires e^cx = 0.
WindowResult vanishing_window_check(const LengthFunction& lf, std::int64_t m0, Parity parity);

const char* to_string(Convention c);
const char* to_string(Side s);
const char* to_string(WindowResult::Kind k);

}  // namespace mult
