#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mult/polynomial.hpp"
#include "mult/rational_function.hpp"

namespace mult {

/// d polynomials g_0..g_{d-1} in the block variable: the value at degree n
/// is g_{n mod d}(floor(n / d)), both taken with floor division.
///
/// `boundary` is where the description holds: n >= boundary for a tail
/// towards +infinity (the usual valid_from), n <= boundary for a tail
/// towards -infinity.
struct QuasiPolynomial {
    int d = 2;
    std::vector<Polynomial> polys;
    std::int64_t boundary = 0;

    static QuasiPolynomial zero(int d, std::int64_t boundary);

    Rational operator()(std::int64_t n) const;
    int max_degree() const;
    bool is_zero() const;
    /// Leading coefficients of degree `k` (zero when a g_i has lower degree).
    std::vector<Rational> coefficients_of_degree(int k) const;

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

enum class TailKind { vanishing, quasipoly };
enum class Side { positive, negative };

struct Tail {
    TailKind kind = TailKind::vanishing;
    QuasiPolynomial qp;  ///< meaningful only for quasipoly tails

    static Tail vanishing() { return {}; }
    static Tail quasipoly(QuasiPolynomial q) { return {TailKind::quasipoly, std::move(q)}; }

    bool is_vanishing() const { return kind == TailKind::vanishing; }
    /// Vanishing, or a quasi-polynomial whose polynomials are all zero.
    bool is_eventually_zero() const { return is_vanishing() || qp.is_zero(); }

    friend bool operator==(const Tail&, const Tail&) = default;
};

/// lambda : Z -> N given by an explicit core window [start, end] and tails
/// governing n > end and n < start.  Construction validates the model and
/// throws ModelError when it is inconsistent.
class LengthFunction {
public:
    LengthFunction(int d, std::int64_t start, std::vector<Integer> core, Tail pos_tail, Tail neg_tail);

    /// The identically zero function.
    static LengthFunction zero(int d);
    /// Finite support: values at start, start+1, ... and zero elsewhere.
    static LengthFunction finite(int d, std::int64_t start, std::vector<Integer> values);

    /// Builds a function from tails plus a value oracle for the window
    /// [lo, hi].  The window is widened as needed so that each quasipoly
    /// tail overlaps the core on d*(max_degree+2) points; `value_at` must
    /// agree with the tails wherever they are valid.
    static LengthFunction assemble(int d, std::int64_t lo, std::int64_t hi,
                                   const std::function<Integer(std::int64_t)>& value_at, Tail pos_tail,
                                   Tail neg_tail);

    int d() const { return d_; }
    std::int64_t start() const { return start_; }
    /// Last core degree; start() - 1 when the core is empty.
    std::int64_t end() const { return start_ + static_cast<std::int64_t>(core_.size()) - 1; }
    const std::vector<Integer>& core() const { return core_; }
    const Tail& pos_tail() const { return pos_; }
    const Tail& neg_tail() const { return neg_; }
    const Tail& tail(Side side) const { return side == Side::positive ? pos_ : neg_; }

    /// lambda(n) for any integer n.
    Integer evaluate(std::int64_t n) const;
    Integer operator()(std::int64_t n) const { return evaluate(n); }

    /// Both sides eventually zero.
    bool has_finite_support() const { return pos_.is_eventually_zero() && neg_.is_eventually_zero(); }

    /// First degree from which the positive description is in force:
    /// valid_from of a quasipoly tail (no lower than start()), end()+1 for a
    /// vanishing one.
    std::int64_t positive_onset() const;
    /// Mirror of positive_onset() for the negative side.
    std::int64_t negative_onset() const;

    /// Quasi-polynomial describing the given side; zero polynomials for a
    /// vanishing tail.
    QuasiPolynomial side_polys(Side side) const;

    friend bool operator==(const LengthFunction&, const LengthFunction&) = default;

private:
    void validate() const;

    int d_;
    std::int64_t start_;
    std::vector<Integer> core_;
    Tail pos_;
    Tail neg_;
};

/// 1 + max |c_k / c_lead| rounded up: every real root of g (nonzero) lies
/// strictly inside this bound.  Throws ModelError when it is too large to
/// scan.
std::int64_t cauchy_root_bound(const Polynomial& g);

/// Degree n at which a quasi-polynomial tail first becomes negative beyond
/// `edge`, scanning towards infinity on `side`; nullopt when the tail is
/// nonnegative on that whole half-line.
std::optional<std::int64_t> first_negative(const QuasiPolynomial& qp, std::int64_t edge, Side side);

Integer evaluate(const LengthFunction& lf, std::int64_t n);

/// Fits a quasi-polynomial of period d to consecutive samples n -> value,
/// working per residue class from the high end of the window.
QuasiPolynomial fit_quasipoly(const std::map<std::int64_t, Rational>& samples, int d);

/// Expands `probe` coefficients of f (degrees 0..probe-1) and fits the
/// positive tail.  Polynomials give finite support.
LengthFunction from_series(const RationalFunction& f, int d, std::int64_t probe);

/// 1 + max deg g_i on the requested side; 0 for a vanishing tail.
int complexity(const LengthFunction& lf, Side side);

/// lambda'(n) = lambda(n + k).
LengthFunction shift(const LengthFunction& lf, std::int64_t k);

/// lambda'(n) = lambda(-n).  Turns homological indexing into cohomological.
LengthFunction reflect(const LengthFunction& lf);

LengthFunction pointwise_sum(const LengthFunction& a, const LengthFunction& b);

}  // namespace mult
