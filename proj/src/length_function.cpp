#include "mult/length_function.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mult/error.hpp"

namespace mult {

namespace {

constexpr std::int64_t kMaxCertifyBlocks = 2'000'000;

void require_even_d(int d) {
    if (d < 2 || d % 2 != 0) throw ModelError("generation degree d must be even and >= 2, got " + std::to_string(d));
}

}  // namespace

std::int64_t cauchy_root_bound(const Polynomial& g) {
    const auto lead = g.leading_term();
    Rational best;
    for (int k = 0; k < lead.degree; ++k) best = std::max(best, abs(g.coeff(static_cast<std::size_t>(k)) / lead.coeff));
    Integer ceil_val;
    const Integer num = best.numerator();
    const Integer den = best.denominator();
    mpz_cdiv_q(ceil_val.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    ceil_val += 1;
    if (!fits_int64(ceil_val) || ceil_val > kMaxCertifyBlocks)
        throw ModelError("tail polynomial " + g.to_string() + " has roots too far out to certify");
    return to_int64(ceil_val);
}

namespace {

std::int64_t overlap_points(std::int64_t start, std::int64_t end, const Tail& tail, Side side) {
    if (side == Side::positive) return end - std::max(start, tail.qp.boundary) + 1;
    return std::min(end, tail.qp.boundary) - start + 1;
}

std::int64_t required_overlap(int d, const QuasiPolynomial& qp) {
    return static_cast<std::int64_t>(d) * (qp.max_degree() + 2);
}

}  // namespace

QuasiPolynomial QuasiPolynomial::zero(int d, std::int64_t boundary) {
    return QuasiPolynomial{d, std::vector<Polynomial>(static_cast<std::size_t>(d)), boundary};
}

Rational QuasiPolynomial::operator()(std::int64_t n) const {
    const auto i = static_cast<std::size_t>(floor_mod(n, d));
    return polys.at(i)(Rational(floor_div(n, d)));
}

int QuasiPolynomial::max_degree() const {
    int deg = -1;
    for (const auto& g : polys) deg = std::max(deg, g.degree());
    return deg;
}

bool QuasiPolynomial::is_zero() const {
    return std::all_of(polys.begin(), polys.end(), [](const Polynomial& g) { return g.is_zero(); });
}

std::vector<Rational> QuasiPolynomial::coefficients_of_degree(int k) const {
    std::vector<Rational> out;
    out.reserve(polys.size());
    for (const auto& g : polys) out.push_back(k < 0 ? Rational{} : g.coeff(static_cast<std::size_t>(k)));
    return out;
}

std::optional<std::int64_t> first_negative(const QuasiPolynomial& qp, std::int64_t edge, Side side) {
    std::optional<std::int64_t> worst;
    auto record = [&](std::int64_t n) {
        if (!worst || (side == Side::positive ? n < *worst : n > *worst)) worst = n;
    };
    for (int i = 0; i < qp.d; ++i) {
        const Polynomial& g = qp.polys[static_cast<std::size_t>(i)];
        if (g.is_zero()) continue;
        const std::int64_t bound = cauchy_root_bound(g);
        if (side == Side::positive) {
            const std::int64_t m_first = floor_div(edge - i, qp.d) + 1;
            const std::int64_t m_last = std::max(m_first, bound) + 1;
            for (std::int64_t m = m_first; m <= m_last; ++m)
                if (g(Rational(m)).sign() < 0) {
                    record(qp.d * m + i);
                    break;
                }
        } else {
            const std::int64_t m_first = floor_div(edge - 1 - i, qp.d);
            const std::int64_t m_last = std::min(m_first, -bound) - 1;
            for (std::int64_t m = m_first; m >= m_last; --m)
                if (g(Rational(m)).sign() < 0) {
                    record(qp.d * m + i);
                    break;
                }
        }
    }
    return worst;
}

LengthFunction::LengthFunction(int d, std::int64_t start, std::vector<Integer> core, Tail pos_tail, Tail neg_tail)
    : d_(d), start_(start), core_(std::move(core)), pos_(std::move(pos_tail)), neg_(std::move(neg_tail)) {
    validate();
}

LengthFunction LengthFunction::zero(int d) { return LengthFunction(d, 0, {}, Tail::vanishing(), Tail::vanishing()); }

LengthFunction LengthFunction::finite(int d, std::int64_t start, std::vector<Integer> values) {
    return LengthFunction(d, start, std::move(values), Tail::vanishing(), Tail::vanishing());
}

LengthFunction LengthFunction::assemble(int d, std::int64_t lo, std::int64_t hi,
                                        const std::function<Integer(std::int64_t)>& value_at, Tail pos_tail,
                                        Tail neg_tail) {
    require_even_d(d);
    if (!pos_tail.is_vanishing()) {
        const std::int64_t need = required_overlap(d, pos_tail.qp);
        hi = std::max(hi, std::max(lo, pos_tail.qp.boundary) + need - 1);
    }
    if (!neg_tail.is_vanishing()) {
        const std::int64_t need = required_overlap(d, neg_tail.qp);
        lo = std::min(lo, std::min(hi, neg_tail.qp.boundary) - need + 1);
    }
    std::vector<Integer> core;
    if (hi >= lo) {
        core.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) core.push_back(value_at(n));
    }
    return LengthFunction(d, lo, std::move(core), std::move(pos_tail), std::move(neg_tail));
}

void LengthFunction::validate() const {
    require_even_d(d_);
    for (std::size_t k = 0; k < core_.size(); ++k)
        if (core_[k] < 0)
            throw ModelError("negative length " + core_[k].get_str() + " at n=" +
                             std::to_string(start_ + static_cast<std::int64_t>(k)));
    for (Side side : {Side::positive, Side::negative}) {
        const Tail& t = tail(side);
        if (t.is_vanishing()) continue;
        const char* name = side == Side::positive ? "pos_tail" : "neg_tail";
        if (t.qp.d != d_ || static_cast<int>(t.qp.polys.size()) != d_)
            throw ModelError(std::string(name) + ": expected " + std::to_string(d_) + " polynomials");
        const std::int64_t have = overlap_points(start_, end(), t, side);
        const std::int64_t need = required_overlap(d_, t.qp);
        if (have < need)
            throw ModelError(std::string(name) + ": core overlaps the tail on " + std::to_string(std::max<std::int64_t>(have, 0)) +
                             " points, need " + std::to_string(need));
        const std::int64_t lo = side == Side::positive ? std::max(start_, t.qp.boundary) : start_;
        const std::int64_t hi = side == Side::positive ? end() : std::min(end(), t.qp.boundary);
        for (std::int64_t n = lo; n <= hi; ++n) {
            const Rational tv = t.qp(n);
            if (tv != Rational(core_[static_cast<std::size_t>(n - start_)]))
                throw ModelError(std::string(name) + " disagrees with core at n=" + std::to_string(n) + ": tail gives " +
                                 tv.to_string() + ", core has " + core_[static_cast<std::size_t>(n - start_)].get_str());
        }
        const std::int64_t edge = side == Side::positive ? end() : start_;
        if (auto bad = first_negative(t.qp, edge, side))
            throw ModelError(std::string(name) + " takes a negative value at n=" + std::to_string(*bad));
    }
}

Integer LengthFunction::evaluate(std::int64_t n) const {
    if (n >= start_ && n <= end()) return core_[static_cast<std::size_t>(n - start_)];
    const Tail& t = n > end() ? pos_ : neg_;
    if (t.is_vanishing()) return 0;
    const Rational v = t.qp(n);
    if (!v.is_integer() || v.sign() < 0)
        throw ModelError("tail evaluates to " + v.to_string() + " at n=" + std::to_string(n));
    return v.numerator();
}

std::int64_t LengthFunction::positive_onset() const {
    return pos_.is_vanishing() ? end() + 1 : std::max(pos_.qp.boundary, start_);
}

std::int64_t LengthFunction::negative_onset() const {
    return neg_.is_vanishing() ? start_ - 1 : std::min(neg_.qp.boundary, end());
}

QuasiPolynomial LengthFunction::side_polys(Side side) const {
    const Tail& t = tail(side);
    if (!t.is_vanishing()) return t.qp;
    return QuasiPolynomial::zero(d_, side == Side::positive ? positive_onset() : negative_onset());
}

Integer evaluate(const LengthFunction& lf, std::int64_t n) { return lf.evaluate(n); }

QuasiPolynomial fit_quasipoly(const std::map<std::int64_t, Rational>& samples, int d) {
    require_even_d(d);
    if (samples.empty()) throw FitError("no samples to fit", 0, -1);
    const std::int64_t n_lo = samples.begin()->first;
    const std::int64_t n_hi = samples.rbegin()->first;
    if (n_hi - n_lo + 1 != static_cast<std::int64_t>(samples.size()))
        throw PreconditionError("fit_quasipoly needs samples at consecutive degrees");

    QuasiPolynomial qp = QuasiPolynomial::zero(d, n_lo);
    std::int64_t boundary = n_lo;
    int boundary_class = 0;
    for (int i = 0; i < d; ++i) {
        // Block sequence m -> samples(d*m + i) over the window.
        const std::int64_t m_lo = floor_div(n_lo - i + d - 1, d);
        const std::int64_t m_hi = floor_div(n_hi - i, d);
        std::vector<Rational> v;
        for (std::int64_t m = m_lo; m <= m_hi; ++m) v.push_back(samples.at(d * m + i));
        const auto len = static_cast<std::int64_t>(v.size());

        int degree = -2;
        int best_degree = -1;
        std::size_t best_nonzero = std::numeric_limits<std::size_t>::max();
        for (int k = -1;; ++k) {
            const std::int64_t w = 2 * (k + 2);
            if (w > len) break;
            // (k+1)-th forward differences of the top w values.
            std::vector<Rational> diff(v.end() - w, v.end());
            for (int r = 0; r <= k; ++r) {
                for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
                diff.pop_back();
            }
            const auto nonzero = static_cast<std::size_t>(
                std::count_if(diff.begin(), diff.end(), [](const Rational& x) { return !x.is_zero(); }));
            if (nonzero < best_nonzero) {
                best_nonzero = nonzero;
                best_degree = k;
            }
            if (nonzero == 0) {
                degree = k;
                break;
            }
        }
        if (degree == -2)
            throw FitError("no polynomial stabilization in residue class " + std::to_string(i) +
                               " within the probe window (best candidate degree " + std::to_string(best_degree) +
                               "); increase probe",
                           i, best_degree);

        // Newton forward interpolation through the first k+1 points of the window.
        const std::int64_t w = 2 * (degree + 2);
        const std::int64_t base = len - w;
        Polynomial g;
        if (degree >= 0) {
            std::vector<Rational> col(v.begin() + base, v.begin() + base + degree + 1);
            Polynomial basis = Polynomial::constant(1);  // C(t - m0, j)
            const Rational m0(m_lo + base);
            for (int j = 0; j <= degree; ++j) {
                g += basis * col[0];
                for (std::size_t r = 0; r + 1 < col.size(); ++r) col[r] = col[r + 1] - col[r];
                col.pop_back();
                basis = basis * Polynomial({-(m0 + Rational(j)), Rational(1)}) * Rational(Integer(1), Integer(j + 1));
            }
        }
        std::int64_t first_ok = len;
        while (first_ok > 0 && g(Rational(m_lo + first_ok - 1)) == v[static_cast<std::size_t>(first_ok - 1)]) --first_ok;
        if (first_ok > base)
            throw FitError("interpolant for residue class " + std::to_string(i) + " fails verification", i, degree);
        if (first_ok > 0) {
            const std::int64_t last_bad = d * (m_lo + first_ok - 1) + i;
            if (last_bad + 1 > boundary) {
                boundary = last_bad + 1;
                boundary_class = i;
            }
        }
        qp.polys[static_cast<std::size_t>(i)] = std::move(g);
    }
    qp.boundary = boundary;
    const std::int64_t need = static_cast<std::int64_t>(d) * (qp.max_degree() + 2);
    if (n_hi - boundary + 1 < need)
        throw FitError("quasi-polynomial verified on only " + std::to_string(n_hi - boundary + 1) +
                           " trailing samples, need " + std::to_string(need) + "; increase probe",
                       boundary_class, qp.polys[static_cast<std::size_t>(boundary_class)].degree());
    return qp;
}

LengthFunction from_series(const RationalFunction& f, int d, std::int64_t probe) {
    require_even_d(d);
    auto as_lengths = [](const std::vector<Rational>& coeffs) {
        std::vector<Integer> out;
        out.reserve(coeffs.size());
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            if (!coeffs[n].is_integer() || coeffs[n].sign() < 0)
                throw ModelError("series coefficient at n=" + std::to_string(n) + " is " + coeffs[n].to_string() +
                                 ", not a length");
            out.push_back(coeffs[n].numerator());
        }
        return out;
    };
    if (f.is_polynomial()) {
        const int deg = f.numerator().degree();
        return LengthFunction::finite(d, 0, as_lengths(series_coefficients(f, deg)));
    }
    if (probe < 1) throw PreconditionError("probe must be positive");
    const std::vector<Rational> coeffs = series_coefficients(f, probe - 1);
    std::vector<Integer> values = as_lengths(coeffs);
    std::map<std::int64_t, Rational> samples;
    for (std::size_t n = 0; n < coeffs.size(); ++n) samples.emplace(static_cast<std::int64_t>(n), coeffs[n]);
    QuasiPolynomial qp = fit_quasipoly(samples, d);
    Tail pos = qp.is_zero() ? Tail::vanishing() : Tail::quasipoly(std::move(qp));
    return LengthFunction(d, 0, std::move(values), std::move(pos), Tail::vanishing());
}

int complexity(const LengthFunction& lf, Side side) {
    const Tail& t = lf.tail(side);
    if (t.is_vanishing()) return 0;
    return 1 + t.qp.max_degree();
}

namespace {

// Re-indexes a quasi-polynomial so that the result at n equals qp at n + k.
QuasiPolynomial shift_qp(const QuasiPolynomial& qp, std::int64_t k) {
    QuasiPolynomial out = qp;
    for (int i = 0; i < qp.d; ++i) {
        const std::int64_t src = i + k;
        out.polys[static_cast<std::size_t>(i)] =
            qp.polys[static_cast<std::size_t>(floor_mod(src, qp.d))].shifted(Rational(floor_div(src, qp.d)));
    }
    out.boundary = qp.boundary - k;
    return out;
}

// Result at n equals qp at -n.
QuasiPolynomial reflect_qp(const QuasiPolynomial& qp) {
    QuasiPolynomial out = qp;
    for (int j = 0; j < qp.d; ++j) {
        if (j == 0)
            out.polys[0] = qp.polys[0].compose_linear(-1, 0);
        else
            out.polys[static_cast<std::size_t>(j)] = qp.polys[static_cast<std::size_t>(qp.d - j)].compose_linear(-1, -1);
    }
    out.boundary = -qp.boundary;
    return out;
}

}  // namespace

LengthFunction shift(const LengthFunction& lf, std::int64_t k) {
    Tail pos = lf.pos_tail();
    Tail neg = lf.neg_tail();
    if (!pos.is_vanishing()) pos.qp = shift_qp(pos.qp, k);
    if (!neg.is_vanishing()) neg.qp = shift_qp(neg.qp, k);
    return LengthFunction(lf.d(), lf.start() - k, lf.core(), std::move(pos), std::move(neg));
}

LengthFunction reflect(const LengthFunction& lf) {
    Tail pos = lf.neg_tail();
    Tail neg = lf.pos_tail();
    if (!pos.is_vanishing()) pos.qp = reflect_qp(pos.qp);
    if (!neg.is_vanishing()) neg.qp = reflect_qp(neg.qp);
    std::vector<Integer> core(lf.core().rbegin(), lf.core().rend());
    return LengthFunction(lf.d(), -lf.end(), std::move(core), std::move(pos), std::move(neg));
}

LengthFunction pointwise_sum(const LengthFunction& a, const LengthFunction& b) {
    if (a.d() != b.d())
        throw ModelError("pointwise_sum needs equal d, got " + std::to_string(a.d()) + " and " + std::to_string(b.d()));
    const int d = a.d();
    const bool a_empty = a.core().empty();
    const bool b_empty = b.core().empty();
    std::int64_t lo = a_empty ? b.start() : b_empty ? a.start() : std::min(a.start(), b.start());
    std::int64_t hi = a_empty ? b.end() : b_empty ? a.end() : std::max(a.end(), b.end());

    auto combine = [&](Side side) -> Tail {
        const Tail& ta = a.tail(side);
        const Tail& tb = b.tail(side);
        if (ta.is_vanishing() && tb.is_vanishing()) return Tail::vanishing();
        QuasiPolynomial qa = a.side_polys(side);
        QuasiPolynomial qb = b.side_polys(side);
        QuasiPolynomial sum = qa;
        for (int i = 0; i < d; ++i) sum.polys[static_cast<std::size_t>(i)] += qb.polys[static_cast<std::size_t>(i)];
        sum.boundary = side == Side::positive ? std::max(qa.boundary, qb.boundary) : std::min(qa.boundary, qb.boundary);
        return Tail::quasipoly(std::move(sum));
    };
    Tail pos = combine(Side::positive);
    Tail neg = combine(Side::negative);
    return LengthFunction::assemble(
        d, lo, hi, [&](std::int64_t n) -> Integer { return a.evaluate(n) + b.evaluate(n); }, std::move(pos), std::move(neg));
}

}  // namespace mult
