#include "mult/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace mult {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational{}; }

LeadingTerm Polynomial::leading_term() const {
    if (coeffs_.empty()) return {-1, Rational{}};
    return {degree(), coeffs_.back()};
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const { return compose_linear(1, c); }

Polynomial Polynomial::compose_linear(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: acc = acc * (a t + b) + c_k.
    const Polynomial lin({b, a});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin;
        acc += constant(*it);
    }
    return acc;
}

Polynomial Polynomial::forward_difference() const { return shifted(1) - *this; }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k != 0) base *= base;
    }
    return result;
}

namespace {

std::string render(const std::vector<Rational>& coeffs, char var, bool parseable) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            if (parseable && !mag.is_integer())
                os << "(" << mag.numerator() << "/" << mag.denominator() << ")";
            else
                os << mag.to_string();
            if (k != 0 && parseable) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

}  // namespace

std::string Polynomial::to_string(char var) const { return render(coeffs_, var, false); }

std::string Polynomial::to_expression(char var) const { return render(coeffs_, var, true); }

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return {};
}

Polynomial poly_shift(const Polynomial& g, const Rational& c) { return g.shifted(c); }

LeadingTerm leading_term(const Polynomial& g) { return g.leading_term(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace mult
