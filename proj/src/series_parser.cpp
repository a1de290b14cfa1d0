#include "mult/series_parser.hpp"

#include <cctype>
#include <sstream>

namespace mult {

namespace {

constexpr unsigned kMaxExponent = 4096;

std::string join(const std::set<std::string>& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : s) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    return os.str();
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {
        for (std::size_t i = 0; i < text_.size(); ++i)
            if (static_cast<unsigned char>(text_[i]) >= 0x80)
                throw SyntaxError(i, {"ASCII character"}, "non-ASCII byte");
    }

    std::unique_ptr<SeriesExpression> parse() {
        auto e = expr();
        skip_ws();
        note_expected("end of input");
        if (pos_ < text_.size()) fail();
        return e;
    }

private:
    using Node = std::unique_ptr<SeriesExpression>;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // Tokens tried at the furthest position reached form the expected set.
    void note_expected(const char* what) {
        if (pos_ > furthest_) {
            furthest_ = pos_;
            expected_.clear();
        }
        if (pos_ == furthest_) expected_.insert(what);
    }

    bool accept(char c, const char* name) {
        skip_ws();
        note_expected(name);
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail() {
        skip_ws();
        std::size_t at = std::max(pos_, furthest_);
        std::string found = at < text_.size() ? std::string("'") + text_[at] + "'" : std::string("end of input");
        throw SyntaxError(at, at == furthest_ ? expected_ : std::set<std::string>{"end of input"}, found);
    }

    Node make(SeriesExpression::Kind kind, Node lhs, Node rhs, std::size_t begin) {
        auto n = std::make_unique<SeriesExpression>();
        n->kind = kind;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        n->begin = begin;
        n->end = pos_;
        return n;
    }

    Node expr() {
        skip_ws();
        const std::size_t begin = pos_;
        Node lhs = term();
        for (;;) {
            if (accept('+', "'+'"))
                lhs = make(SeriesExpression::Kind::add, std::move(lhs), term(), begin);
            else if (accept('-', "'-'"))
                lhs = make(SeriesExpression::Kind::sub, std::move(lhs), term(), begin);
            else
                return lhs;
        }
    }

    Node term() {
        skip_ws();
        const std::size_t begin = pos_;
        Node lhs = unary();
        for (;;) {
            if (accept('*', "'*'"))
                lhs = make(SeriesExpression::Kind::mul, std::move(lhs), unary(), begin);
            else if (accept('/', "'/'"))
                lhs = make(SeriesExpression::Kind::div, std::move(lhs), unary(), begin);
            else
                return lhs;
        }
    }

    Node unary() {
        skip_ws();
        const std::size_t begin = pos_;
        if (accept('-', "'-'")) return make(SeriesExpression::Kind::negate, unary(), nullptr, begin);
        return power();
    }

    Node power() {
        skip_ws();
        const std::size_t begin = pos_;
        Node base = primary();
        if (accept('^', "'^'")) {
            skip_ws();
            note_expected("exponent");
            Integer k;
            if (!integer(k)) fail();
            if (k > kMaxExponent) throw SyntaxError(begin, {"exponent <= 4096"}, k.get_str());
            Node n = make(SeriesExpression::Kind::power, std::move(base), nullptr, begin);
            n->value = k;
            return n;
        }
        return base;
    }

    Node primary() {
        skip_ws();
        const std::size_t begin = pos_;
        Integer v;
        note_expected("integer");
        if (integer(v)) {
            Node n = make(SeriesExpression::Kind::literal, nullptr, nullptr, begin);
            n->value = v;
            return n;
        }
        if (accept('t', "'t'")) return make(SeriesExpression::Kind::indeterminate, nullptr, nullptr, begin);
        if (accept('(', "'('")) {
            Node inner = expr();
            if (!accept(')', "')'")) fail();
            inner->begin = begin;
            inner->end = pos_;
            return inner;
        }
        fail();
    }

    bool integer(Integer& out) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) return false;
        out.set_str(std::string(text_.substr(start, pos_ - start)), 10);
        return true;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t furthest_ = 0;
    std::set<std::string> expected_;
};

struct Fraction {
    Polynomial num;
    Polynomial den;
};

Fraction fold(const SeriesExpression& e, std::string_view src) {
    using K = SeriesExpression::Kind;
    switch (e.kind) {
        case K::literal: return {Polynomial::constant(Rational(e.value)), Polynomial::constant(1)};
        case K::indeterminate: return {Polynomial::t(), Polynomial::constant(1)};
        case K::negate: {
            Fraction f = fold(*e.lhs, src);
            return {-f.num, f.den};
        }
        case K::add:
        case K::sub: {
            Fraction a = fold(*e.lhs, src);
            Fraction b = fold(*e.rhs, src);
            if (a.den == b.den) return {e.kind == K::add ? a.num + b.num : a.num - b.num, a.den};
            Polynomial lhs = a.num * b.den;
            Polynomial rhs = b.num * a.den;
            return {e.kind == K::add ? lhs + rhs : lhs - rhs, a.den * b.den};
        }
        case K::mul: {
            Fraction a = fold(*e.lhs, src);
            Fraction b = fold(*e.rhs, src);
            return {a.num * b.num, a.den * b.den};
        }
        case K::div: {
            Fraction a = fold(*e.lhs, src);
            Fraction b = fold(*e.rhs, src);
            Fraction r{a.num * b.den, a.den * b.num};
            if (r.den.is_zero() || r.den.coeff(0).is_zero()) {
                const std::string sub(src.substr(e.begin, e.end - e.begin));
                throw SemanticError(r.den.is_zero() ? "division by zero" : "denominator has zero constant term",
                                    e.begin, e.end, sub);
            }
            return r;
        }
        case K::power: {
            Fraction a = fold(*e.lhs, src);
            const auto k = static_cast<unsigned>(e.value.get_ui());
            return {a.num.pow(k), a.den.pow(k)};
        }
    }
    return {};
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& found)
    : Error("syntax error at offset " + std::to_string(offset) + ": found " + found + ", expected one of {" +
            join(expected) + "}"),
      offset_(offset),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(const std::string& message, std::size_t begin, std::size_t end,
                             std::string subexpression)
    : Error(message + " in '" + subexpression + "' at offset " + std::to_string(begin)),
      begin_(begin),
      end_(end),
      subexpression_(std::move(subexpression)) {}

std::unique_ptr<SeriesExpression> parse_expression(std::string_view text) { return Parser(text).parse(); }

Rational evaluate_at(const SeriesExpression& e, const Rational& x) {
    using K = SeriesExpression::Kind;
    switch (e.kind) {
        case K::literal: return Rational(e.value);
        case K::indeterminate: return x;
        case K::negate: return -evaluate_at(*e.lhs, x);
        case K::add: return evaluate_at(*e.lhs, x) + evaluate_at(*e.rhs, x);
        case K::sub: return evaluate_at(*e.lhs, x) - evaluate_at(*e.rhs, x);
        case K::mul: return evaluate_at(*e.lhs, x) * evaluate_at(*e.rhs, x);
        case K::div: return evaluate_at(*e.lhs, x) / evaluate_at(*e.rhs, x);
        case K::power: return pow(evaluate_at(*e.lhs, x), static_cast<unsigned>(e.value.get_ui()));
    }
    return {};
}

RationalFunction to_rational_function(const SeriesExpression& expr, std::string_view source) {
    Fraction f = fold(expr, source);
    if (f.den.coeff(0).is_zero())
        throw SemanticError("denominator has zero constant term", expr.begin, expr.end,
                            std::string(source.substr(expr.begin, expr.end - expr.begin)));
    return RationalFunction(std::move(f.num), std::move(f.den));
}

RationalFunction parse_series(std::string_view text) { return to_rational_function(*parse_expression(text), text); }

}  // namespace mult
