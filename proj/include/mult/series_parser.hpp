#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "mult/error.hpp"
#include "mult/rational_function.hpp"

namespace mult {

/// Malformed series text.  `offset` is the byte offset of the offending
/// token; `expected` lists the tokens that would have been accepted there.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::set<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::set<std::string> expected_;
};

/// Well-formed text whose value is not an expandable rational function.
class SemanticError : public Error {
public:
    SemanticError(const std::string& message, std::size_t begin, std::size_t end, std::string subexpression);

    std::size_t begin() const noexcept { return begin_; }
    std::size_t end() const noexcept { return end_; }
    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::size_t begin_;
    std::size_t end_;
    std::string subexpression_;
};

/// Abstract syntax tree of a series expression.
struct SeriesExpression {
    enum class Kind { literal, indeterminate, negate, add, sub, mul, div, power };

    Kind kind;
    Integer value;       ///< literal value, or the exponent for `power`
    std::unique_ptr<SeriesExpression> lhs;
    std::unique_ptr<SeriesExpression> rhs;
    std::size_t begin = 0;  ///< byte span in the source text
    std::size_t end = 0;
};

/// Recursive-descent parse.  Precedence, tightest first: `^`, unary `-`,
/// `* /`, `+ -`; binary operators are left associative.  Adjacent factors
/// need an explicit `*`.
std::unique_ptr<SeriesExpression> parse_expression(std::string_view text);

/// Evaluates the tree at t = x directly (test oracle for the polynomial path).
Rational evaluate_at(const SeriesExpression& expr, const Rational& x);

/// Folds the tree into one RationalFunction; division nodes whose
/// denominator has zero constant term raise SemanticError.
RationalFunction to_rational_function(const SeriesExpression& expr, std::string_view source);

RationalFunction parse_series(std::string_view text);

}  // namespace mult
