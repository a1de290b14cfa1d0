#pragma once

#include "json.hpp"

#include "mult/koszul.hpp"
#include "mult/length_function.hpp"
#include "mult/multiplicity.hpp"

namespace mult {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const Polynomial& p);
json to_json(const QuasiPolynomial& qp, Side side);
json to_json(const LengthFunction& lf);
json to_json(const MultiplicityReport& r);
json to_json(const KoszulChain& chain);

/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const json& j);
/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
/// Parses the LengthFunction schema; unknown fields and malformed values
/// raise FormatError, inconsistent models raise ModelError.
LengthFunction length_function_from_json(const json& j);

/// Rejects any key of `j` not in `allowed`.
void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace mult
