#include "mult/json_io.hpp"

#include <algorithm>
#include <string>

#include "mult/error.hpp"

namespace mult {

namespace {

std::int64_t int_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw FormatError(where + ": missing field '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw FormatError(where + ": field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

json tail_to_json(const Tail& t, Side side) {
    if (t.is_vanishing()) return json{{"kind", "vanishing"}};
    return to_json(t.qp, side);
}

Tail tail_from_json(const json& j, Side side, int d) {
    const std::string where = side == Side::positive ? "pos_tail" : "neg_tail";
    if (!j.is_object()) throw FormatError(where + " must be an object");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw FormatError(where + ": missing string field 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vanishing") {
        require_keys(j, {"kind"}, where);
        return Tail::vanishing();
    }
    if (kind != "quasipoly") throw FormatError(where + ": kind must be 'vanishing' or 'quasipoly', got '" + kind + "'");
    const char* boundary_key = side == Side::positive ? "valid_from" : "valid_until";
    require_keys(j, {"kind", boundary_key, "polys"}, where);
    QuasiPolynomial qp;
    qp.d = d;
    qp.boundary = int_field(j, boundary_key, where);
    if (!j.contains("polys") || !j.at("polys").is_array()) throw FormatError(where + ": 'polys' must be an array");
    for (const auto& p : j.at("polys")) qp.polys.push_back(polynomial_from_json(p));
    if (static_cast<int>(qp.polys.size()) != d)
        throw FormatError(where + ": expected " + std::to_string(d) + " polynomials, got " +
                          std::to_string(qp.polys.size()));
    return Tail::quasipoly(std::move(qp));
}

}  // namespace

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw FormatError(where + ": unknown field '" + key + "'");
    }
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Integer& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

json to_json(const QuasiPolynomial& qp, Side side) {
    json polys = json::array();
    for (const auto& g : qp.polys) polys.push_back(to_json(g));
    return json{{"kind", "quasipoly"}, {side == Side::positive ? "valid_from" : "valid_until", qp.boundary}, {"polys", polys}};
}

json to_json(const LengthFunction& lf) {
    json values = json::array();
    for (const auto& v : lf.core()) values.push_back(to_json(v));
    return json{{"d", lf.d()},
                {"core", {{"start", lf.start()}, {"values", values}}},
                {"pos_tail", tail_to_json(lf.pos_tail(), Side::positive)},
                {"neg_tail", tail_to_json(lf.neg_tail(), Side::negative)}};
}

json to_json(const MultiplicityReport& r) {
    auto poly_table = [](const QuasiPolynomial& qp) {
        json names = json::array();
        for (const auto& g : qp.polys) names.push_back(g.to_string());
        return names;
    };
    json out;
    out["side"] = to_string(r.side);
    out["s"] = r.s;
    out["cx"] = r.cx;
    out["cx_neg"] = r.cx_neg ? json(*r.cx_neg) : json(nullptr);
    out["polys"] = poly_table(r.polys);
    out["valid_from"] = r.polys.boundary;
    out["polys_neg"] = r.polys_neg ? poly_table(*r.polys_neg) : json(nullptr);
    if (r.polys_neg) out["valid_until"] = r.polys_neg->boundary;
    json leading = json::array();
    for (const auto& a : r.leading) leading.push_back(to_json(a));
    out["leading"] = leading;
    out["e_delta"] = to_json(r.e_delta);
    out["e_coeff"] = to_json(r.e_coeff);
    out["euler"] = r.euler;
    out["stabilization_index"] = r.stabilization_index;
    return out;
}

json to_json(const KoszulChain& chain) {
    json functions = json::array();
    json certificates = json::array();
    json complexities = json::array();
    functions.push_back(to_json(chain.base));
    complexities.push_back(complexity(chain.base, chain.regime));
    for (const auto& step : chain.steps) {
        functions.push_back(to_json(step.result));
        complexities.push_back(complexity(step.result, chain.regime));
        certificates.push_back({{"core_lo", step.certificate.core_lo},
                                {"core_hi", step.certificate.core_hi},
                                {"pos_tail_certified", step.certificate.pos_tail_certified},
                                {"neg_tail_certified", step.certificate.neg_tail_certified}});
    }
    json values = json::array();
    for (const auto& v : chain.values) values.push_back(v ? to_json(*v) : json(nullptr));
    return json{{"regime", to_string(chain.regime)}, {"s", chain.s},           {"functions", functions},
                {"complexity", complexities},        {"values", values},       {"certificates", certificates}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw FormatError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                  [](char c) { return c >= '0' && c <= '9'; }) &&
                        s != "-";
        if (!ok) throw FormatError("expected an integer, got \"" + s + "\"");
        return Integer(s);
    }
    throw FormatError("expected an integer, got " + j.dump());
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("polynomial must be an array of coefficients, got " + j.dump());
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

LengthFunction length_function_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("length function must be a JSON object");
    require_keys(j, {"d", "core", "pos_tail", "neg_tail"}, "length function");
    const auto d64 = int_field(j, "d", "length function");
    if (d64 < 2 || d64 > 1'000'000) throw FormatError("length function: d out of range");
    const int d = static_cast<int>(d64);
    if (!j.contains("core") || !j.at("core").is_object()) throw FormatError("length function: missing object 'core'");
    const json& core = j.at("core");
    require_keys(core, {"start", "values"}, "core");
    const std::int64_t start = int_field(core, "start", "core");
    if (!core.contains("values") || !core.at("values").is_array()) throw FormatError("core: 'values' must be an array");
    std::vector<Integer> values;
    for (const auto& v : core.at("values")) values.push_back(integer_from_json(v));
    auto tail = [&](const char* key, Side side) {
        if (!j.contains(key)) throw FormatError(std::string("length function: missing field '") + key + "'");
        return tail_from_json(j.at(key), side, d);
    };
    return LengthFunction(d, start, std::move(values), tail("pos_tail", Side::positive),
                          tail("neg_tail", Side::negative));
}

}  // namespace mult
