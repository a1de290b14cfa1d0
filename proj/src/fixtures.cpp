#include "mult/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mult/error.hpp"
#include "mult/series_parser.hpp"

#ifndef MULT_FIXTURE_DIR_DEFAULT
#define MULT_FIXTURE_DIR_DEFAULT "fixtures"
#endif

namespace mult {

namespace {

const char* const kProvenances[] = {"reference", "derived", "trivial"};

std::string str_field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string()) throw FormatError(where + ": missing string field '" + key + "'");
    return j.at(key).get<std::string>();
}

std::int64_t int_param(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw FormatError(where + ": missing integer field '" + key + "'");
    return j.at(key).get<std::int64_t>();
}

int small_int_param(const json& j, const char* key, const std::string& where) {
    const std::int64_t v = int_param(j, key, where);
    if (v < -100000 || v > 100000) throw FormatError(where + ": field '" + key + "' out of range");
    return static_cast<int>(v);
}

Convention convention_param(const json& j, const std::string& where) {
    const std::string c = str_field(j, "convention", where);
    if (c == "delta") return Convention::delta;
    if (c == "coefficient") return Convention::coefficient;
    throw FormatError(where + ": convention must be 'delta' or 'coefficient', got '" + c + "'");
}

Side side_param(const json& j, const char* key, const std::string& where) {
    const std::string r = str_field(j, key, where);
    if (r == "positive") return Side::positive;
    if (r == "negative") return Side::negative;
    throw FormatError(where + ": " + key + " must be 'positive' or 'negative', got '" + r + "'");
}

json poly_names(const QuasiPolynomial& qp) {
    json names = json::array();
    for (const auto& g : qp.polys) names.push_back(g.to_string());
    return names;
}

json optional_integer(const std::optional<Integer>& v) { return v ? to_json(*v) : json(nullptr); }

// Compares canonical JSON renderings; integers and integer strings agree.
bool same_value(const json& expected, const json& actual) {
    if (expected == actual) return true;
    if (expected.is_array() && actual.is_array()) {
        if (expected.size() != actual.size()) return false;
        for (std::size_t k = 0; k < expected.size(); ++k)
            if (!same_value(expected[k], actual[k])) return false;
        return true;
    }
    const bool numeric_e = expected.is_number_integer() || expected.is_string();
    const bool numeric_a = actual.is_number_integer() || actual.is_string();
    if (numeric_e && numeric_a) {
        try {
            return rational_from_json(expected) == rational_from_json(actual);
        } catch (const FormatError&) {
            return false;
        }
    }
    return false;
}

}  // namespace

LengthFunction fixture_tor(const Fixture& f) {
    if (f.source.contains("tor")) return length_function_from_json(f.source.at("tor"));
    if (f.source.contains("tor_sequence")) {
        std::vector<Integer> values;
        for (const auto& v : f.source.at("tor_sequence")) values.push_back(integer_from_json(v));
        return LengthFunction::finite(2, 0, std::move(values));
    }
    throw FormatError(f.name + ": theta and serre need a 'tor' or 'tor_sequence' source");
}

namespace {

struct Evaluation {
    json actual;
    bool pass;
};

Evaluation evaluate_expectation(const Fixture& f, const LengthFunction& lf, const Expectation& e) {
    const std::string where = f.name + "." + e.label;
    const json& j = e.spec;
    const json& want = j.at("value");
    auto plain = [&](json actual) { return Evaluation{actual, same_value(want, actual)}; };
    const std::string& q = e.quantity;

    if (q == "cx" || q == "cx_neg") {
        require_keys(j, {"quantity", "value", "provenance"}, where);
        return plain(complexity(lf, q == "cx" ? Side::positive : Side::negative));
    }
    if (q == "polys" || q == "polys_neg") {
        const Side side = q == "polys" ? Side::positive : Side::negative;
        const char* boundary_key = side == Side::positive ? "valid_from" : "valid_until";
        require_keys(j, {"quantity", "value", "provenance", boundary_key}, where);
        if (lf.tail(side).is_vanishing()) return plain("vanishing");
        const QuasiPolynomial& qp = lf.tail(side).qp;
        json actual = poly_names(qp);
        bool pass = same_value(want, actual);
        if (j.contains(boundary_key)) {
            const std::int64_t b = int_param(j, boundary_key, where);
            pass = pass && b == qp.boundary;
            actual = json{{"polys", actual}, {boundary_key, qp.boundary}};
        }
        return Evaluation{actual, pass};
    }
    if (q == "leading") {
        require_keys(j, {"quantity", "value", "provenance", "s", "side"}, where);
        const int s = small_int_param(j, "s", where);
        const Side side = j.contains("side") ? side_param(j, "side", where) : Side::positive;
        json actual = json::array();
        for (const auto& a : lf.side_polys(side).coefficients_of_degree(s - 1)) actual.push_back(to_json(a));
        return plain(actual);
    }
    if (q == "evaluate" || q == "herbrand") {
        require_keys(j, {"quantity", "value", "provenance", "n"}, where);
        const std::int64_t n = int_param(j, "n", where);
        return plain(to_json(q == "evaluate" ? lf.evaluate(n) : herbrand(lf, n)));
    }
    if (q == "e" || q == "e_neg") {
        require_keys(j, {"quantity", "value", "provenance", "s", "convention", "shift"}, where);
        const int s = small_int_param(j, "s", where);
        const Convention c = convention_param(j, where);
        const LengthFunction target = j.contains("shift") ? shift(lf, int_param(j, "shift", where)) : lf;
        return plain(to_json(multiplicity(target, s, c, q == "e" ? Side::positive : Side::negative)));
    }
    if (q == "euler") {
        require_keys(j, {"quantity", "value", "provenance", "shift"}, where);
        const LengthFunction target = j.contains("shift") ? shift(lf, int_param(j, "shift", where)) : lf;
        return plain(to_json(euler_characteristic(target)));
    }
    if (q == "limit") {
        require_keys(j, {"quantity", "value", "provenance", "s", "n", "constant", "tolerance"}, where);
        const int s = small_int_param(j, "s", where);
        const std::int64_t n = int_param(j, "n", where);
        const std::string c = str_field(j, "constant", where);
        if (c != "paper" && c != "corrected")
            throw FormatError(where + ": constant must be 'paper' or 'corrected', got '" + c + "'");
        const Rational tol = rational_from_json(j.at("tolerance"));
        const Rational est = limit_estimate(lf, s, n, c == "paper" ? LimitConstant::paper : LimitConstant::corrected);
        const Rational err = abs(est - rational_from_json(want));
        return Evaluation{json{{"estimate", est.to_double()}, {"error", err.to_double()}}, err < tol};
    }
    if (q == "chain") {
        require_keys(j, {"quantity", "value", "provenance", "s", "regime"}, where);
        const int s = small_int_param(j, "s", where);
        const Side regime = side_param(j, "regime", where);
        const KoszulChain chain = reduce_chain(lf, s, regime);
        json values = json::array();
        for (const auto& v : chain.values) values.push_back(optional_integer(v));
        // Complexity must drop by exactly one per step until it reaches zero.
        bool drops = true;
        int prev = complexity(chain.base, regime);
        for (const auto& step : chain.steps) {
            const int now = complexity(step.result, regime);
            drops = drops && now == std::max(prev - 1, 0);
            prev = now;
        }
        return Evaluation{values, drops && same_value(want, values)};
    }
    if (q == "theta") {
        require_keys(j, {"quantity", "value", "provenance"}, where);
        return plain(to_json(theta_invariant(fixture_tor(f))));
    }
    if (q == "serre") {
        require_keys(j, {"quantity", "value", "provenance"}, where);
        const LengthFunction tor = fixture_tor(f);
        if (!tor.has_finite_support() || tor.start() < 0)
            throw FormatError(where + ": serre needs a finite Tor sequence starting at degree 0");
        std::vector<Integer> seq(static_cast<std::size_t>(tor.start()), Integer(0));
        seq.insert(seq.end(), tor.core().begin(), tor.core().end());
        return plain(to_json(serre_intersection(seq)));
    }
    if (q == "window") {
        require_keys(j, {"quantity", "value", "provenance", "m0", "parity"}, where);
        const std::int64_t m0 = int_param(j, "m0", where);
        const std::string p = str_field(j, "parity", where);
        if (p != "even" && p != "odd") throw FormatError(where + ": parity must be 'even' or 'odd'");
        const WindowResult r = vanishing_window_check(lf, m0, p == "even" ? Parity::even : Parity::odd);
        std::string actual = to_string(r.kind);
        if (r.kind == WindowResult::Kind::violated) actual += "(" + std::to_string(r.violation) + ")";
        return plain(actual);
    }
    if (q == "axioms") {
        require_keys(j, {"quantity", "value", "provenance", "convention"}, where);
        const AxiomReport r = axioms_check(implemented_multiplicity(convention_param(j, where)), {{f.name, lf}});
        json failures = json::array();
        for (const auto& fail : r.failures) failures.push_back("axiom " + std::to_string(fail.axiom) + ": " + fail.detail);
        const bool passed = r.passed();
        return Evaluation{json{{"passed", passed}, {"failures", failures}}, want.is_boolean() && want.get<bool>() == passed};
    }
    if (q == "triangle") {
        require_keys(j, {"quantity", "value", "provenance"}, where);
        const auto tri = koszul_triangle(lf);
        int s = 0;
        for (const auto& x : tri) s = std::max(s, complexity(x, Side::positive));
        const Integer e1 = multiplicity(tri[0], s, Convention::delta);
        const Integer e2 = multiplicity(tri[1], s, Convention::delta);
        const Integer e3 = multiplicity(tri[2], s, Convention::delta);
        const bool additive = e2 == e1 + e3;
        return Evaluation{json{{"s", s}, {"e1", to_json(e1)}, {"e2", to_json(e2)}, {"e3", to_json(e3)}},
                          want.is_boolean() && want.get<bool>() == additive};
    }
    throw FormatError(where + ": unknown quantity '" + q + "'");
}

}  // namespace

Fixture fixture_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("fixture must be a JSON object");
    require_keys(j, {"name", "d", "source", "expected"}, "fixture");
    Fixture f;
    f.name = str_field(j, "name", "fixture");
    f.d = small_int_param(j, "d", f.name);
    if (!j.contains("source") || !j.at("source").is_object() || j.at("source").size() != 1)
        throw FormatError(f.name + ": 'source' must be an object with exactly one entry");
    f.source = j.at("source");
    require_keys(f.source, {"series", "length_function", "tor", "tor_sequence"}, f.name + ".source");
    if (!j.contains("expected") || !j.at("expected").is_object())
        throw FormatError(f.name + ": 'expected' must be an object");
    for (const auto& [label, spec] : j.at("expected").items()) {
        const std::string where = f.name + "." + label;
        if (!spec.is_object()) throw FormatError(where + ": expectation must be an object");
        Expectation e;
        e.label = label;
        e.quantity = str_field(spec, "quantity", where);
        e.provenance = str_field(spec, "provenance", where);
        if (std::none_of(std::begin(kProvenances), std::end(kProvenances),
                         [&](const char* p) { return e.provenance == p; }))
            throw FormatError(where + ": provenance must be reference, derived or trivial");
        if (!spec.contains("value")) throw FormatError(where + ": missing field 'value'");
        e.spec = spec;
        f.expected.push_back(std::move(e));
    }
    return f;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open fixture " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
    return fixture_from_json(j);
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw FormatError("fixture directory not found: " + dir);
    std::vector<Fixture> out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            out.push_back(load_fixture(entry.path().string()));
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("MULT_FIXTURE_DIR"); env && *env) return env;
    return MULT_FIXTURE_DIR_DEFAULT;
}

LengthFunction fixture_function(const Fixture& f) {
    LengthFunction lf = LengthFunction::zero(f.d);
    if (f.source.contains("series")) {
        const json& s = f.source.at("series");
        require_keys(s, {"expr", "probe"}, f.name + ".source.series");
        lf = from_series(parse_series(str_field(s, "expr", f.name)), f.d, int_param(s, "probe", f.name));
    } else if (f.source.contains("length_function")) {
        lf = length_function_from_json(f.source.at("length_function"));
    } else {
        lf = reflect(fixture_tor(f));
    }
    if (lf.d() != f.d)
        throw FormatError(f.name + ": fixture d=" + std::to_string(f.d) + " but source has d=" + std::to_string(lf.d()));
    return lf;
}

std::vector<CheckResult> check_fixture(const Fixture& f) {
    std::vector<CheckResult> out;
    std::optional<LengthFunction> lf;
    std::string load_error;
    try {
        lf = fixture_function(f);
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        load_error = e.what();
    }
    for (const auto& e : f.expected) {
        CheckResult r{f.name, e.label, e.quantity, e.provenance, false, e.spec.at("value").dump(), ""};
        if (!lf) {
            r.actual = "error: " + load_error;
        } else {
            try {
                const Evaluation ev = evaluate_expectation(f, *lf, e);
                r.pass = ev.pass;
                r.actual = ev.actual.dump();
            } catch (const FormatError&) {
                throw;
            } catch (const Error& err) {
                r.actual = std::string("error: ") + err.what();
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mult
