// Command-line front end: series expansion, fitting, multiplicities, Koszul
// chains, the limit estimator, theta/Serre and corpus verification.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mult/error.hpp"
#include "mult/fixtures.hpp"
#include "mult/json_io.hpp"
#include "mult/koszul.hpp"
#include "mult/multiplicity.hpp"
#include "mult/properties.hpp"
#include "mult/series_parser.hpp"

namespace {

using namespace mult;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string expr;
    int d = 2;
    std::int64_t probe = 200;
    std::string input;
    std::string fixture;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--expr", in.expr, "Hilbert series expression in t");
    cmd->add_option("--d", in.d, "generation degree (even)")->capture_default_str();
    cmd->add_option("--probe", in.probe, "number of coefficients to expand before fitting")->capture_default_str();
    cmd->add_option("--input", in.input, "LengthFunction JSON file");
    cmd->add_option("--fixture", in.fixture, "fixture name from the corpus");
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw FormatError("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

Fixture find_fixture(const std::string& name) {
    for (auto& f : load_fixture_dir(default_fixture_dir()))
        if (f.name == name) return f;
    throw UsageError("unknown fixture '" + name + "'");
}

void require_one_source(const InputOptions& in) {
    const int given = !in.expr.empty() + !in.input.empty() + !in.fixture.empty();
    if (given != 1) throw UsageError("give exactly one of --expr, --input, --fixture");
}

LengthFunction load_input(const InputOptions& in) {
    require_one_source(in);
    if (!in.expr.empty()) return from_series(parse_series(in.expr), in.d, in.probe);
    if (!in.input.empty()) return length_function_from_json(read_json_file(in.input));
    return fixture_function(find_fixture(in.fixture));
}

// Homologically indexed input for theta.
LengthFunction load_tor(const InputOptions& in) {
    require_one_source(in);
    if (!in.expr.empty()) throw UsageError("theta takes --input or --fixture");
    if (!in.input.empty()) return length_function_from_json(read_json_file(in.input));
    return fixture_tor(find_fixture(in.fixture));
}

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(12) << r.to_double();
    return os.str();
}

void print_polys(std::ostream& os, const char* name, const Tail& t, Side side) {
    if (t.is_vanishing()) {
        os << name << ": vanishing\n";
        return;
    }
    os << name << ": " << (side == Side::positive ? "valid_from " : "valid_until ") << t.qp.boundary << "\n";
    for (std::size_t i = 0; i < t.qp.polys.size(); ++i)
        os << "  g" << (side == Side::positive ? "" : "-") << "_" << i << "(t) = " << t.qp.polys[i].to_string() << "\n";
}

void print_function(std::ostream& os, const LengthFunction& lf) {
    os << "d: " << lf.d() << "\n";
    os << "core: [" << lf.start() << ", " << lf.end() << "]";
    for (const auto& v : lf.core()) os << " " << v.get_str();
    os << "\n";
    print_polys(os, "pos_tail", lf.pos_tail(), Side::positive);
    print_polys(os, "neg_tail", lf.neg_tail(), Side::negative);
}

std::vector<Convention> conventions(const std::string& which) {
    if (which == "delta") return {Convention::delta};
    if (which == "coefficient") return {Convention::coefficient};
    return {Convention::delta, Convention::coefficient};
}

std::vector<LimitConstant> constants(const std::string& which) {
    if (which == "paper") return {LimitConstant::paper};
    if (which == "corrected") return {LimitConstant::corrected};
    return {LimitConstant::paper, LimitConstant::corrected};
}

const char* constant_name(LimitConstant c) { return c == LimitConstant::paper ? "paper" : "corrected"; }

int cmd_report(const LengthFunction& lf, Side side, int s, const std::string& convention, std::int64_t limit_n,
               bool as_json) {
    const MultiplicityReport r = side == Side::positive ? multiplicity_pos(lf, s) : multiplicity_neg(lf, s);
    const auto convs = conventions(convention);
    std::vector<std::pair<LimitConstant, Rational>> limits;
    if (limit_n > 0) {
        if (side != Side::positive) throw UsageError("--limit-n applies to the positive side only");
        for (LimitConstant c : constants("both")) limits.emplace_back(c, limit_estimate(lf, s, limit_n, c));
    }
    if (as_json) {
        json out = to_json(r);
        if (convs.size() == 1) out.erase(convs[0] == Convention::delta ? "e_coeff" : "e_delta");
        if (!limits.empty()) {
            json lim;
            lim["n"] = limit_n;
            for (const auto& [c, v] : limits) lim[constant_name(c)] = to_json(v);
            out["limit"] = lim;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const char* sym = side == Side::positive ? "e^" : "e_";
    std::cout << "side: " << to_string(side) << "\n";
    std::cout << "cx: " << r.cx << "\n";
    std::cout << "cx_neg: " << (r.cx_neg ? std::to_string(*r.cx_neg) : "-") << "\n";
    print_polys(std::cout, "pos_tail", lf.pos_tail(), Side::positive);
    print_polys(std::cout, "neg_tail", lf.neg_tail(), Side::negative);
    if (!r.leading.empty()) {
        std::cout << "leading (t^" << s - 1 << "):";
        for (const auto& a : r.leading) std::cout << " " << a.to_string();
        std::cout << "\n";
    }
    for (Convention c : convs)
        std::cout << sym << s << " [" << to_string(c) << "]: " << r.value(c).get_str() << "\n";
    if (r.euler)
        std::cout << "euler sum: yes\n";
    else
        std::cout << "stabilization_index: " << r.stabilization_index << "\n";
    for (const auto& [c, v] : limits)
        std::cout << "limit n=" << limit_n << " [" << constant_name(c) << "]: " << decimal(v) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, bool as_json) {
    int total = 0;
    int failed = 0;
    json out = json::object();
    if (suite == "paper" || suite == "all") {
        json rows = json::array();
        for (const auto& f : load_fixture_dir(default_fixture_dir())) {
            for (const auto& r : check_fixture(f)) {
                ++total;
                failed += r.pass ? 0 : 1;
                if (as_json) {
                    rows.push_back({{"fixture", r.fixture},
                                    {"label", r.label},
                                    {"quantity", r.quantity},
                                    {"provenance", r.provenance},
                                    {"pass", r.pass},
                                    {"expected", r.expected},
                                    {"actual", r.actual}});
                } else {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.fixture << " " << r.label << " [" << r.provenance
                              << "]";
                    if (!r.pass) std::cout << " expected " << r.expected << " got " << r.actual;
                    std::cout << "\n";
                }
            }
        }
        out["fixtures"] = rows;
    }
    if (suite == "properties" || suite == "all") {
        json rows = json::array();
        for (const auto& p : run_properties(seed, cases)) {
            ++total;
            failed += p.passed() ? 0 : 1;
            if (as_json) {
                rows.push_back({{"property", p.name},
                                {"cases", p.cases},
                                {"failures", p.failures},
                                {"first_failure", p.first_failure}});
            } else {
                std::cout << (p.passed() ? "PASS " : "FAIL ") << "property " << p.name << " (" << p.cases
                          << " cases, seed " << seed << ")";
                if (!p.passed()) std::cout << " " << p.failures << " failures; " << p.first_failure;
                std::cout << "\n";
            }
        }
        out["properties"] = rows;
    }
    if (as_json) {
        out["total"] = total;
        out["failed"] = failed;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << total - failed << "/" << total << " passed\n";
    }
    return failed == 0 ? 0 : kExitFailure;
}

int run(int argc, char** argv) {
    CLI::App app{"Multiplicities of graded length functions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* expand = app.add_subcommand("expand", "power-series coefficients of a rational function");
    std::string expand_expr;
    std::int64_t expand_n = 0;
    expand->add_option("--expr", expand_expr, "series expression in t")->required();
    expand->add_option("--n", expand_n, "last coefficient index")->required()->check(CLI::NonNegativeNumber);

    InputOptions in;
    auto* fit = app.add_subcommand("fit", "fit the Hilbert quasi-polynomial");
    add_input_options(fit, in);

    auto* cx = app.add_subcommand("cx", "complexity on both sides");
    add_input_options(cx, in);

    int s = 1;
    std::string convention = "both";
    std::int64_t limit_n = 0;
    auto* e_pos = app.add_subcommand("e", "multiplicity e^s");
    auto* e_neg = app.add_subcommand("e-neg", "negative multiplicity e_s");
    for (auto* cmd : {e_pos, e_neg}) {
        add_input_options(cmd, in);
        cmd->add_option("--s", s, "index s")->required();
        cmd->add_option("--convention", convention, "delta, coefficient or both")
            ->check(CLI::IsMember({"delta", "coefficient", "both"}))
            ->capture_default_str();
    }
    e_pos->add_option("--limit-n", limit_n, "also print the limit estimator at this n")->check(CLI::PositiveNumber);

    auto* koszul = app.add_subcommand("koszul", "iterated Koszul reduction chain");
    add_input_options(koszul, in);
    std::string regime = "positive";
    koszul->add_option("--s", s, "number of reductions")->required();
    koszul->add_option("--regime", regime, "positive or negative")
        ->check(CLI::IsMember({"positive", "negative"}))
        ->capture_default_str();

    auto* limit = app.add_subcommand("limit", "limit estimator for e^s");
    add_input_options(limit, in);
    std::int64_t n = 0;
    std::string constant = "both";
    limit->add_option("--s", s, "index s")->required();
    limit->add_option("--n", n, "partial-sum length")->required()->check(CLI::PositiveNumber);
    limit->add_option("--constant", constant, "paper, corrected or both")
        ->check(CLI::IsMember({"paper", "corrected", "both"}))
        ->capture_default_str();

    auto* theta = app.add_subcommand("theta", "theta invariant from homologically indexed Tor lengths");
    add_input_options(theta, in);

    auto* serre = app.add_subcommand("serre", "alternating sum of Tor lengths");
    std::vector<std::string> tor_values;
    serre->add_option("--tor", tor_values, "lengths of Tor_0, Tor_1, ...")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "check the fixture corpus and/or property suites");
    std::string suite = "all";
    std::uint64_t seed = 1;
    int cases = 200;
    verify->add_option("--suite", suite, "paper, properties or all")
        ->check(CLI::IsMember({"paper", "properties", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--cases", cases, "cases per property")->check(CLI::PositiveNumber)->capture_default_str();

    for (auto* cmd : app.get_subcommands({})) cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (expand->parsed()) {
        const auto coeffs = series_coefficients(parse_series(expand_expr), expand_n);
        if (as_json) {
            json arr = json::array();
            for (const auto& c : coeffs) arr.push_back(to_json(c));
            std::cout << arr.dump() << "\n";
        } else {
            for (std::size_t k = 0; k < coeffs.size(); ++k) std::cout << (k ? " " : "") << coeffs[k].to_string();
            std::cout << "\n";
        }
        return 0;
    }
    if (fit->parsed()) {
        const LengthFunction lf = load_input(in);
        if (as_json)
            std::cout << to_json(lf).dump(2) << "\n";
        else
            print_function(std::cout, lf);
        return 0;
    }
    if (cx->parsed()) {
        const LengthFunction lf = load_input(in);
        const int pos = complexity(lf, Side::positive);
        const int neg = complexity(lf, Side::negative);
        if (as_json)
            std::cout << json{{"cx", pos}, {"cx_neg", neg}}.dump() << "\n";
        else
            std::cout << "cx: " << pos << "\ncx_neg: " << neg << "\n";
        return 0;
    }
    if (e_pos->parsed()) return cmd_report(load_input(in), Side::positive, s, convention, limit_n, as_json);
    if (e_neg->parsed()) return cmd_report(load_input(in), Side::negative, s, convention, 0, as_json);
    if (koszul->parsed()) {
        const KoszulChain chain = reduce_chain(load_input(in), s, regime == "positive" ? Side::positive : Side::negative);
        if (as_json) {
            std::cout << to_json(chain).dump(2) << "\n";
            return 0;
        }
        const Side side = chain.regime;
        for (std::size_t k = 0; k < chain.values.size(); ++k) {
            const LengthFunction& f = k == 0 ? chain.base : chain.steps[k - 1].result;
            std::cout << "step " << k << ": cx" << (side == Side::positive ? "" : "_neg") << "=" << complexity(f, side)
                      << " core=[" << f.start() << ", " << f.end() << "] " << (side == Side::positive ? "e^" : "e_")
                      << (chain.s - static_cast<int>(k)) << "="
                      << (chain.values[k] ? chain.values[k]->get_str() : std::string("undefined")) << "\n";
        }
        return 0;
    }
    if (limit->parsed()) {
        const LengthFunction lf = load_input(in);
        json out;
        for (LimitConstant c : constants(constant)) {
            const Rational v = limit_estimate(lf, s, n, c);
            if (as_json)
                out[constant_name(c)] = to_json(v);
            else
                std::cout << constant_name(c) << ": " << decimal(v) << "\n";
        }
        if (as_json) std::cout << out.dump() << "\n";
        return 0;
    }
    if (theta->parsed()) {
        const Integer v = theta_invariant(load_tor(in));
        if (as_json)
            std::cout << json{{"theta", to_json(v)}}.dump() << "\n";
        else
            std::cout << "theta: " << v.get_str() << "\n";
        return 0;
    }
    if (serre->parsed()) {
        std::vector<Integer> tor;
        for (const auto& t : tor_values) tor.push_back(integer_from_json(json(t)));
        const Integer v = serre_intersection(tor);
        if (as_json)
            std::cout << json{{"serre", to_json(v)}}.dump() << "\n";
        else
            std::cout << "serre: " << v.get_str() << "\n";
        return 0;
    }
    return cmd_verify(suite, seed, cases, as_json);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mult::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
