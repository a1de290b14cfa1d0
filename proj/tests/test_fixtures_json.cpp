#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mult/error.hpp"
#include "mult/fixtures.hpp"
#include "mult/series_parser.hpp"

using namespace mult;

namespace {

json two_sided() {
    return json::parse(R"({
      "d": 2,
      "core": {"start": -2, "values": [3, 0, 3, 0, 3, 0]},
      "pos_tail": {"kind": "quasipoly", "valid_from": 0, "polys": [["3"], []]},
      "neg_tail": {"kind": "quasipoly", "valid_until": 1, "polys": [["3"], []]}
    })");
}

}  // namespace

TEST_CASE("scalar encodings") {
    CHECK(to_json(Rational(-1, 2)) == json("-1/2"));
    CHECK(to_json(Rational(4)) == json("4"));
    CHECK(to_json(Integer(7)) == json(7));
    const Integer huge("123456789012345678901234567890");
    CHECK(to_json(huge) == json("123456789012345678901234567890"));
    CHECK(integer_from_json(to_json(huge)) == huge);
    CHECK(rational_from_json(json("3/9")) == Rational(1, 3));
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(json(1.5)), FormatError);
    CHECK(to_json(Polynomial({1, 4})) == json::parse(R"(["1", "4"])"));
    CHECK(polynomial_from_json(json::parse(R"(["1", "1/2", "0"])")) == Polynomial({1, Rational(1, 2)}));
}

TEST_CASE("length function round trip") {
    const LengthFunction lf = length_function_from_json(two_sided());
    for (std::int64_t n = -20; n <= 20; ++n) CHECK(lf(n) == (n % 2 == 0 ? 3 : 0));
    const LengthFunction back = length_function_from_json(to_json(lf));
    CHECK(back == lf);

    const LengthFunction jst = from_series(parse_series("t^2/(1-t^2)^2"), 2, 60);
    CHECK(length_function_from_json(to_json(jst)) == jst);
    CHECK(to_json(jst)["pos_tail"]["valid_from"].is_number_integer());
    CHECK(to_json(jst)["neg_tail"] == json::parse(R"({"kind": "vanishing"})"));
}

TEST_CASE("length function schema errors") {
    json j = two_sided();
    j["colour"] = "blue";
    CHECK_THROWS_AS(length_function_from_json(j), FormatError);

    j = two_sided();
    j["pos_tail"]["valid_until"] = 3;
    CHECK_THROWS_AS(length_function_from_json(j), FormatError);

    j = two_sided();
    j["core"]["values"][1] = "x";
    CHECK_THROWS_AS(length_function_from_json(j), FormatError);

    j = two_sided();
    j["core"]["values"][1] = 5;  // disagrees with the tails
    CHECK_THROWS_AS(length_function_from_json(j), ModelError);

    j = two_sided();
    j["d"] = 3;
    CHECK_THROWS_AS(length_function_from_json(j), Error);

    j = two_sided();
    j.erase("neg_tail");
    CHECK_THROWS_AS(length_function_from_json(j), FormatError);
}

TEST_CASE("multiplicity report payload") {
    const LengthFunction jst = from_series(parse_series("t^2/(1-t^2)^2"), 2, 60);
    const json r = to_json(multiplicity_pos(jst, 2));
    CHECK(r["s"] == 2);
    CHECK(r["cx"] == 2);
    CHECK(r["e_delta"] == 1);
    CHECK(r["e_coeff"] == 2);
    CHECK(r["leading"] == json::parse(R"(["1", "0"])"));
}

TEST_CASE("fixture expectations") {
    const json good = json::parse(R"({
      "name": "inline",
      "d": 2,
      "source": {"series": {"expr": "t^2/(1-t^2)^2", "probe": 60}},
      "expected": {
        "cx": {"quantity": "cx", "value": 2, "provenance": "reference"},
        "e2": {"quantity": "e", "s": 2, "convention": "coefficient", "value": 2, "provenance": "reference"},
        "e2d": {"quantity": "e", "s": 2, "convention": "delta", "value": 1, "provenance": "derived"},
        "h": {"quantity": "herbrand", "n": 6, "value": 3, "provenance": "derived"},
        "wrong": {"quantity": "e", "s": 2, "convention": "delta", "value": 5, "provenance": "derived"}
      }
    })");
    const Fixture f = fixture_from_json(good);
    const auto results = check_fixture(f);
    REQUIRE(results.size() == 5);
    for (const auto& r : results) CHECK(r.pass == (r.label != "wrong"));

    json bad = good;
    bad["expected"]["cx"]["extra"] = 1;
    CHECK_THROWS_AS(check_fixture(fixture_from_json(bad)), FormatError);

    bad = good;
    bad["expected"]["cx"]["quantity"] = "volume";
    CHECK_THROWS_AS(check_fixture(fixture_from_json(bad)), FormatError);

    bad = good;
    bad["expected"]["cx"]["provenance"] = "folklore";
    CHECK_THROWS_AS(fixture_from_json(bad), FormatError);

    bad = good;
    bad["source"]["series"]["expr"] = "1/t";
    for (const auto& r : check_fixture(fixture_from_json(bad))) {
        CHECK_FALSE(r.pass);
        CHECK(r.actual.rfind("error: ", 0) == 0);
    }
}

TEST_CASE("shipped corpus") {
    const auto corpus = load_fixture_dir(default_fixture_dir());
    REQUIRE(corpus.size() >= 20);
    for (std::size_t k = 1; k < corpus.size(); ++k) CHECK(corpus[k - 1].name < corpus[k].name);
    int checks = 0;
    for (const auto& f : corpus) {
        for (const auto& r : check_fixture(f)) {
            ++checks;
            INFO(r.fixture << " " << r.label << ": expected " << r.expected << ", got " << r.actual);
            CHECK(r.pass);
        }
    }
    CHECK(checks > 100);
}
