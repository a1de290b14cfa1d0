#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mult/json_io.hpp"

namespace mult {

struct Expectation {
    std::string label;
    std::string quantity;
    std::string provenance;  ///< "reference", "derived" or "trivial"
    json spec;               ///< the full expectation object
};

/// One corpus entry.  `source` holds exactly one of: series {expr, probe},
/// length_function {...}, tor {...} (homologically indexed lengths), or
/// tor_sequence [...].
struct Fixture {
    std::string name;
    int d = 2;
    json source;
    std::vector<Expectation> expected;
};

struct CheckResult {
    std::string fixture;
    std::string label;
    std::string quantity;
    std::string provenance;
    bool pass = false;
    std::string expected;
    std::string actual;
};

Fixture fixture_from_json(const json& j);
Fixture load_fixture(const std::string& path);
/// Every *.json under `dir`, sorted by fixture name.
std::vector<Fixture> load_fixture_dir(const std::string& dir);
/// $MULT_FIXTURE_DIR, else the corpus shipped with the source tree.
std::string default_fixture_dir();

/// The length function a fixture describes.  Tor sources are reindexed
/// cohomologically, lambda(n) = tor(-n).
LengthFunction fixture_function(const Fixture& f);

/// Homologically indexed Tor lengths of a tor or tor_sequence fixture.
LengthFunction fixture_tor(const Fixture& f);

/// Evaluates every expectation; unknown quantities or fields fail loudly
/// with FormatError rather than being skipped.
std::vector<CheckResult> check_fixture(const Fixture& f);

}  // namespace mult
