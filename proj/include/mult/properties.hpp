#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mult/length_function.hpp"

namespace mult {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);
Polynomial random_polynomial(Rng& rng, int max_degree);

/// A valid length function with vanishing negative tail: random core values
/// below a random onset, then g_i(t) = sum_k c_k C(t, k) with c_k >= 0, so
/// the tail is integer valued and nondecreasing in t.
LengthFunction random_length_function(Rng& rng, int d, int max_degree);

PropertyResult property_fit_round_trip(Rng& rng, int cases);
PropertyResult property_series_remultiplication(Rng& rng, int cases);
PropertyResult property_shift_alternation(Rng& rng, int cases);
PropertyResult property_vanishing_above_complexity(Rng& rng, int cases);
PropertyResult property_convention_bridge(Rng& rng, int cases);
PropertyResult property_split_additivity(Rng& rng, int cases);
PropertyResult property_difference_operators(Rng& rng, int cases);
PropertyResult property_faulhaber(Rng& rng, int cases);

/// All suites above, each with its own generator seeded from `seed`.
std::vector<PropertyResult> run_properties(std::uint64_t seed, int cases);

}  // namespace mult
