#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mult/length_function.hpp"
#include "mult/multiplicity.hpp"

namespace mult {

/// Where reduce() proved the result nonnegative: every core degree was
/// checked, and each quasipoly tail was scanned out to its root bound.
struct Certificate {
    std::int64_t core_lo = 0;
    std::int64_t core_hi = -1;
    bool pos_tail_certified = true;
    bool neg_tail_certified = true;
};

struct KoszulStep {
    Side regime = Side::positive;
    LengthFunction result;
    Certificate certificate;
};

struct KoszulChain {
    LengthFunction base;
    Side regime = Side::positive;
    int s = 0;
    std::vector<KoszulStep> steps;
    /// Delta-convention multiplicity of index s - k of the k-th function
    /// (k = 0 is the base).  The last entry is the Euler sum, or nullopt when
    /// the vanishing hypothesis it needs fails.
    std::vector<std::optional<Integer>> values;

    const LengthFunction& terminal() const { return steps.empty() ? base : steps.back().result; }
};

/// Koszul object on lengths, assuming z acts injectively in every degree.
/// positive: lambda'(n) = lambda(n+d) - lambda(n).
/// negative: lambda'(n) = lambda(n+1) - lambda(n+d+1).
/// Throws ModelError ("not eventually injective in model") when the
/// difference is negative somewhere.
LengthFunction reduce(const LengthFunction& lf, Side regime, Certificate* certificate = nullptr);

KoszulChain reduce_chain(const LengthFunction& lf, int s, Side regime);

/// (lambda, lambda shifted by d, reduce(lambda)): the lengths along the
/// triangle Y -> Sigma^d Y -> Y//z.
std::array<LengthFunction, 3> koszul_triangle(const LengthFunction& lf);

/// A multiplicity candidate: value at (lambda, s), or nullopt where undefined.
using MultiplicityFn = std::function<std::optional<Integer>(const LengthFunction&, int)>;

struct AxiomFailure {
    std::string fixture;
    int axiom = 0;  ///< 1, 2, 3, or 4 for the uniqueness cross-check
    std::string detail;
};

struct AxiomReport {
    int checks = 0;
    std::vector<AxiomFailure> failures;
    bool passed() const { return failures.empty(); }
};

struct NamedFunction {
    std::string name;
    LengthFunction lf;
};

/// Checks the three multiplicity axioms for `f` on every fixture:
/// (1) f(lambda, s) = 0 for s > cx; (2) f(lambda, 0) is the Euler sum when
/// cx = 0; (3) f(lambda, s) = f(reduce(lambda), s - 1) for s >= cx, s >= 1.
/// Also compares f(lambda, cx) with the value the axioms force, namely the
/// Euler sum at the end of the positive Koszul chain.
AxiomReport axioms_check(const MultiplicityFn& f, const std::vector<NamedFunction>& fixtures);

/// The implemented multiplicity as a MultiplicityFn.
MultiplicityFn implemented_multiplicity(Convention c);

}  // namespace mult
