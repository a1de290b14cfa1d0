#pragma once

#include <stdexcept>
#include <string>

namespace mult {

/// Base of every error raised by the library.  The CLI maps these to exit
/// code 1; usage problems are reported separately with exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A length function (or a tail of one) is not a valid model: negative or
/// non-integer values, disagreeing overlap, mismatched generation degree.
class ModelError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (s below complexity, missing
/// vanishing tail, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A rational function whose denominator vanishes at t = 0.
class NotExpandableError : public Error {
public:
    using Error::Error;
};

/// Quasi-polynomial fitting did not stabilize inside the sample window.
class FitError : public Error {
public:
    FitError(const std::string& what, int residue, int best_degree)
        : Error(what), residue_(residue), best_degree_(best_degree) {}

    int residue() const noexcept { return residue_; }
    int best_degree() const noexcept { return best_degree_; }

private:
    int residue_;
    int best_degree_;
};

/// Malformed JSON payloads and fixture files.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace mult
