#pragma once

// Exact and extended-precision number types used across the toolkit.
// Counts are arbitrary-precision integers: several of the quantities we
// track (recurrence values, census totals) overflow 64 bits well before
// the caller runs out of patience.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>
#include <string>

namespace psit {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Extended-precision floats for the dual-feasibility certificate. The
// binding constraints have near-zero slack, so double is not enough; we
// evaluate at two precision levels and require agreement.
using Real30 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<30>>;
using Real50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input/validation problems: CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};
struct DuplicatePointError : InputError {
    int a, b;
    DuplicatePointError(int a_, int b_)
        : InputError("duplicate points: ids " + std::to_string(a_) + " and " + std::to_string(b_)),
          a(a_), b(b_) {}
};
struct CollinearTripleError : InputError {
    int a, b, c;
    CollinearTripleError(int a_, int b_, int c_)
        : InputError("collinear triple: ids " + std::to_string(a_) + ", " + std::to_string(b_) +
                     ", " + std::to_string(c_)),
          a(a_), b(b_), c(c_) {}
};
struct TooFewPointsError : InputError {
    using InputError::InputError;
};
struct ParseError : InputError {
    int line;
    ParseError(int line_, const std::string& what_)
        : InputError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct BadParameterError : InputError {
    using InputError::InputError;
};
struct InvalidWError : InputError {
    using InputError::InputError;
};
struct NotContainedError : InputError {
    using InputError::InputError;
};
struct DisconnectedGraphError : InputError {
    using InputError::InputError;
};
struct IsolatedVertexError : InputError {
    using InputError::InputError;
};

// Size-cap refusals: CLI maps these to exit code 3.
struct TooLargeError : Error {
    TooLargeError(const std::string& what_, long long n, long long cap)
        : Error(what_ + ": size " + std::to_string(n) + " exceeds cap " + std::to_string(cap)) {}
};

// Invariant failures that indicate a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

inline void internal_check(bool ok, const char* msg) {
    if (!ok) throw InternalError(std::string("internal invariant violated: ") + msg);
}

} // namespace psit
