#ifndef HFK_ERRORS_HPP
#define HFK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hfk {

// Bad input: malformed grid files, invalid permutations, links instead of
// knots, illegal moves.  The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: inexact polynomial division, non-integral
// gradings, grading-calibration violations.  The CLI maps this to exit code 3.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hfk

#endif
