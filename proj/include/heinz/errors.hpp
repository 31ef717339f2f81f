#pragma once

#include <stdexcept>
#include <string>

namespace heinz {

// Series term decay test failed within the max-term budget.
struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& msg) : std::runtime_error(msg) {}
};

// A lower hypergeometric parameter is zero or a negative integer.
struct InvalidLowerParameter : std::invalid_argument {
    explicit InvalidLowerParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

// Interior-only operation called with ||x|| >= 1.
struct PointOnBoundary : std::domain_error {
    explicit PointOnBoundary(const std::string& msg) : std::domain_error(msg) {}
};

// Adaptive refinement could not certify the requested tolerance.
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// Monte Carlo variance guard: ||x|| > 0.95.
struct TooCloseToBoundary : std::domain_error {
    explicit TooCloseToBoundary(const std::string& msg) : std::domain_error(msg) {}
};

struct InsufficientSamples : std::invalid_argument {
    explicit InsufficientSamples(const std::string& msg) : std::invalid_argument(msg) {}
};

// Sampled u(0) exceeded its statistical budget where u(0) = 0 is required.
struct CenterNotZero : std::runtime_error {
    explicit CenterNotZero(const std::string& msg) : std::runtime_error(msg) {}
};

// Closed-form oracle requested outside n in {2,3,4}.
struct UnsupportedDimension : std::invalid_argument {
    explicit UnsupportedDimension(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace heinz
