#pragma once

#include <stdexcept>
#include <string>

namespace jensen {

// Bad structural input: malformed specs, inconsistent dimensions, values out of range.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Geometry violations: points outside the domain, inadmissible smoothing radii.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A quantity could not be evaluated (non-finite sample, singular node); carries location info.
struct EvaluationError : std::runtime_error {
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration that cannot be realized (grid too coarse, unusable parameter combination).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical solver gave up: iteration cap, lost feasibility, inconsistent certificates.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// An otherwise well-formed object failed a precondition of the requested test.
struct TestObjectError : std::runtime_error {
  explicit TestObjectError(const std::string& what) : std::runtime_error(what) {}
};

}
