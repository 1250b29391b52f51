#pragma once

#include <stdexcept>
#include <string>

namespace curvemetrics {

// Degenerate geometry: some |c'| fell below the immersion threshold.
struct NotImmersed : std::runtime_error {
  explicit NotImmersed(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooSmall : std::runtime_error {
  explicit GridTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// Two objects bound to different grid sizes were combined.
struct GridMismatch : std::runtime_error {
  explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotADiffeo : std::runtime_error {
  explicit NotADiffeo(const std::string& what) : std::runtime_error(what) {}
};

struct NotConstantSpeed : std::runtime_error {
  explicit NotConstantSpeed(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCoefficients : std::runtime_error {
  explicit InvalidCoefficients(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveCoefficient : std::runtime_error {
  explicit NonPositiveCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetricPositive : std::runtime_error {
  explicit NotSymmetricPositive(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or option string.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace curvemetrics
