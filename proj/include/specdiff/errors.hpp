#pragma once

#include <stdexcept>
#include <string>

namespace specdiff {

/// Sample locations do not match any valid grid of the requested kind.
/// The message always shows a correctly sampled example grid.
class invalid_sampling : public std::invalid_argument {
public:
  explicit invalid_sampling(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A result that should be real carries a non-negligible imaginary part.
class numeric_contamination : public std::runtime_error {
public:
  explicit numeric_contamination(const std::string& msg) : std::runtime_error(msg) {}
};

/// Derivative order above the symbolic endpoint engine's cap.
class unsupported_order : public std::invalid_argument {
public:
  explicit unsupported_order(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
class internal_logic_error : public std::logic_error {
public:
  explicit internal_logic_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace specdiff
