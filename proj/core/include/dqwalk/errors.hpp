#pragma once

#include <stdexcept>
#include <string>

namespace dqw {

// Bad input or an unmet hypothesis of the factorization (CLI exit 2).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A verified identity or tolerance failed at run time. Signals a numerical
// failure or a bug, never bad input (CLI exit 3).
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dqw
