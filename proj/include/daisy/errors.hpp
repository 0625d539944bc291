#pragma once

#include <stdexcept>
#include <string>

namespace daisy {

/// Malformed sets, patterns, permutations, files. CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An instance exceeds the desk-scale limits. CLI exit code 4.
class ResourceRefusal : public std::runtime_error {
 public:
  explicit ResourceRefusal(const std::string& what) : std::runtime_error(what) {}
};

/// A computed value contradicts a closed-form bound. CLI exit code 3.
class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A constraint that no item can satisfy (an empty allowed set).
class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace daisy
