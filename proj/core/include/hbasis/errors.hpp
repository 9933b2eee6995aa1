#pragma once

#include <stdexcept>
#include <string>

namespace hbasis {

// Input violates a documented precondition (empty set, bad modulus, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters are well formed but no construction exists for them.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource guard tripped: overflow, size limit, or an exhausted budget.
class GuardTripped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbasis
