#pragma once

#include <stdexcept>
#include <string>

namespace balance {

// Malformed or inconsistent input data (edge lists, seed files, counts).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration or command-line values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation was asked to enumerate more than its cap allows.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balance
