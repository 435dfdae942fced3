#pragma once

#include <stdexcept>
#include <string>

namespace coxchain {

// Bad user input: unknown type tag, malformed Coxeter word, out-of-range n.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard tripped (chain count, class count, root count).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed. Never expected on catalog input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxchain
