#pragma once

#include <stdexcept>
#include <string>

namespace ladderprod {

/// Malformed input or violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value contradicts a proven identity, e.g. two routes to the
/// width disagree or an indicator multiplicity exceeds one. Always a bug.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input lies outside the regime an algorithm supports.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ladderprod
