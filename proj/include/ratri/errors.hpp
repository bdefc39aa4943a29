#pragma once

#include <stdexcept>

namespace ratri {

/// Precondition violation; the message names the violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ratri
