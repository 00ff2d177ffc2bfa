#pragma once

#include <stdexcept>
#include <string>

namespace combdyn {

/// Input outside an operation's domain (non-cyclic permutation, bad rational, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Power iteration hit its iteration cap.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace combdyn
