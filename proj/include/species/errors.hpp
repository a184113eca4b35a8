#pragma once

#include <stdexcept>
#include <string>

namespace species {

// Violated precondition on the shape of an argument (overlapping grounds,
// labels outside a set, malformed families, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds a configured enumeration bound.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Arguments are not related by the required order (e.g. G <= F fails).
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace species
