#pragma once

#include <stdexcept>
#include <string>

namespace segcalc {

// Precondition violations: non-coprime inputs, w = 1 passed to a lemma that
// needs w > 1, unequal multisegment lengths, mixed bases in a chain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A parameter tuple that the counting formulas forbid (non-integral t, a
// shift that does not divide [k : k0], ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the uniqueness replay when a second partner w' survives.
class CounterexampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotImplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace segcalc
