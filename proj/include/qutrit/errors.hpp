#pragma once

#include <stdexcept>
#include <string>

namespace qutrit {

// Every typed failure in the library derives from Error so callers can
// separate data errors from programming errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("element is not divisible by pi") {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ClosureDiverged : public Error {
 public:
  explicit ClosureDiverged(std::size_t size)
      : Error("subgroup closure exceeded " + std::to_string(size) + " elements") {}
};

class WrongClassCount : public Error {
 public:
  explicit WrongClassCount(std::size_t count)
      : Error("expected 108 coset classes, found " + std::to_string(count)) {}
};

class NoDescentStep : public Error {
 public:
  explicit NoDescentStep(int level)
      : Error("no coset representative lowers level " + std::to_string(level)) {}
};

class NotInC : public Error {
 public:
  NotInC() : Error("element is not a monomial matrix with entries in <-xi>") {}
};

class NotInC0 : public Error {
 public:
  NotInC0() : Error("element is not in C0") {}
};

class NotInC3 : public Error {
 public:
  NotInC3() : Error("element is not in C3") {}
};

class BallTooLarge : public Error {
 public:
  explicit BallTooLarge(int r)
      : Error("ball radius " + std::to_string(r) + " exceeds the materialization guard of 3") {}
};

}  // namespace qutrit
