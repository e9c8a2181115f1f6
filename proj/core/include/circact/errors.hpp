#pragma once

#include <stdexcept>
#include <string>

namespace circact {

// Base of every error the library raises. Inadmissible weight data is never an
// error; it is reported through AdmissibilityReport instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid data: zero or negative weights, ragged points, bad signs.
class InvalidData : public Error {
 public:
  using Error::Error;
};

// A symmetric-polynomial description that cannot be evaluated.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Wrong half-dimension or wrong number of fixed points for an operation.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Out-of-domain scalar argument (e.g. a divisor below 2, a search bound below 2).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// sign_solve found no sign triple with a vanishing unit-class sum.
class NoSolution : public Error {
 public:
  using Error::Error;
};

// sign_solve found two sign triples that are not related by a global flip.
class Ambiguous : public Error {
 public:
  using Error::Error;
};

// recover_params could not fit the data to either HP^2 family.
class NotClassifiable : public Error {
 public:
  using Error::Error;
};

// Admissible data that is not the weight data of any HP^2 action. Either a
// bug or a counterexample; callers must treat it as fatal.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace circact
