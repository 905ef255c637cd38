#pragma once

#include <stdexcept>
#include <string>

namespace sft {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Elements or definitions from two different group models were combined.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

// Malformed user input: files, names, symbols, shapes.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (wrong model, not
// one-step, missing oracle, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (search nodes, ball vertices) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A configuration does not cover an element an operation needs.
class InsufficientSupport : public Error {
 public:
  using Error::Error;
};

}  // namespace sft
