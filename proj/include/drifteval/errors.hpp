#pragma once

#include <stdexcept>
#include <string>

namespace drifteval {

// Base of everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad row, unreadable number, missing column).
class ParseError : public Error {
public:
  using Error::Error;
};

// A value violates its documented range or a dataset invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Duplicate key where uniqueness is required.
class ConflictError : public Error {
public:
  using Error::Error;
};

// A statistic is undefined on this input (zero variance, empty support).
class DegenerateError : public Error {
public:
  using Error::Error;
};

// Design/rank/convergence failures in model fitting.
class ModelError : public Error {
public:
  using Error::Error;
};

}  // namespace drifteval
