#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cmm {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Sample/column layout does not match the schema, or the schema itself is invalid.
class SchemaError : public Error {
public:
  using Error::Error;
};

// A sample whose evidence underflows the log-space floor; carries the dataset
// row index when raised from a dataset-level loop.
class DegenerateInputError : public Error {
public:
  explicit DegenerateInputError(const std::string& msg,
                                std::optional<std::size_t> sample_index = std::nullopt)
      : Error(msg), sample_index(sample_index) {}
  std::optional<std::size_t> sample_index;
};

// Operation would leave the classifier structurally invalid (e.g. a class with
// no components).
class StructuralError : public Error {
public:
  using Error::Error;
};

// A measure has no defined value for the given inputs (single component,
// zero responsibility mass, constant ranks, ...).
class UndefinedMeasureError : public Error {
public:
  using Error::Error;
};

// Invalid distribution parameters (non-SPD matrix, nonpositive beta, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

class EmptyInputError : public Error {
public:
  using Error::Error;
};

// Malformed files: CSV rows, schema declarations, model documents.
class ParseError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace cmm
