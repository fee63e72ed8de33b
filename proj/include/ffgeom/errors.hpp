#pragma once

#include <stdexcept>
#include <string>

namespace ffgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient below the known precision floor was needed.
/// `required_floor` is the exponent down to which the input must be known,
/// when it can be determined (otherwise equal to `kUnknownFloor`).
class InsufficientPrecision : public Error {
 public:
  static constexpr int kUnknownFloor = 1 << 30;
  explicit InsufficientPrecision(const std::string& what,
                                 int required_floor = kUnknownFloor)
      : Error(what), required_floor_(required_floor) {}
  int required_floor() const noexcept { return required_floor_; }

 private:
  int required_floor_;
};

/// An oracle grid was too shallow to certify its answer.
class PrecisionTooCoarse : public Error {
 public:
  using Error::Error;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

/// The q^{N+1} enumeration of a periodic cell exceeds the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An oracle enumeration exceeds its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A quantity has no value for this input (e.g. no nonzero determinant).
class Undefined : public Error {
 public:
  using Error::Error;
};

/// Malformed element string or instance file; `field` names the offending entry.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace ffgeom
