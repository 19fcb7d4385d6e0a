#pragma once

#include <stdexcept>
#include <string>

namespace exsym {

enum class ErrorKind {
  DimensionMismatch,
  InvalidTriple,
  DegenerateMetric,
  InvalidArgument,
  Parse,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a triple axiom needed by a computation does not hold.
/// `axiom()` names the violated condition, matching the ValidationReport check names.
class InvalidTripleError : public Error {
 public:
  InvalidTripleError(std::string axiom, const std::string& detail)
      : Error(ErrorKind::InvalidTriple, axiom + ": " + detail), axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

class DegenerateMetricError : public Error {
 public:
  DegenerateMetricError(const std::string& what, double determinant)
      : Error(ErrorKind::DegenerateMetric, what), determinant_(determinant) {}

  double determinant() const noexcept { return determinant_; }

 private:
  double determinant_;
};

inline void require_dim(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": expected length " +
                                                  std::to_string(expected) + ", got " +
                                                  std::to_string(got));
  }
}

}  // namespace exsym
