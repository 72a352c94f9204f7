#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line/column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A configured size cap (tensor dimension, symmetric-function degree) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Finite evidence was insufficient to reach a conclusion.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes disagreed. Indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A certificate could not be issued (integrality, root location, positivity).
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Rejection of a candidate R-matrix. The witness lists 1-based basis indices:
/// a pair (i, j) for the quadratic relation, a triple (i, j, k) for the braid equation.
class ValidationError : public Error {
 public:
  enum class Kind { shape, hecke, braid };
  ValidationError(Kind kind, std::vector<int> witness, const std::string& what);
  Kind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
};

}  // namespace hecke
