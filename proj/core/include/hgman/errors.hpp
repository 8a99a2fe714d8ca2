#ifndef HGMAN_ERRORS_HPP
#define HGMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgman {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension / rank / slot-index misuse in tensor operations.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A contraction or raise/lower paired two slots of incompatible variance.
class VarianceError : public Error {
public:
  using Error::Error;
};

/// A metric (or other matrix that must be inverted) is singular.
class SingularMetricError : public Error {
public:
  using Error::Error;
};

/// Input data violates a structural requirement (bracket antisymmetry,
/// Jacobi, quaternionic relations, metric compatibility, signature, ...).
/// The message names the violated identity and the first offending indices.
class StructureError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its stated hypotheses.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A relation that is a theorem for valid input failed, indicating a bug
/// rather than bad data.
class InternalError : public Error {
public:
  using Error::Error;
};

/// Malformed configuration or report text.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace hgman

#endif
