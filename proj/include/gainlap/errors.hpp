#pragma once

#include <stdexcept>
#include <string>

namespace gainlap {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files or text.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Bad arguments: dimension mismatches, out-of-range parameters,
// non-unit gains, invalid cycles, unknown edges.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// The input violates a hypothesis of the requested bound
// (disconnected graph, missing triangles, bad bipartition, ...).
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

// Exact search refused because the instance exceeds a hard size cap.
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what) : Error(what) {}
};

// A matrix required to be invertible is (numerically) singular.
class SingularMatrixError : public HypothesisError {
 public:
  explicit SingularMatrixError(const std::string& what) : HypothesisError(what) {}
};

// A generalized-degree recurrence produced a nonpositive denominator;
// the bound is not defined for the requested parameters.
class RecurrenceBreakdownError : public HypothesisError {
 public:
  explicit RecurrenceBreakdownError(const std::string& what) : HypothesisError(what) {}
};

}  // namespace gainlap
