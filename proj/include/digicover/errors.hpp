#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digicover {

struct Point;

/// Base for every error raised by the library. Each subclass names one
/// violated precondition so callers (and the CLI) can map it to a reason.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class MissingPointError : public Error {
 public:
  using Error::Error;
};

class InvalidImageError : public Error {
 public:
  using Error::Error;
};

class InvalidMapError : public Error {
 public:
  using Error::Error;
};

class NotAPathError : public Error {
 public:
  NotAPathError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  /// Index i of the first step pair (i, i+1) that is neither equal nor adjacent.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EndpointMismatchError : public Error {
 public:
  using Error::Error;
};

class NotALoopError : public Error {
 public:
  using Error::Error;
};

class DegenerateCycleError : public Error {
 public:
  using Error::Error;
};

class ImageEscapesError : public Error {
 public:
  using Error::Error;
};

class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

class StartNotInFiberError : public Error {
 public:
  using Error::Error;
};

class NotSurjectiveError : public Error {
 public:
  using Error::Error;
};

class NotContinuousError : public Error {
 public:
  using Error::Error;
};

class NotACoveringError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class BadDecompositionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace digicover
