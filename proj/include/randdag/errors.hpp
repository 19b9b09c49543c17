#ifndef RANDDAG_ERRORS_HPP
#define RANDDAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace randdag {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A query lies beyond the bounds a table was built for.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// A sampler was asked to draw from a class that contains no object.
class EmptyClassError : public Error {
 public:
  using Error::Error;
};

/// A configured memory budget was exceeded during a table build.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An input value violates the invariants of its type.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the transition-matrix validity check where it is required.
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

/// A decomposition step does not match the graph it is applied to.
class InconsistentStepError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumerator was asked for a size beyond its hard cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A statistical test was called with too few samples.
class UnderSampledError : public Error {
 public:
  using Error::Error;
};

/// A cache file is unreadable, malformed, or does not match the request.
class CacheError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violation (e.g. pick weights not summing to the table
/// entry, which indicates table corruption).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace randdag

#endif
