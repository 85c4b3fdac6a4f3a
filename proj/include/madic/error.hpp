#pragma once

#include <stdexcept>
#include <string>

namespace madic {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on trees of different degree, or otherwise do not fit together.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (permutations, words, JSON group specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound was hit. Never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace madic
