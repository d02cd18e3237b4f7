#pragma once

#include <stdexcept>
#include <string>

namespace clutchlab {

/// Invalid mathematical input: a table that is not a group, a map that is
/// not equivariant, a representation that is not an extension, ...
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure exhausted its retry budget or hit a singular
/// matrix where an invertible one was required.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clutchlab
