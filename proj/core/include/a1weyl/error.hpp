#pragma once

#include <stdexcept>
#include <string>

namespace a1weyl {

/// Malformed or non-normalized semilattice configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not follow the word or JSON grammar.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request outside an operation's domain: rank mismatch,
/// a letter outside R^x, a non-relation handed to the rewriter, ...
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A self-check (certificate replay, oracle comparison) failed.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a1weyl
