#pragma once

#include <stdexcept>
#include <string>

namespace lemod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong table shapes, out-of-range indices, schema violations.
/// `path()` is a JSON-path style location ("$.module.zero") when known.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::string path = {})
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A precondition of an operation does not hold (wrong ring, non-prime ideal, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A result that a theorem guarantees failed its check. Never expected on
/// validated structures; surfaces bugs or counterexamples.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lemod
