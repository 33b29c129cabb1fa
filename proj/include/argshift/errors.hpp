#pragma once

#include <stdexcept>
#include <string>

namespace argshift {

/// Base class for every error raised by the library. `kind()` is a short
/// machine-readable tag used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class UnsupportedType : public Error {
 public:
  explicit UnsupportedType(const std::string& what) : Error("unsupported type", what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid argument", what) {}
};

class NotRegular : public Error {
 public:
  explicit NotRegular(const std::string& what) : Error("not regular", what) {}
};

class DependentGenerators : public Error {
 public:
  explicit DependentGenerators(const std::string& what)
      : Error("dependent generators", what) {}
};

class RetryExhausted : public Error {
 public:
  explicit RetryExhausted(const std::string& what) : Error("retry exhausted", what) {}
};

/// Raised when an internal consistency check fails. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal error", what) {}
};

}  // namespace argshift
