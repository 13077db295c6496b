#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polyharm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (|z| >= 1, NaN, bad counts, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is well-formed but does not satisfy an operation's hypothesis,
/// e.g. asking for coefficient bounds of a map outside the class.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A ratio certificate met a denominator below the floor. Carries the location.
class DenominatorCollapse : public Error {
 public:
  DenominatorCollapse(const std::string& what, double r, double theta)
      : Error(what), r_(r), theta_(theta) {}

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }

 private:
  double r_;
  double theta_;
};

/// Mapping document rejected. `path()` is a JSON pointer to the offending field,
/// empty for document-level syntax errors.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& what, std::string path)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace polyharm
