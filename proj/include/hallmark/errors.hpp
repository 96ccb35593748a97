#pragma once

#include <stdexcept>
#include <string>

namespace hallmark {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is structurally invalid (non-bijection, bad degree, bad prime power).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A documented size limit would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract (non-member seed, non-normal subgroup).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A file or table failed to load. `kind` distinguishes schema problems from
/// mathematical inconsistencies so callers can report them separately.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Schema, SizeSum, Orthogonality, Integrality, NotBijection };

  ParseError(Kind kind, std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), kind_(kind), where_(std::move(where))
  {
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& where() const noexcept { return where_; }

 private:
  Kind kind_;
  std::string where_;
};

const char* toString(ParseError::Kind kind) noexcept;

}  // namespace hallmark
