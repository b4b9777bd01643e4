#pragma once

#include <stdexcept>
#include <string>

namespace affgr {

/// Malformed user input: type labels, element strings, node sets.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size limit. The message names
/// the limit and how to raise it.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::string limit_name, long requested, long limit)
      : std::runtime_error(what + ": requested " + std::to_string(requested) + " exceeds " +
                           limit_name + "=" + std::to_string(limit) + " (raise it with --" +
                           limit_name + ")"),
        limit_name_(std::move(limit_name)),
        requested_(requested),
        limit_(limit) {}

  const std::string& limit_name() const noexcept { return limit_name_; }
  long requested() const noexcept { return requested_; }
  long limit() const noexcept { return limit_; }

 private:
  std::string limit_name_;
  long requested_;
  long limit_;
};

/// Operands from different types, or vectors of the wrong rank.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace affgr
