#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctc {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ComplementOfTau : public Error {
public:
  ComplementOfTau() : Error("tau has no complement") {}
};

class UnboundConstant : public Error {
public:
  explicit UnboundConstant(const std::string& name)
      : Error("unbound constant '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class UnguardedRecursion : public Error {
public:
  explicit UnguardedRecursion(const std::string& name)
      : Error("constant '" + name + "' is not weakly guarded in its definition"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class DuplicateDefinition : public Error {
public:
  explicit DuplicateDefinition(const std::string& name)
      : Error("constant '" + name + "' is defined more than once"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

/// Malformed input. Line and column are 1-based.
class SourceError : public Error {
public:
  SourceError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  int line_;
  int column_;
  std::string message_;
};

/// Raised when an exploration (LTS, tau-closure, unfolding) outgrows its cap.
class StateBoundExceeded : public Error {
public:
  StateBoundExceeded(std::size_t bound, const std::string& what)
      : Error(what + " exceeded the bound of " + std::to_string(bound)), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t bound_;
};

class NonTerminatingTauClosure : public StateBoundExceeded {
public:
  explicit NonTerminatingTauClosure(std::size_t bound)
      : StateBoundExceeded(bound, "tau-closure") {}
};

class GuardednessViolation : public Error {
public:
  explicit GuardednessViolation(const std::string& what) : Error(what) {}
};

/// A precondition of an operation was not met by its arguments.
class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace ctc
