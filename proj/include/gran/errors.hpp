#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gran {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OverlapError : public Error {
public:
  using Error::Error;
};

class EmptyBlockError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class NotEquivalenceError : public Error {
public:
  using Error::Error;
};

class UniverseMismatchError : public Error {
public:
  UniverseMismatchError() : Error("operands are defined over different universes") {}
};

class UnknownElementError : public Error {
public:
  explicit UnknownElementError(const std::string &name)
      : Error("unknown element '" + name + "'"), name_(name) {}
  const std::string &name() const { return name_; }

private:
  std::string name_;
};

class NoAttributesError : public Error {
public:
  NoAttributesError() : Error("information system has no attributes") {}
};

class IncompleteSystemError : public Error {
public:
  IncompleteSystemError()
      : Error("operation requires a complete information system") {}
};

/// Raised when an enumeration would exceed its configured size cap.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string &what, std::size_t requested, std::size_t cap)
      : Error(what + ": requested " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested), cap_(cap) {}
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t requested_;
  std::size_t cap_;
};

class NoBoundError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateObjectError : public Error {
public:
  explicit DuplicateObjectError(const std::string &name)
      : Error("duplicate object '" + name + "'") {}
};

class EmptyTableError : public Error {
public:
  EmptyTableError() : Error("table has no rows") {}
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace gran
