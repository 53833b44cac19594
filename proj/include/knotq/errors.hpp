#pragma once

#include <stdexcept>
#include <string>

namespace knotq {

/// An enumeration (or group closure) outgrew its vertex/element budget.
/// For quandle presentations this is the usual signal that the quandle
/// is infinite.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, long long count)
      : std::runtime_error(what), count_(count) {}

  long long count() const { return count_; }

 private:
  long long count_;
};

/// Syntax error in a text input (presentation file, word, link spec).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A structurally invalid presentation was handed to an operation that
/// requires a valid one.
class InvalidPresentation : public std::runtime_error {
 public:
  explicit InvalidPresentation(const std::string& what)
      : std::runtime_error(what) {}
};

/// A computed table failed a structural self-check. This always indicates
/// a bug in the enumeration pipeline, never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace knotq
