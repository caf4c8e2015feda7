#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vocabsweep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed corpus syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that breaks a data invariant (duplicate ids, bad fields).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The corpus has no content words after filtering.
class EmptyVocabularyError : public Error {
 public:
  EmptyVocabularyError() : Error("no content vocabulary") {}
};

}  // namespace vocabsweep
