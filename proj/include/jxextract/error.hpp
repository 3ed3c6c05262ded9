#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jxextract {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An error tied to a position in a source text.
class SourceError : public Error {
 public:
  SourceError(const std::string& kind, const std::string& message, int line,
              int column)
      : Error(kind + " at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class LexError : public SourceError {
 public:
  LexError(const std::string& message, int line, int column)
      : SourceError("lex error", message, line, column) {}
};

class ParseError : public SourceError {
 public:
  ParseError(const std::string& message, int line, int column)
      : SourceError("parse error", message, line, column) {}
};

class ResolveError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Raised by extract() when the candidate violates one of the validity
// preconditions; codes() lists them ("V1".."V5").
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& message, std::vector<std::string> codes)
      : Error(message), codes_(std::move(codes)) {}

  const std::vector<std::string>& codes() const { return codes_; }

 private:
  std::vector<std::string> codes_;
};

class NameClashError : public Error {
 public:
  using Error::Error;
};

class InlineError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace jxextract
