#pragma once

#include <stdexcept>
#include <string>

namespace twalex {

/// Error raised by any stage of the pipeline. The stage name is what the CLI
/// reports ("parse", "relation check", "no admissible column", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("parse", "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace twalex
