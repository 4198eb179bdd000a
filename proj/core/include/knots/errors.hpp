#pragma once

#include <stdexcept>
#include <string>

namespace knots {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// structural problems: unknown ids, broken incidence, bad preconditions
struct DiagramError : Error {
  using Error::Error;
};

// text/JSON input problems, with 1-based position when known
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
      : Error(line_ ? "line " + std::to_string(line_) +
                          (column_ ? ":" + std::to_string(column_) : "") + ": " + msg
                    : msg),
        line(line_),
        column(column_) {}
};

// an operation refused because a size cap would be exceeded
struct CapError : Error {
  using Error::Error;
};

// illegal or stale move application; index = position in a sequence (or -1)
struct MoveError : Error {
  int index = -1;
  MoveError(const std::string& reason, int index_ = -1)
      : Error(index_ >= 0 ? "move " + std::to_string(index_) + ": " + reason : reason),
        index(index_) {}
};

}  // namespace knots
