#pragma once

#include <stdexcept>
#include <string>

#include "pushfight/state.hpp"

namespace pushfight {

// Parse/format error with 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// PFB v1 text format.
//
//   PFB v1
//   rows R
//   cols C
//   <R rows of C glyphs>   # . P K A p k a
//   open COL ROW DIR       # removes the default rail from a boundary edge
//
// All boundary edges are railed unless opened.
GameState parse_board(const std::string& text);

// Canonical serialization: glyph grid plus `open` lines ordered by
// row-major square then N,E,S,W. parse_board(serialize_board(s)) == s.
std::string serialize_board(const GameState& state);

}  // namespace pushfight
