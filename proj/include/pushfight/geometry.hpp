#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace pushfight {

// Direction order N,E,S,W is the canonical tie-break order used by every
// deterministic enumeration in this library.
enum class Direction : uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> all_directions = {
    Direction::North, Direction::East, Direction::South, Direction::West};

constexpr char direction_char(Direction d) {
  switch (d) {
    case Direction::North: return 'N';
    case Direction::East: return 'E';
    case Direction::South: return 'S';
    case Direction::West: return 'W';
  }
  return '?';
}

constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::North: return Direction::South;
    case Direction::East: return Direction::West;
    case Direction::South: return Direction::North;
    case Direction::West: return Direction::East;
  }
  return Direction::North;
}

// Board coordinate. Row 0 is the top row and rows increase downward, so
// North decreases row. Ordering is row-major: top row first, then leftmost.
struct Square {
  int col = 0;
  int row = 0;

  friend constexpr bool operator==(const Square&, const Square&) = default;

  // Row-major order ("leftmost topmost" = minimum).
  friend constexpr auto operator<=>(const Square& a, const Square& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }

  [[nodiscard]] constexpr Square neighbor(Direction d) const {
    switch (d) {
      case Direction::North: return {col, row - 1};
      case Direction::East: return {col + 1, row};
      case Direction::South: return {col, row + 1};
      case Direction::West: return {col - 1, row};
    }
    return *this;
  }

  [[nodiscard]] std::string to_string() const {
    return "(" + std::to_string(col) + "," + std::to_string(row) + ")";
  }
};

}  // namespace pushfight
