#pragma once

#include <map>
#include <optional>
#include <string>

#include "pushfight/board.hpp"
#include "pushfight/geometry.hpp"

namespace pushfight {

enum class Color : uint8_t { White = 0, Black = 1 };

constexpr Color other(Color c) {
  return c == Color::White ? Color::Black : Color::White;
}

constexpr const char* color_name(Color c) {
  return c == Color::White ? "white" : "black";
}

enum class PieceKind : uint8_t { Pawn = 0, King = 1 };

struct Piece {
  Color color;
  PieceKind kind;
  friend bool operator==(const Piece&, const Piece&) = default;
};

// A full game position: board shape, piece placement, and the anchor.
// The side to move is never stored; it derives from the anchor (a player
// whose king is anchored has just pushed, so the other player moves; with
// no anchor placed yet, White moves).
class GameState {
 public:
  GameState() = default;
  GameState(Board board, std::map<Square, Piece> pieces,
            std::optional<Square> anchor);

  const Board& board() const { return board_; }
  const std::map<Square, Piece>& pieces() const { return pieces_; }
  const std::optional<Square>& anchor() const { return anchor_; }

  bool occupied(Square s) const { return pieces_.count(s) != 0; }
  std::optional<Piece> piece_at(Square s) const {
    auto it = pieces_.find(s);
    if (it == pieces_.end()) return std::nullopt;
    return it->second;
  }
  bool is_anchored(Square s) const { return anchor_ && *anchor_ == s; }

  Color to_move() const;

  int count(Color c) const;
  int count(Color c, PieceKind k) const;

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.board_ == b.board_ && a.pieces_ == b.pieces_ &&
           a.anchor_ == b.anchor_;
  }
  friend bool operator<(const GameState& a, const GameState& b) {
    if (a.pieces_ != b.pieces_) return a.pieces_ < b.pieces_;
    return a.anchor_ < b.anchor_;
  }

 private:
  Board board_;
  std::map<Square, Piece> pieces_;
  std::optional<Square> anchor_;
};

}  // namespace pushfight
