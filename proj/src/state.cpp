#include "pushfight/state.hpp"

#include <stdexcept>

namespace pushfight {

GameState::GameState(Board board, std::map<Square, Piece> pieces,
                     std::optional<Square> anchor)
    : board_(std::move(board)), pieces_(std::move(pieces)), anchor_(anchor) {
  for (const auto& [sq, piece] : pieces_) {
    if (!board_.has_cell(sq)) {
      throw std::invalid_argument("state: piece off board at " +
                                  sq.to_string());
    }
  }
  if (anchor_) {
    auto it = pieces_.find(*anchor_);
    if (it == pieces_.end() || it->second.kind != PieceKind::King) {
      throw std::invalid_argument("state: anchor must sit on a king");
    }
  }
}

Color GameState::to_move() const {
  if (!anchor_) return Color::White;
  return other(pieces_.at(*anchor_).color);
}

int GameState::count(Color c) const {
  int n = 0;
  for (const auto& [sq, piece] : pieces_) n += piece.color == c;
  return n;
}

int GameState::count(Color c, PieceKind k) const {
  int n = 0;
  for (const auto& [sq, piece] : pieces_) {
    n += piece.color == c && piece.kind == k;
  }
  return n;
}

}  // namespace pushfight
