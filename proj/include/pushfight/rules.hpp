#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "pushfight/state.hpp"

namespace pushfight {

struct Move {
  Square from;
  Square to;
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

struct Push {
  Square king;
  Direction dir;
  friend bool operator==(const Push&, const Push&) = default;
  friend auto operator<=>(const Push&, const Push&) = default;
};

// Up to two optional moves followed by a mandatory push (move budgets are
// enforced by the caller's regime, not by the type).
struct Turn {
  std::vector<Move> moves;
  Push push;
  friend bool operator==(const Turn&, const Turn&) = default;
};

enum class Outcome : uint8_t { WhiteWins, BlackWins, Ongoing };

constexpr Outcome loss_for(Color mover) {
  return mover == Color::White ? Outcome::BlackWins : Outcome::WhiteWins;
}
constexpr Outcome win_for(Color mover) {
  return mover == Color::White ? Outcome::WhiteWins : Outcome::BlackWins;
}

struct Ejected {
  Color color;
  PieceKind kind;
  Square from;  // square the piece left the board from
};

struct PushResult {
  GameState new_state;
  std::optional<Ejected> ejected;
};

class RulesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All (from, to) moves for `mover` pieces: to != from and to reachable from
// from through orthogonally adjacent empty cells. Reachability is set-based;
// a simple path exists iff the destination lies in the empty-region flood
// fill around the source.
std::set<Move> legal_moves(const GameState& state, Color mover);

// Destinations reachable by the piece on `from` (empty squares in its
// flood-fill region). Returns empty if `from` has no piece.
std::vector<Square> move_destinations(const GameState& state, Square from);

// All (king, direction) pushes for `mover`: the adjacent square holds a
// piece, the contiguous occupied segment contains no anchored king, and the
// segment either ends before an empty cell or exits the board over an
// unrailed boundary edge.
std::set<Push> legal_pushes(const GameState& state, Color mover);

bool is_legal_push(const GameState& state, Color mover, Push push);

// Applies a push known (or required) to be legal; throws RulesError if not.
// The anchor ends on the pushing king's new square.
PushResult apply_push(const GameState& state, Push push);

// True iff the push is legal for the state's mover and ejects an opponent
// piece (an immediate win).
bool is_winning_push(const GameState& state, Color mover, Push push);

// Applies `turn` for the derived mover: each move validated against the
// intermediate position, then the push. If a piece of color X is ejected,
// X loses regardless of who pushed. Throws RulesError on an illegal move,
// an illegal push, or a move count above `max_moves`.
std::pair<GameState, Outcome> apply_turn(
    const GameState& state, const Turn& turn,
    std::optional<int> max_moves = std::nullopt);

// Loss for the side to move iff it has no legal push; Ongoing otherwise.
Outcome outcome(const GameState& state);

}  // namespace pushfight
