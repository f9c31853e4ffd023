#include "pushfight/rules.hpp"

#include <deque>

namespace pushfight {

namespace {

// Flood fill over empty cells starting from the empty neighbors of `from`.
std::vector<Square> empty_region_around(const GameState& state, Square from) {
  const Board& board = state.board();
  std::vector<uint8_t> seen(static_cast<size_t>(board.rows()) * board.cols(),
                            0);
  std::deque<Square> queue;
  std::vector<Square> region;
  auto try_enqueue = [&](Square s) {
    if (!board.has_cell(s) || state.occupied(s)) return;
    size_t i = board.index(s);
    if (seen[i]) return;
    seen[i] = 1;
    queue.push_back(s);
    region.push_back(s);
  };
  for (Direction d : all_directions) try_enqueue(from.neighbor(d));
  while (!queue.empty()) {
    Square s = queue.front();
    queue.pop_front();
    for (Direction d : all_directions) try_enqueue(s.neighbor(d));
  }
  return region;
}

// Walks the maximal contiguous occupied segment from king+dir. Returns the
// last occupied square of the segment, or nullopt if the adjacent square is
// not an occupied cell.
std::optional<Square> segment_end(const GameState& state, Push push) {
  Square cur = push.king.neighbor(push.dir);
  if (!state.board().has_cell(cur) || !state.occupied(cur)) return std::nullopt;
  while (true) {
    Square next = cur.neighbor(push.dir);
    if (!state.board().has_cell(next) || !state.occupied(next)) return cur;
    cur = next;
  }
}

bool segment_has_anchored_king(const GameState& state, Push push, Square end) {
  for (Square s = push.king.neighbor(push.dir);; s = s.neighbor(push.dir)) {
    if (state.is_anchored(s)) return true;
    if (s == end) return false;
  }
}

}  // namespace

std::vector<Square> move_destinations(const GameState& state, Square from) {
  if (!state.occupied(from)) return {};
  return empty_region_around(state, from);
}

std::set<Move> legal_moves(const GameState& state, Color mover) {
  std::set<Move> moves;
  for (const auto& [sq, piece] : state.pieces()) {
    if (piece.color != mover) continue;
    for (Square to : empty_region_around(state, sq)) {
      moves.insert(Move{sq, to});
    }
  }
  return moves;
}

bool is_legal_push(const GameState& state, Color mover, Push push) {
  auto piece = state.piece_at(push.king);
  if (!piece || piece->color != mover || piece->kind != PieceKind::King) {
    return false;
  }
  auto end = segment_end(state, push);
  if (!end) return false;
  if (segment_has_anchored_king(state, push, *end)) return false;
  Square past = end->neighbor(push.dir);
  if (state.board().has_cell(past)) return true;  // segment ends before empty
  return !state.board().has_rail(*end, push.dir);  // exits over open edge
}

std::set<Push> legal_pushes(const GameState& state, Color mover) {
  std::set<Push> pushes;
  for (const auto& [sq, piece] : state.pieces()) {
    if (piece.color != mover || piece.kind != PieceKind::King) continue;
    for (Direction d : all_directions) {
      Push push{sq, d};
      if (is_legal_push(state, mover, push)) pushes.insert(push);
    }
  }
  return pushes;
}

PushResult apply_push(const GameState& state, Push push) {
  auto pusher = state.piece_at(push.king);
  if (!pusher || pusher->kind != PieceKind::King) {
    throw RulesError("push: no king on " + push.king.to_string());
  }
  if (!is_legal_push(state, pusher->color, push)) {
    throw RulesError("push: illegal push " + push.king.to_string() +
                     direction_char(push.dir));
  }
  Square end = *segment_end(state, push);
  Square past = end.neighbor(push.dir);

  std::map<Square, Piece> pieces = state.pieces();
  std::optional<Ejected> ejected;
  if (!state.board().has_cell(past)) {
    Piece gone = pieces.at(end);
    ejected = Ejected{gone.color, gone.kind, end};
    pieces.erase(end);
  }
  // Shift the segment (from far end toward the king) by one square.
  for (Square s = end;; s = s.neighbor(opposite(push.dir))) {
    if (pieces.count(s)) {
      Piece moved = pieces.at(s);
      pieces.erase(s);
      pieces[s.neighbor(push.dir)] = moved;
    }
    if (s == push.king.neighbor(push.dir)) break;
  }
  Piece king_piece = pieces.at(push.king);
  pieces.erase(push.king);
  Square king_to = push.king.neighbor(push.dir);
  pieces[king_to] = king_piece;

  return PushResult{GameState(state.board(), std::move(pieces), king_to),
                    ejected};
}

bool is_winning_push(const GameState& state, Color mover, Push push) {
  if (!is_legal_push(state, mover, push)) return false;
  auto end = segment_end(state, push);
  Square past = end->neighbor(push.dir);
  if (state.board().has_cell(past)) return false;
  return state.piece_at(*end)->color != mover;
}

std::pair<GameState, Outcome> apply_turn(const GameState& state,
                                         const Turn& turn,
                                         std::optional<int> max_moves) {
  if (max_moves && static_cast<int>(turn.moves.size()) > *max_moves) {
    throw RulesError("turn: move count exceeds budget");
  }
  Color mover = state.to_move();
  GameState cur = state;
  for (const Move& m : turn.moves) {
    auto piece = cur.piece_at(m.from);
    if (!piece || piece->color != mover) {
      throw RulesError("turn: no mover piece on " + m.from.to_string());
    }
    if (!legal_moves(cur, mover).count(m)) {
      throw RulesError("turn: illegal move " + m.from.to_string() + " -> " +
                       m.to.to_string());
    }
    std::map<Square, Piece> pieces = cur.pieces();
    Piece moved = pieces.at(m.from);
    pieces.erase(m.from);
    pieces[m.to] = moved;
    cur = GameState(cur.board(), std::move(pieces), cur.anchor());
  }
  auto kp = cur.piece_at(turn.push.king);
  if (!kp || kp->color != mover || kp->kind != PieceKind::King) {
    throw RulesError("turn: push king is not a mover king");
  }
  PushResult result = apply_push(cur, turn.push);
  if (result.ejected) {
    return {result.new_state, loss_for(result.ejected->color)};
  }
  return {result.new_state, Outcome::Ongoing};
}

Outcome outcome(const GameState& state) {
  Color mover = state.to_move();
  if (legal_pushes(state, mover).empty()) return loss_for(mover);
  return Outcome::Ongoing;
}

}  // namespace pushfight
