#include "pushfight/mate1.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pushfight {

namespace {

constexpr uint64_t kU64Max = ~uint64_t{0};

uint64_t saturating_pow6(uint64_t n) {
  uint64_t r = 1;
  for (int i = 0; i < 6; ++i) {
    if (n != 0 && r > kU64Max / n) return kU64Max;
    r *= n;
  }
  return r;
}

// Mover kings in row-major order: the deterministic pushing-king iteration.
std::vector<Square> mover_kings(const GameState& state, Color mover) {
  std::vector<Square> kings;
  for (const auto& [sq, piece] : state.pieces()) {
    if (piece.color == mover && piece.kind == PieceKind::King) {
      kings.push_back(sq);
    }
  }
  std::sort(kings.begin(), kings.end());
  return kings;
}

// First direction whose full ray is occupied, ends at an opponent piece,
// exits over an unrailed edge, and contains no anchored king.
std::optional<Direction> winning_push_dir(const SingleKingView& view,
                                          const Configuration& config) {
  const Board& board = view.board();
  for (Direction d : all_directions) {
    std::vector<Square> ray;
    bool gap = false;
    for (Square s = config.king.neighbor(d); board.has_cell(s);
         s = s.neighbor(d)) {
      if (!view.opponent_at(s) && !config.pawns.count(s)) { gap = true; break; }
      ray.push_back(s);
    }
    if (gap || ray.empty()) continue;
    Square last = ray.back();
    if (!view.opponent_at(last)) continue;
    if (board.has_rail(last, d)) continue;
    bool anchored = false;
    if (view.anchor()) {
      for (Square s : ray) {
        if (s == *view.anchor()) { anchored = true; break; }
      }
    }
    if (anchored) continue;
    return d;
  }
  return std::nullopt;
}

// Empty squares reachable from `from` through empty cells of the view.
std::vector<Square> config_region(const SingleKingView& view,
                                  const Configuration& config, Square from) {
  const Board& board = view.board();
  auto empty = [&](Square s) {
    return board.has_cell(s) && !view.opponent_at(s) && s != config.king &&
           !config.pawns.count(s);
  };
  std::vector<uint8_t> seen(static_cast<size_t>(board.rows()) * board.cols(),
                            0);
  std::deque<Square> queue;
  std::vector<Square> region;
  auto try_enqueue = [&](Square s) {
    if (!empty(s) || seen[board.index(s)]) return;
    seen[board.index(s)] = 1;
    queue.push_back(s);
    region.push_back(s);
  };
  for (Direction d : all_directions) try_enqueue(from.neighbor(d));
  while (!queue.empty()) {
    Square s = queue.front();
    queue.pop_front();
    for (Direction d : all_directions) try_enqueue(s.neighbor(d));
  }
  std::sort(region.begin(), region.end());
  return region;
}

// Single-piece successor configurations, deterministic order: king first,
// then pawns row-major; destinations row-major.
std::vector<std::pair<Configuration, Move>> config_successors(
    const SingleKingView& view, const Configuration& config) {
  std::vector<std::pair<Configuration, Move>> next;
  for (Square to : config_region(view, config, config.king)) {
    Configuration n = config;
    n.king = to;
    next.push_back({std::move(n), Move{config.king, to}});
  }
  for (Square pawn : config.pawns) {
    for (Square to : config_region(view, config, pawn)) {
      Configuration n = config;
      n.pawns.erase(pawn);
      n.pawns.insert(to);
      next.push_back({std::move(n), Move{pawn, to}});
    }
  }
  return next;
}

struct BfsHit {
  std::vector<Move> moves;
  Direction push_dir;
};

// BFS over configurations to `depth_cap` moves; tests a winning push at
// every node. `node_budget` decrements per visited node; nullptr = unlimited.
std::optional<BfsHit> config_bfs(const SingleKingView& view,
                                 uint64_t depth_cap, uint64_t* node_budget) {
  Configuration start = view.initial_config();
  std::map<Configuration, std::pair<Configuration, Move>> parent;
  auto witness_moves = [&](const Configuration& config) {
    std::vector<Move> moves;
    Configuration cur = config;
    while (!(cur == start)) {
      auto& [prev, move] = parent.at(cur);
      moves.push_back(move);
      cur = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  if (node_budget) {
    if (*node_budget == 0) throw ResourceLimitError("node cap exceeded");
    --*node_budget;
  }
  if (auto d = winning_push_dir(view, start)) {
    return BfsHit{{}, *d};
  }
  std::set<Configuration> visited{start};
  std::deque<std::pair<Configuration, uint64_t>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [config, depth] = queue.front();
    queue.pop_front();
    if (depth >= depth_cap) continue;
    for (auto& [next, move] : config_successors(view, config)) {
      if (visited.count(next)) continue;
      if (node_budget) {
        if (*node_budget == 0) throw ResourceLimitError("node cap exceeded");
        --*node_budget;
      }
      visited.insert(next);
      parent.emplace(next, std::make_pair(config, move));
      if (auto d = winning_push_dir(view, next)) {
        return BfsHit{witness_moves(next), *d};
      }
      queue.push_back({next, depth + 1});
    }
  }
  return std::nullopt;
}

Mate1Answer search_all_kings(const GameState& state, uint64_t depth_cap,
                             uint64_t* node_budget) {
  Color mover = state.to_move();
  for (Square king : mover_kings(state, mover)) {
    SingleKingView view = SingleKingView::make(state, king);
    if (auto hit = config_bfs(view, depth_cap, node_budget)) {
      Turn turn;
      turn.moves = hit->moves;
      Square king_at = king;
      for (const Move& m : hit->moves) {
        if (m.from == king_at) king_at = m.to;
      }
      turn.push = Push{king_at, hit->push_dir};
      return Mate1Answer{true, turn};
    }
  }
  return Mate1Answer{false, std::nullopt};
}

}  // namespace

uint64_t move_bound(const GameState& state) {
  return saturating_pow6(static_cast<uint64_t>(state.board().area()));
}

Mate1Answer solve_c_move(const GameState& state, int c) {
  if (c < 0) throw std::invalid_argument("solve_c_move: c must be >= 0");
  return search_all_kings(state, static_cast<uint64_t>(c), nullptr);
}

const char* fault_name(CertificateFault fault) {
  switch (fault) {
    case CertificateFault::None: return "none";
    case CertificateFault::TooManyMoves: return "too_many_moves";
    case CertificateFault::IllegalMove: return "illegal_move";
    case CertificateFault::IllegalPush: return "illegal_push";
    case CertificateFault::NotWinning: return "not_winning";
  }
  return "?";
}

CertificateCheck verify_k_certificate(const GameState& state, uint64_t k,
                                      const Turn& turn) {
  uint64_t cap = std::min(k, move_bound(state));
  if (turn.moves.size() > cap) {
    return {false, CertificateFault::TooManyMoves,
            "certificate uses " + std::to_string(turn.moves.size()) +
                " moves, cap is " + std::to_string(cap)};
  }
  Color mover = state.to_move();
  GameState cur = state;
  for (const Move& m : turn.moves) {
    auto piece = cur.piece_at(m.from);
    if (!piece || piece->color != mover ||
        !legal_moves(cur, mover).count(m)) {
      return {false, CertificateFault::IllegalMove,
              "illegal move " + m.from.to_string() + " -> " +
                  m.to.to_string()};
    }
    std::map<Square, Piece> pieces = cur.pieces();
    Piece moved = pieces.at(m.from);
    pieces.erase(m.from);
    pieces[m.to] = moved;
    cur = GameState(cur.board(), std::move(pieces), cur.anchor());
  }
  auto kp = cur.piece_at(turn.push.king);
  if (!kp || kp->color != mover || kp->kind != PieceKind::King ||
      !is_legal_push(cur, mover, turn.push)) {
    return {false, CertificateFault::IllegalPush,
            "illegal push " + turn.push.king.to_string() +
                direction_char(turn.push.dir)};
  }
  PushResult result = apply_push(cur, turn.push);
  if (!result.ejected || result.ejected->color == mover) {
    return {false, CertificateFault::NotWinning, "push does not win"};
  }
  return {true, CertificateFault::None, ""};
}

Mate1Answer solve_k_move(const GameState& state, uint64_t k,
                         uint64_t node_cap) {
  Mate1Answer unbounded = solve_unbounded(state);
  if (!unbounded.winnable) return {false, std::nullopt};
  uint64_t depth_cap = std::min(k, move_bound(state));
  uint64_t budget = node_cap;
  return search_all_kings(state, depth_cap, &budget);
}

namespace {

// Pawn placement within `from`'s class from which the king step toward
// `next.king` lands exactly in class `next`.
Configuration plan_step_target(const SingleKingView& view,
                               const Configuration& cur,
                               const ClassDescriptor& next) {
  Pawnspace old_ps(view, cur.king);
  Square dest = next.king;
  int split = old_ps.component_of(dest);
  Pawnspace new_ps(view, dest);

  std::vector<int> base(new_ps.component_count(), 0);
  for (int i = 0; i < old_ps.component_count(); ++i) {
    if (i == split) continue;
    int target = new_ps.component_of(old_ps.component_id(i));
    int count = 0;
    for (Square s : old_ps.components()[i]) count += cur.pawns.count(s);
    base[target] += count;
  }

  Configuration to;
  to.king = cur.king;
  // Untouched components keep their exact pawn placement.
  for (int i = 0; i < old_ps.component_count(); ++i) {
    if (i == split) continue;
    for (Square s : old_ps.components()[i]) {
      if (cur.pawns.count(s)) to.pawns.insert(s);
    }
  }
  // The split component redistributes per the required new-class counts.
  std::map<int, std::vector<Square>> slots;  // new comp -> squares of split
  for (Square s : old_ps.components()[split]) {
    if (s == dest) continue;
    slots[new_ps.component_of(s)].push_back(s);
  }
  for (int i = 0; i < new_ps.component_count(); ++i) {
    int need = next.count_for(new_ps.component_id(i)) - base[i];
    if (need < 0 ||
        need > static_cast<int>(slots.count(i) ? slots[i].size() : 0)) {
      throw std::logic_error("plan_step_target: class is not a neighbor");
    }
    for (int j = 0; j < need; ++j) to.pawns.insert(slots[i][j]);
  }
  return to;
}

// Placement inside the final class that fills the winning ray.
Configuration plan_winning_target(const SingleKingView& view,
                                  const Configuration& cur, Direction dir) {
  const Board& board = view.board();
  Pawnspace ps(view, cur.king);
  std::set<Square> ray_fill;
  for (Square s = cur.king.neighbor(dir); board.has_cell(s);
       s = s.neighbor(dir)) {
    if (!view.opponent_at(s)) ray_fill.insert(s);
  }
  Configuration to;
  to.king = cur.king;
  for (int i = 0; i < ps.component_count(); ++i) {
    std::vector<Square> have;
    std::vector<Square> need;
    for (Square s : ps.components()[i]) {
      if (ray_fill.count(s)) need.push_back(s);
      if (cur.pawns.count(s)) have.push_back(s);
    }
    for (Square s : need) to.pawns.insert(s);
    int spare = static_cast<int>(have.size()) - static_cast<int>(need.size());
    for (Square s : have) {
      if (spare == 0) break;
      if (!ray_fill.count(s)) {
        to.pawns.insert(s);
        --spare;
      }
    }
  }
  return to;
}

void append_moves(std::vector<Move>& out, const std::vector<Move>& pawn_moves,
                  std::vector<uint8_t>& king_flags) {
  for (const Move& m : pawn_moves) {
    out.push_back(m);
    king_flags.push_back(0);
  }
}

}  // namespace

Mate1Answer solve_unbounded(const GameState& state) {
  Color mover = state.to_move();
  for (Square king : mover_kings(state, mover)) {
    SingleKingView view = SingleKingView::make(state, king);
    Configuration start = view.initial_config();
    ClassDescriptor d0 = descriptor_of(view, start);

    std::map<ClassDescriptor, ClassDescriptor> parent;
    std::optional<std::pair<ClassDescriptor, Direction>> goal;
    if (auto dir = is_winning_class(view, d0)) {
      goal = {d0, *dir};
    }
    std::deque<ClassDescriptor> queue{d0};
    std::set<ClassDescriptor> visited{d0};
    while (!goal && !queue.empty()) {
      ClassDescriptor cur = queue.front();
      queue.pop_front();
      for (const ClassDescriptor& next : class_neighbors(view, cur)) {
        if (visited.count(next)) continue;
        visited.insert(next);
        parent.emplace(next, cur);
        if (auto dir = is_winning_class(view, next)) {
          goal = {next, *dir};
          break;
        }
        queue.push_back(next);
      }
    }
    if (!goal) continue;

    std::vector<ClassDescriptor> path{goal->first};
    while (!(path.back() == d0)) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());

    std::vector<Move> moves;
    std::vector<uint8_t> king_flags;
    Configuration cur = start;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      Configuration target = plan_step_target(view, cur, path[i + 1]);
      append_moves(moves, realize_in_class(view, cur, target), king_flags);
      moves.push_back(Move{cur.king, path[i + 1].king});
      king_flags.push_back(1);
      cur = Configuration{path[i + 1].king, target.pawns};
    }
    Configuration final_cfg = plan_winning_target(view, cur, goal->second);
    append_moves(moves, realize_in_class(view, cur, final_cfg), king_flags);
    cur = final_cfg;

    // Compress consecutive unit king steps into one move; every
    // intermediate square is empty when traversed.
    std::vector<Move> compressed;
    for (size_t i = 0; i < moves.size(); ++i) {
      if (king_flags[i] && !compressed.empty() && i > 0 &&
          king_flags[i - 1] && compressed.back().to == moves[i].from) {
        compressed.back().to = moves[i].to;
      } else {
        compressed.push_back(moves[i]);
      }
    }

    Turn turn;
    turn.moves = std::move(compressed);
    turn.push = Push{cur.king, goal->second};
    return Mate1Answer{true, turn};
  }
  return Mate1Answer{false, std::nullopt};
}

}  // namespace pushfight
