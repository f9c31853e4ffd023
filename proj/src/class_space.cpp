#include "pushfight/class_space.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pushfight {

SingleKingView SingleKingView::make(const GameState& state,
                                    Square pushing_king) {
  auto piece = state.piece_at(pushing_king);
  if (!piece || piece->kind != PieceKind::King) {
    throw std::invalid_argument("view: no king on " + pushing_king.to_string());
  }
  SingleKingView view;
  view.base_ = state;
  view.mover_ = piece->color;
  view.pushing_king_ = pushing_king;
  for (const auto& [sq, p] : state.pieces()) {
    if (p.color != view.mover_) continue;
    if (sq == pushing_king) continue;
    view.pawn_total_ += 1;
    if (p.kind == PieceKind::King) view.demoted_.insert(sq);
  }
  return view;
}

Configuration SingleKingView::initial_config() const {
  Configuration config;
  config.king = pushing_king_;
  for (const auto& [sq, p] : base_.pieces()) {
    if (p.color == mover_ && sq != pushing_king_) config.pawns.insert(sq);
  }
  return config;
}

GameState SingleKingView::to_state(const Configuration& config) const {
  std::map<Square, Piece> pieces;
  for (const auto& [sq, p] : base_.pieces()) {
    if (p.color != mover_) pieces[sq] = p;
  }
  pieces[config.king] = Piece{mover_, PieceKind::King};
  size_t kings_left = demoted_.size();
  for (Square sq : config.pawns) {
    PieceKind kind = kings_left > 0 ? PieceKind::King : PieceKind::Pawn;
    if (kings_left > 0) --kings_left;
    pieces[sq] = Piece{mover_, kind};
  }
  return GameState(base_.board(), std::move(pieces), base_.anchor());
}

Pawnspace::Pawnspace(const SingleKingView& view, Square king_at) {
  const Board& board = view.board();
  std::vector<int> comp(static_cast<size_t>(board.rows()) * board.cols(), -1);
  for (Square seed : board.cells()) {
    if (!view.in_pawnspace(seed, king_at)) continue;
    if (comp[board.index(seed)] >= 0) continue;
    int id = static_cast<int>(components_.size());
    components_.emplace_back();
    std::deque<Square> queue{seed};
    comp[board.index(seed)] = id;
    while (!queue.empty()) {
      Square s = queue.front();
      queue.pop_front();
      components_[id].push_back(s);
      for (Direction d : all_directions) {
        Square t = s.neighbor(d);
        if (!view.in_pawnspace(t, king_at)) continue;
        if (comp[board.index(t)] >= 0) continue;
        comp[board.index(t)] = id;
        queue.push_back(t);
      }
    }
    std::sort(components_[id].begin(), components_[id].end());
  }
  // Seeds are visited row-major, so components are already ordered by their
  // minimal square.
  for (int i = 0; i < static_cast<int>(components_.size()); ++i) {
    for (Square s : components_[i]) lookup_[s] = i;
  }
}

int Pawnspace::component_of(Square s) const {
  auto it = lookup_.find(s);
  return it == lookup_.end() ? -1 : it->second;
}

int ClassDescriptor::count_for(Square component_id) const {
  for (const auto& [id, count] : signature) {
    if (id == component_id) return count;
  }
  throw std::out_of_range("descriptor: no component " +
                          component_id.to_string());
}

std::string ClassDescriptor::to_string() const {
  std::ostringstream out;
  out << "king " << king.col << " " << king.row;
  for (const auto& [id, count] : signature) {
    out << "; sig (" << id.col << "," << id.row << ")=" << count;
  }
  return out.str();
}

Pawnspace pawnspace_of(const SingleKingView& view, Square king_at) {
  if (!view.board().has_cell(king_at) || view.opponent_at(king_at)) {
    throw std::invalid_argument("pawnspace: bad king square " +
                                king_at.to_string());
  }
  return Pawnspace(view, king_at);
}

ClassDescriptor descriptor_of(const SingleKingView& view,
                              const Configuration& config) {
  Pawnspace ps(view, config.king);
  std::vector<int> counts(ps.component_count(), 0);
  for (Square pawn : config.pawns) {
    int i = ps.component_of(pawn);
    if (i < 0) {
      throw std::invalid_argument("descriptor: pawn outside pawnspace at " +
                                  pawn.to_string());
    }
    counts[i] += 1;
  }
  ClassDescriptor d;
  d.king = config.king;
  for (int i = 0; i < ps.component_count(); ++i) {
    d.signature.emplace_back(ps.component_id(i), counts[i]);
  }
  return d;
}

namespace {

void enumerate_compositions(int total, const std::vector<int>& caps, size_t i,
                            std::vector<int>& parts,
                            const std::function<void()>& emit) {
  if (i == caps.size()) {
    if (total == 0) emit();
    return;
  }
  int remaining_cap = 0;
  for (size_t j = i + 1; j < caps.size(); ++j) remaining_cap += caps[j];
  int lo = std::max(0, total - remaining_cap);
  int hi = std::min(caps[i], total);
  for (int v = lo; v <= hi; ++v) {
    parts[i] = v;
    enumerate_compositions(total - v, caps, i + 1, parts, emit);
  }
}

}  // namespace

std::set<ClassDescriptor> class_neighbors(const SingleKingView& view,
                                          const ClassDescriptor& c) {
  std::set<ClassDescriptor> out;
  Pawnspace old_ps(view, c.king);
  for (Direction d : all_directions) {
    Square dest = c.king.neighbor(d);
    if (!view.in_pawnspace(dest, c.king)) continue;
    int split = old_ps.component_of(dest);
    int moving = c.count_for(old_ps.component_id(split));
    if (moving >= old_ps.component_area(split)) continue;  // no empty square

    Pawnspace new_ps(view, dest);
    std::vector<int> base(new_ps.component_count(), 0);
    std::vector<int> cap(new_ps.component_count(), 0);
    for (int i = 0; i < old_ps.component_count(); ++i) {
      if (i == split) continue;
      // An untouched old component lies inside exactly one new component.
      int target = new_ps.component_of(old_ps.component_id(i));
      base[target] += c.count_for(old_ps.component_id(i));
    }
    for (Square s : old_ps.components()[split]) {
      if (s == dest) continue;
      cap[new_ps.component_of(s)] += 1;
    }

    std::vector<int> open;  // new components that can host split pawns
    std::vector<int> caps;
    for (int i = 0; i < new_ps.component_count(); ++i) {
      if (cap[i] > 0) {
        open.push_back(i);
        caps.push_back(cap[i]);
      }
    }
    std::vector<int> parts(open.size(), 0);
    enumerate_compositions(moving, caps, 0, parts, [&]() {
      ClassDescriptor n;
      n.king = dest;
      std::vector<int> counts = base;
      for (size_t j = 0; j < open.size(); ++j) counts[open[j]] += parts[j];
      for (int i = 0; i < new_ps.component_count(); ++i) {
        n.signature.emplace_back(new_ps.component_id(i), counts[i]);
      }
      out.insert(std::move(n));
    });
  }
  return out;
}

std::optional<Direction> is_winning_class(const SingleKingView& view,
                                          const ClassDescriptor& c) {
  const Board& board = view.board();
  Pawnspace ps(view, c.king);
  for (Direction d : all_directions) {
    std::vector<Square> ray;
    for (Square s = c.king.neighbor(d); board.has_cell(s);
         s = s.neighbor(d)) {
      ray.push_back(s);
    }
    if (ray.empty()) continue;
    Square last = ray.back();
    if (!view.opponent_at(last)) continue;
    if (board.has_rail(last, d)) continue;
    bool blocked = false;
    if (view.anchor()) {
      for (Square s : ray) {
        if (s == *view.anchor()) { blocked = true; break; }
      }
    }
    if (blocked) continue;
    std::map<int, int> needed;  // component -> squares of the ray inside it
    for (Square s : ray) {
      int i = ps.component_of(s);
      if (i >= 0) needed[i] += 1;
    }
    bool fillable = true;
    for (const auto& [i, need] : needed) {
      if (need > c.count_for(ps.component_id(i))) { fillable = false; break; }
    }
    if (fillable) return d;
  }
  return std::nullopt;
}

namespace {

// BFS shortest path within one pawnspace component; both endpoints
// included. Deterministic through the N,E,S,W expansion order.
std::vector<Square> component_path(const Pawnspace& ps, int comp, Square from,
                                   Square to) {
  std::map<Square, Square> parent;
  std::deque<Square> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Square s = queue.front();
    queue.pop_front();
    if (s == to) break;
    for (Direction d : all_directions) {
      Square t = s.neighbor(d);
      if (ps.component_of(t) != comp || parent.count(t)) continue;
      parent[t] = s;
      queue.push_back(t);
    }
  }
  std::vector<Square> path;
  for (Square s = to;; s = parent.at(s)) {
    path.push_back(s);
    if (s == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Move> realize_in_class(const SingleKingView& view,
                                   const Configuration& from,
                                   const Configuration& to) {
  if (!(descriptor_of(view, from) == descriptor_of(view, to))) {
    throw std::invalid_argument("realize_in_class: descriptor mismatch");
  }
  Pawnspace ps(view, from.king);
  std::set<Square> cur = from.pawns;
  std::vector<Move> moves;
  while (true) {
    // Row-major-least misplaced pawn.
    std::optional<Square> misplaced;
    for (Square s : cur) {
      if (!to.pawns.count(s)) { misplaced = s; break; }
    }
    if (!misplaced) break;
    int comp = ps.component_of(*misplaced);
    // Row-major-least empty target square in the same component.
    std::optional<Square> target;
    for (Square t : ps.components()[comp]) {
      if (to.pawns.count(t) && !cur.count(t)) { target = t; break; }
    }
    if (!target) {
      throw std::logic_error("realize_in_class: no free target in component");
    }
    std::vector<Square> path = component_path(ps, comp, *misplaced, *target);
    std::vector<Square> chain;  // pawn-occupied squares along the path
    for (Square s : path) {
      if (cur.count(s)) chain.push_back(s);
    }
    // Shift the chain toward the target, rearmost pawn first.
    Square hole = *target;
    for (size_t i = chain.size(); i-- > 0;) {
      moves.push_back(Move{chain[i], hole});
      cur.erase(chain[i]);
      cur.insert(hole);
      hole = chain[i];
    }
  }
  return moves;
}

}  // namespace pushfight
