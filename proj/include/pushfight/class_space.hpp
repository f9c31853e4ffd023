#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pushfight/rules.hpp"
#include "pushfight/state.hpp"

namespace pushfight {

// A placement of the mover's pieces in a single-king view: the pushing
// king's square plus the squares of all mover pawns (demoted kings count
// as pawns).
struct Configuration {
  Square king;
  std::set<Square> pawns;
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Fixes one mover king as the pusher and treats the mover's other kings as
// pawns. The opponent's placement (and the anchor) comes from the base
// state and never changes within the view.
class SingleKingView {
 public:
  // `pushing_king` must hold a king; the view's mover is that king's color.
  static SingleKingView make(const GameState& state, Square pushing_king);

  const GameState& base() const { return base_; }
  const Board& board() const { return base_.board(); }
  Color mover() const { return mover_; }
  Square pushing_king() const { return pushing_king_; }
  const std::set<Square>& demoted() const { return demoted_; }
  int pawn_total() const { return pawn_total_; }
  const std::optional<Square>& anchor() const { return base_.anchor(); }

  bool opponent_at(Square s) const {
    auto p = base_.piece_at(s);
    return p && p->color != mover_;
  }
  // Pawnspace membership for a given king placement: on the board and not
  // held by the opponent or the king itself.
  bool in_pawnspace(Square s, Square king_at) const {
    return board().has_cell(s) && !opponent_at(s) && s != king_at;
  }

  Configuration initial_config() const;

  // Rebuilds a full GameState from a configuration of this view. Demoted
  // kings are restored as kings on the row-major-first pawn squares.
  GameState to_state(const Configuration& config) const;

 private:
  GameState base_;
  Color mover_ = Color::White;
  Square pushing_king_;
  std::set<Square> demoted_;
  int pawn_total_ = 0;
};

// Maximal 4-connected regions of squares not occupied by the mover's king
// or any opponent piece.
class Pawnspace {
 public:
  Pawnspace() = default;
  Pawnspace(const SingleKingView& view, Square king_at);

  // Components sorted by their id (= row-major-minimal square); each
  // component's squares are sorted row-major.
  const std::vector<std::vector<Square>>& components() const {
    return components_;
  }
  int component_count() const { return static_cast<int>(components_.size()); }
  // Index of the component containing `s`, or -1.
  int component_of(Square s) const;
  Square component_id(int i) const { return components_[i][0]; }
  int component_area(int i) const {
    return static_cast<int>(components_[i].size());
  }

 private:
  std::vector<std::vector<Square>> components_;
  std::map<Square, int> lookup_;
};

// (king square, signature): the canonical name of an equivalence class of
// configurations of one view. Signature entries are keyed by component id
// and sorted by it.
struct ClassDescriptor {
  Square king;
  std::vector<std::pair<Square, int>> signature;

  int count_for(Square component_id) const;
  std::string to_string() const;  // `king COL ROW; sig (COL,ROW)=COUNT; ...`

  friend bool operator==(const ClassDescriptor&,
                         const ClassDescriptor&) = default;
  friend auto operator<=>(const ClassDescriptor&,
                          const ClassDescriptor&) = default;
};

Pawnspace pawnspace_of(const SingleKingView& view, Square king_at);

ClassDescriptor descriptor_of(const SingleKingView& view,
                              const Configuration& config);

// Classes reachable with one unit king step, per the weak-composition rule:
// a step into a component with no empty square is skipped; merged
// components sum their counts; a split component spawns one descriptor per
// weak composition of its count with parts bounded by the part areas.
// Deterministic: directions N,E,S,W, compositions lexicographic.
std::set<ClassDescriptor> class_neighbors(const SingleKingView& view,
                                          const ClassDescriptor& c);

// First direction (N,E,S,W order) whose boundary ray from the king can be
// fully filled within the class and ends at an opponent piece with no rail
// and no anchored king in the way.
std::optional<Direction> is_winning_class(const SingleKingView& view,
                                          const ClassDescriptor& c);

// Pawn-only moves transforming `from` into `to` without leaving their
// common class; length <= n^2 - 1. Throws std::invalid_argument when the
// descriptors differ.
std::vector<Move> realize_in_class(const SingleKingView& view,
                                   const Configuration& from,
                                   const Configuration& to);

}  // namespace pushfight
