#pragma once

// Independent oracles used to cross-check the library. These deliberately
// reimplement the logic with different algorithms (and stay out of the main
// library) so they can catch implementation-path mistakes.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pushfight/class_space.hpp"
#include "pushfight/rules.hpp"
#include "pushfight/state.hpp"

namespace pushfight::oracle {

// Destination set for the piece on `from` via an independent BFS flood fill.
std::set<Square> reachable_destinations(const GameState& state, Square from);

// Legal pushes by per-direction simulation: replay the displacement naively
// square by square and validate the result.
std::set<Push> naive_pushes(const GameState& state, Color mover);

// Pawnspace component partition via union-find over adjacent square pairs.
std::vector<std::set<Square>> union_find_components(const SingleKingView& view,
                                                    Square king_at);

// All configurations reachable from `start` by single moves (naive BFS over
// raw configurations).
std::set<Configuration> reachable_configs(const SingleKingView& view,
                                          const Configuration& start);

// True iff the configuration allows an immediately winning push (direct
// simulation over the rebuilt state).
bool config_has_winning_push(const SingleKingView& view,
                             const Configuration& config);

// Naive unbounded mate-in-1: BFS over full configurations for each pushing
// king; no equivalence classes.
bool naive_unbounded_winnable(const GameState& state);

// Naive c-move mate-in-1: depth-limited enumeration of move sequences
// (raw sequences, not configurations) followed by a push test.
bool naive_c_move_winnable(const GameState& state, int c);

// Exact rectilinear Steiner minimal tree by brute force over unit-edge
// subsets of the integer grid spanned by the points. Only feasible for a
// tiny bounding box.
long long brute_force_steiner(const std::vector<std::pair<int, int>>& points);

}  // namespace pushfight::oracle
