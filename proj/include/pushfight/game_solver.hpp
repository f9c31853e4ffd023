#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pushfight/rules.hpp"

namespace pushfight {

enum class GameValue : uint8_t { WhiteWins, BlackWins, Draw };

struct SolveResult {
  GameValue value = GameValue::Draw;
  std::optional<int> depth_to_outcome;  // plies, for decided positions
};

// The solved reachable game graph; exposed so tests can check the
// retrograde fixpoint and symmetry properties.
struct WhoWinsTable {
  std::vector<GameState> states;          // index -> state
  std::vector<GameValue> values;          // index -> value (mover-relative
                                          // mapped to colors)
  std::vector<uint8_t> decided;           // 0 = draw (cycle)
  std::vector<int> depth;                 // plies to forced outcome
  std::vector<std::vector<int>> successors;
  std::vector<uint8_t> immediate_win;     // mover can eject an opponent piece
  std::map<GameState, int> index;
};

// Full-turn successor states (visited-set BFS over up-to-two moves, then
// every legal push). Terminal turns (ejections) are reported as outcomes.
struct TurnExpansion {
  std::vector<GameState> ongoing;     // deduplicated successor states
  bool can_win_immediately = false;   // some turn ejects an opponent piece
  bool has_any_turn = false;          // mover has at least one legal push
};

TurnExpansion expand_turns(const GameState& state);

// Exhaustive backward induction over the states reachable from `root` with
// two-move turns. Positions neither side can force are draws. Throws
// ResourceLimitError (from mate1.hpp) when more than `state_cap` states are
// reachable. `parallel` selects the OpenMP value-sweep kernel; the serial
// worklist is the reference implementation.
WhoWinsTable build_who_wins_table(const GameState& root, uint64_t state_cap,
                                  bool parallel);

SolveResult who_wins(const GameState& root, uint64_t state_cap = 10'000'000,
                     bool parallel = true);

// ---- Gadget trace checking ----------------------------------------------

// A scripted traversal of one board region with per-step expectations.
// White turns are modeled as a bare push (the move-wasting gadget consumes
// White's moves elsewhere); Black may move and push where scripted.
struct TraceStep {
  int line = 0;         // source line in the assertion file
  std::string kind;     // action or expectation keyword
  std::vector<int> args;
  std::vector<Push> pushes;  // for `expect push` sets
};

struct TraceAssertion {
  // Inclusive region box in board coordinates.
  int col0 = 0, row0 = 0, col1 = 0, row1 = 0;
  std::vector<TraceStep> steps;
};

TraceAssertion parse_trace_assertions(const std::string& text);

struct TraceReport {
  bool passed = true;
  std::vector<std::string> lines;  // log, one entry per step/expectation
};

// Runs the scripted actions against `state`, checking each expectation:
// the exact set of White's legal pushes, king exit squares, per-row counts
// of pieces pushed out of the region, dead ends, winning pushes, and
// restoration of the region's initial contents.
TraceReport check_gadget_trace(const GameState& state,
                               const TraceAssertion& assertion);

}  // namespace pushfight
