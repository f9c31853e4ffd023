#include "pushfight/game_solver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pushfight/mate1.hpp"
#include "pushfight/pfb.hpp"

namespace pushfight {

TurnExpansion expand_turns(const GameState& state) {
  Color mover = state.to_move();
  TurnExpansion out;

  // All positions reachable with 0..2 moves, deduplicated.
  std::set<GameState> after_moves{state};
  std::deque<std::pair<GameState, int>> queue{{state, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth == 2) continue;
    for (const Move& m : legal_moves(cur, mover)) {
      std::map<Square, Piece> pieces = cur.pieces();
      Piece moved = pieces.at(m.from);
      pieces.erase(m.from);
      pieces[m.to] = moved;
      GameState next(cur.board(), std::move(pieces), cur.anchor());
      if (after_moves.insert(next).second) {
        queue.push_back({std::move(next), depth + 1});
      }
    }
  }

  std::set<GameState> seen;
  for (const GameState& pos : after_moves) {
    for (const Push& push : legal_pushes(pos, mover)) {
      PushResult result = apply_push(pos, push);
      out.has_any_turn = true;
      if (result.ejected) {
        if (result.ejected->color != mover) out.can_win_immediately = true;
        continue;  // terminal either way
      }
      if (seen.insert(result.new_state).second) {
        out.ongoing.push_back(result.new_state);
      }
    }
  }
  return out;
}

namespace {

GameValue win_value(Color mover) {
  return mover == Color::White ? GameValue::WhiteWins : GameValue::BlackWins;
}
GameValue loss_value(Color mover) {
  return mover == Color::White ? GameValue::BlackWins : GameValue::WhiteWins;
}

struct Graph {
  std::vector<GameState> states;
  std::map<GameState, int> index;
  std::vector<std::vector<int>> successors;
  std::vector<std::vector<int>> predecessors;
  std::vector<uint8_t> immediate_win;
  std::vector<uint8_t> has_turn;
};

Graph explore(const GameState& root, uint64_t state_cap) {
  Graph g;
  g.index.emplace(root, 0);
  g.states.push_back(root);
  for (size_t i = 0; i < g.states.size(); ++i) {
    if (g.states.size() > state_cap) {
      throw ResourceLimitError("who_wins: state cap exceeded");
    }
    TurnExpansion turns = expand_turns(g.states[i]);
    g.successors.emplace_back();
    g.immediate_win.push_back(turns.can_win_immediately ? 1 : 0);
    g.has_turn.push_back(turns.has_any_turn ? 1 : 0);
    for (const GameState& next : turns.ongoing) {
      auto [it, inserted] = g.index.emplace(next, g.states.size());
      if (inserted) {
        g.states.push_back(next);
        if (g.states.size() > state_cap) {
          throw ResourceLimitError("who_wins: state cap exceeded");
        }
      }
      g.successors[i].push_back(it->second);
    }
  }
  g.predecessors.resize(g.states.size());
  for (size_t i = 0; i < g.successors.size(); ++i) {
    for (int s : g.successors[i]) {
      g.predecessors[s].push_back(static_cast<int>(i));
    }
  }
  return g;
}

enum : uint8_t { kUnknown = 0, kMoverWins = 1, kMoverLoses = 2 };

// Serial reference: retrograde worklist propagation from decided states.
void retrograde_serial(const Graph& g, std::vector<uint8_t>& label,
                       std::vector<int>& depth) {
  size_t n = g.states.size();
  label.assign(n, kUnknown);
  depth.assign(n, 0);
  std::vector<int> pending(n, 0);
  std::deque<int> queue;
  for (size_t i = 0; i < n; ++i) {
    pending[i] = static_cast<int>(g.successors[i].size());
    if (!g.has_turn[i]) {
      label[i] = kMoverLoses;
      depth[i] = 0;
      queue.push_back(static_cast<int>(i));
    } else if (g.immediate_win[i]) {
      label[i] = kMoverWins;
      depth[i] = 1;
      queue.push_back(static_cast<int>(i));
    } else if (g.successors[i].empty()) {
      // Every turn ejects one of the mover's own pieces.
      label[i] = kMoverLoses;
      depth[i] = 1;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.predecessors[v]) {
      if (label[u] != kUnknown) continue;
      if (label[v] == kMoverLoses) {
        label[u] = kMoverWins;
        depth[u] = depth[v] + 1;
        queue.push_back(u);
      } else if (--pending[u] == 0) {
        // All ongoing turns reach opponent wins, and no turn wins outright.
        int worst = 0;
        for (int s : g.successors[u]) worst = std::max(worst, depth[s]);
        label[u] = kMoverLoses;
        depth[u] = worst + 1;
        queue.push_back(u);
      }
    }
  }
}

// OpenMP kernel: Jacobi value sweeps to the same fixpoint as the worklist.
void retrograde_parallel(const Graph& g, std::vector<uint8_t>& label,
                         std::vector<int>& depth) {
  size_t n = g.states.size();
  label.assign(n, kUnknown);
  depth.assign(n, 0);
  std::vector<uint8_t> next_label(n);
  std::vector<int> next_depth(n);
  for (size_t i = 0; i < n; ++i) {
    if (!g.has_turn[i]) {
      label[i] = kMoverLoses;
    } else if (g.immediate_win[i]) {
      label[i] = kMoverWins;
      depth[i] = 1;
    } else if (g.successors[i].empty()) {
      label[i] = kMoverLoses;
      depth[i] = 1;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(|| : changed)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      next_label[i] = label[i];
      next_depth[i] = depth[i];
      if (label[i] != kUnknown) continue;
      bool all_wins = true;
      int best_win = -1;
      int worst = 0;
      for (int s : g.successors[i]) {
        if (label[s] == kMoverLoses) {
          int d = depth[s] + 1;
          if (best_win < 0 || d < best_win) best_win = d;
        }
        if (label[s] != kMoverWins) {
          all_wins = false;
        } else {
          worst = std::max(worst, depth[s]);
        }
      }
      if (best_win >= 0) {
        next_label[i] = kMoverWins;
        next_depth[i] = best_win;
        changed = true;
      } else if (all_wins) {
        next_label[i] = kMoverLoses;
        next_depth[i] = worst + 1;
        changed = true;
      }
    }
    label.swap(next_label);
    depth.swap(next_depth);
  }
}

}  // namespace

WhoWinsTable build_who_wins_table(const GameState& root, uint64_t state_cap,
                                  bool parallel) {
  Graph g = explore(root, state_cap);
  std::vector<uint8_t> label;
  std::vector<int> depth;
  if (parallel) {
    retrograde_parallel(g, label, depth);
  } else {
    retrograde_serial(g, label, depth);
  }

  WhoWinsTable table;
  table.states = std::move(g.states);
  table.successors = std::move(g.successors);
  table.immediate_win = std::move(g.immediate_win);
  table.index = std::move(g.index);
  table.values.resize(table.states.size(), GameValue::Draw);
  table.decided.resize(table.states.size(), 0);
  table.depth = depth;
  for (size_t i = 0; i < table.states.size(); ++i) {
    Color mover = table.states[i].to_move();
    if (label[i] == kMoverWins) {
      table.values[i] = win_value(mover);
      table.decided[i] = 1;
    } else if (label[i] == kMoverLoses) {
      table.values[i] = loss_value(mover);
      table.decided[i] = 1;
    }
  }
  return table;
}

SolveResult who_wins(const GameState& root, uint64_t state_cap,
                     bool parallel) {
  WhoWinsTable table = build_who_wins_table(root, state_cap, parallel);
  SolveResult result;
  if (table.decided[0]) {
    result.value = table.values[0];
    result.depth_to_outcome = table.depth[0];
  } else {
    result.value = GameValue::Draw;
  }
  return result;
}

// ---- Gadget trace checking ----------------------------------------------

namespace {

Direction parse_dir_token(const std::string& tok, int line) {
  if (tok == "N") return Direction::North;
  if (tok == "E") return Direction::East;
  if (tok == "S") return Direction::South;
  if (tok == "W") return Direction::West;
  throw ParseError(line, 1, "bad direction `" + tok + "`");
}

}  // namespace

TraceAssertion parse_trace_assertions(const std::string& text) {
  TraceAssertion out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_region = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "region") {
      if (!(ls >> out.col0 >> out.row0 >> out.col1 >> out.row1)) {
        throw ParseError(line_no, 1, "expected `region c0 r0 c1 r1`");
      }
      have_region = true;
      continue;
    }
    TraceStep step;
    step.line = line_no;
    if (word == "step") {
      int n;
      if (!(ls >> n)) throw ParseError(line_no, 1, "expected `step N`");
      step.kind = "step";
      step.args = {n};
      out.steps.push_back(step);
      continue;
    }
    if (word == "do") {
      std::string what;
      ls >> what;
      if (what == "push" || what == "black-push") {
        int c, r;
        std::string d;
        if (!(ls >> c >> r >> d)) {
          throw ParseError(line_no, 1, "expected `do push COL ROW DIR`");
        }
        step.kind = what;
        step.pushes.push_back(Push{{c, r}, parse_dir_token(d, line_no)});
      } else if (what == "white-move" || what == "black-move") {
        int a, b, c, d;
        if (!(ls >> a >> b >> c >> d)) {
          throw ParseError(line_no, 1, "expected `do move C R C R`");
        }
        step.kind = what;
        step.args = {a, b, c, d};
      } else {
        throw ParseError(line_no, 1, "unknown action `" + what + "`");
      }
      out.steps.push_back(step);
      continue;
    }
    if (word == "expect") {
      std::string what;
      ls >> what;
      step.kind = "expect-" + what;
      if (what == "push") {
        int c, r;
        std::string d;
        while (ls >> c >> r >> d) {
          step.pushes.push_back(Push{{c, r}, parse_dir_token(d, line_no)});
        }
      } else if (what == "none") {
        // empty push set
        step.kind = "expect-push";
      } else if (what == "exit") {
        int c, r;
        if (!(ls >> c >> r)) throw ParseError(line_no, 1, "expected `C R`");
        step.args = {c, r};
      } else if (what == "ejected") {
        int row, count;
        if (!(ls >> row >> count)) {
          throw ParseError(line_no, 1, "expected `ROW COUNT`");
        }
        step.args = {row, count};
      } else if (what == "stuck" || what == "restored") {
        // no arguments
      } else if (what == "win") {
        int c, r;
        std::string d;
        if (!(ls >> c >> r >> d)) {
          throw ParseError(line_no, 1, "expected `C R D`");
        }
        step.pushes.push_back(Push{{c, r}, parse_dir_token(d, line_no)});
      } else {
        throw ParseError(line_no, 1, "unknown expectation `" + what + "`");
      }
      out.steps.push_back(step);
      continue;
    }
    throw ParseError(line_no, 1, "unknown directive `" + word + "`");
  }
  if (!have_region) throw ParseError(line_no + 1, 1, "missing `region` line");
  return out;
}

namespace {

bool in_box(const TraceAssertion& a, Square s) {
  return s.col >= a.col0 && s.col <= a.col1 && s.row >= a.row0 &&
         s.row <= a.row1;
}

std::map<Square, Piece> region_contents(const TraceAssertion& a,
                                        const GameState& state) {
  std::map<Square, Piece> out;
  for (const auto& [sq, piece] : state.pieces()) {
    if (in_box(a, sq)) out[sq] = piece;
  }
  return out;
}

std::string push_to_string(const Push& p) {
  return "(" + std::to_string(p.king.col) + "," + std::to_string(p.king.row) +
         ")" + direction_char(p.dir);
}

}  // namespace

TraceReport check_gadget_trace(const GameState& initial,
                               const TraceAssertion& assertion) {
  TraceReport report;
  report.lines.push_back(
      "model: white turns are push-only (moves are consumed by the "
      "move-wasting gadget); black moves and pushes as scripted");

  GameState state = initial;
  std::map<Square, Piece> initial_region = region_contents(assertion, initial);
  std::map<int, int> ejected_by_row;

  auto fail = [&](int line, const std::string& msg) {
    report.passed = false;
    report.lines.push_back("FAIL line " + std::to_string(line) + ": " + msg);
  };
  auto note = [&](const std::string& msg) { report.lines.push_back(msg); };

  auto do_push = [&](const Push& push, int line) {
    // The moved pieces are the king plus the contiguous occupied run ahead
    // of it; one square of displacement each.
    std::vector<Square> moved{push.king};
    for (Square s = push.king.neighbor(push.dir);
         state.board().has_cell(s) && state.occupied(s);
         s = s.neighbor(push.dir)) {
      moved.push_back(s);
    }
    try {
      PushResult result = apply_push(state, push);
      state = result.new_state;
    } catch (const RulesError& e) {
      fail(line, std::string("push rejected: ") + e.what());
      return;
    }
    for (Square s : moved) {
      if (in_box(assertion, s) && !in_box(assertion, s.neighbor(push.dir))) {
        ejected_by_row[s.row] += 1;
      }
    }
  };

  // Track the white king for `exit`/`stuck` expectations.
  auto white_king = [&]() -> std::optional<Square> {
    for (const auto& [sq, piece] : state.pieces()) {
      if (piece.color == Color::White && piece.kind == PieceKind::King) {
        return sq;
      }
    }
    return std::nullopt;
  };

  int current_step = 0;
  for (const TraceStep& step : assertion.steps) {
    if (step.kind == "step") {
      current_step = step.args[0];
      continue;
    }
    std::string where = "step " + std::to_string(current_step) + ", line " +
                        std::to_string(step.line);
    if (step.kind == "push") {
      do_push(step.pushes[0], step.line);
      continue;
    }
    if (step.kind == "black-push") {
      do_push(step.pushes[0], step.line);
      continue;
    }
    if (step.kind == "white-move" || step.kind == "black-move") {
      Color mover =
          step.kind == "white-move" ? Color::White : Color::Black;
      Move m{{step.args[0], step.args[1]}, {step.args[2], step.args[3]}};
      if (!legal_moves(state, mover).count(m)) {
        fail(step.line, "illegal scripted move");
        continue;
      }
      std::map<Square, Piece> pieces = state.pieces();
      Piece moved = pieces.at(m.from);
      pieces.erase(m.from);
      pieces[m.to] = moved;
      state = GameState(state.board(), std::move(pieces), state.anchor());
      continue;
    }
    if (step.kind == "expect-push") {
      std::set<Push> expected(step.pushes.begin(), step.pushes.end());
      std::set<Push> actual;
      for (const Push& p : legal_pushes(state, Color::White)) {
        if (in_box(assertion, p.king)) actual.insert(p);
      }
      if (actual != expected) {
        std::string msg = "white pushes differ; actual:";
        for (const Push& p : actual) msg += " " + push_to_string(p);
        msg += "; expected:";
        for (const Push& p : expected) msg += " " + push_to_string(p);
        fail(step.line, msg);
      } else {
        note(where + ": push set ok");
      }
      continue;
    }
    if (step.kind == "expect-stuck") {
      std::set<Push> actual;
      for (const Push& p : legal_pushes(state, Color::White)) {
        if (in_box(assertion, p.king)) actual.insert(p);
      }
      if (!actual.empty()) {
        std::string msg = "expected no white pushes; actual:";
        for (const Push& p : actual) msg += " " + push_to_string(p);
        fail(step.line, msg);
      } else {
        note(where + ": dead end confirmed");
      }
      continue;
    }
    if (step.kind == "expect-exit") {
      Square want{step.args[0], step.args[1]};
      auto king = white_king();
      if (!king || !(*king == want)) {
        fail(step.line,
             "king at " + (king ? king->to_string() : "?") + ", expected " +
                 want.to_string());
      } else {
        note(where + ": exit ok");
      }
      continue;
    }
    if (step.kind == "expect-ejected") {
      int row = step.args[0], want = step.args[1];
      int got = ejected_by_row.count(row) ? ejected_by_row[row] : 0;
      if (got != want) {
        fail(step.line, "row " + std::to_string(row) + " ejected " +
                            std::to_string(got) + ", expected " +
                            std::to_string(want));
      } else {
        note(where + ": ejection count ok");
      }
      continue;
    }
    if (step.kind == "expect-win") {
      if (!is_winning_push(state, Color::White, step.pushes[0])) {
        fail(step.line, "push " + push_to_string(step.pushes[0]) +
                            " is not winning for white");
      } else {
        note(where + ": winning push ok");
      }
      continue;
    }
    if (step.kind == "expect-restored") {
      if (region_contents(assertion, state) != initial_region) {
        fail(step.line, "region contents differ from the initial state");
      } else {
        note(where + ": region restored");
      }
      continue;
    }
  }
  return report;
}

}  // namespace pushfight
