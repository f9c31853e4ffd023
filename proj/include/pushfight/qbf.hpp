#pragma once

#include <string>
#include <vector>

#include "pushfight/state.hpp"

namespace pushfight {

enum class Quantifier : uint8_t { ForAll, Exists };

struct QuantifiedVar {
  Quantifier quantifier;
  int var = 0;  // 1-based DIMACS index
  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

// Fully quantified CNF with at most three literals per clause. Literals are
// DIMACS-signed variable indices; the alternation order is the prefix order.
struct QbfFormula {
  std::vector<QuantifiedVar> prefix;
  std::vector<std::vector<int>> clauses;
};

// QDIMACS subset: `c` comments, `p cnf V C`, quantifier lines
// `a v... 0` / `e v... 0`, clause lines ending in 0. Rejects clauses wider
// than three literals and clause variables missing from the prefix.
QbfFormula parse_qdimacs(const std::string& text);

struct GadgetRecord {
  std::string name;  // move_wasting, existential, universal_left,
                     // universal_right, bridge, clause, reward, connection,
                     // overflow
  // Inclusive box corners in board coordinates (col, row), row0 <= row1.
  int col0 = 0, row0 = 0, col1 = 0, row1 = 0;
  std::string meta;
};

struct Q3SatReduction {
  GameState state;
  std::vector<GadgetRecord> layout;
};

// Builds the who-wins hardness board: a stack of variable gadgets set by
// White (existential) or Black (universal), a bridge, one clause gadget per
// clause checking a column of holes, a reward column open at the top edge,
// overflow holes for unused literal-row budget, and the move-wasting zone
// along the bottom three rows holding the anchored black king.
Q3SatReduction reduce_q3sat(const QbfFormula& formula);

// Sidecar layout format: one `GADGET name col0 row0 col1 row1 [meta]` line
// per record.
std::string serialize_layout(const std::vector<GadgetRecord>& layout);
std::vector<GadgetRecord> parse_layout(const std::string& text);

}  // namespace pushfight
