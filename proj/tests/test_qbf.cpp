#include <map>

#include "doctest.h"
#include "pushfight/pfb.hpp"
#include "pushfight/qbf.hpp"

using namespace pushfight;

namespace {

const char* kFig7 =
    "p cnf 2 2\n"
    "a 1 0\n"
    "e 2 0\n"
    "1 -2 0\n"
    "-1 2 0\n";

bool boxes_disjoint(const GadgetRecord& a, const GadgetRecord& b) {
  return a.col1 < b.col0 || b.col1 < a.col0 || a.row1 < b.row0 ||
         b.row1 < a.row0;
}

}  // namespace

TEST_CASE("parse_qdimacs accepts the two-variable example") {
  QbfFormula f = parse_qdimacs(kFig7);
  REQUIRE(f.prefix.size() == 2);
  CHECK(f.prefix[0].quantifier == Quantifier::ForAll);
  CHECK(f.prefix[0].var == 1);
  CHECK(f.prefix[1].quantifier == Quantifier::Exists);
  CHECK(f.prefix[1].var == 2);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -2});
  CHECK(f.clauses[1] == std::vector<int>{-1, 2});
}

TEST_CASE("parse_qdimacs rejects bad input") {
  CHECK_THROWS_AS(parse_qdimacs("p cnf 4 1\na 1 2 3 4 0\n1 2 3 4 0\n"),
                  ParseError);  // clause too wide
  CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\n1 2 0\n"),
                  ParseError);  // unquantified variable
  CHECK_THROWS_AS(parse_qdimacs("c nothing\n"), ParseError);  // no header
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n1\n"),
                  ParseError);  // missing 0
  CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\n0\n"),
                  ParseError);  // empty clause
}

TEST_CASE("layout sidecar round-trips") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  std::string text = serialize_layout(red.layout);
  auto parsed = parse_layout(text);
  REQUIRE(parsed.size() == red.layout.size());
  for (size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].name == red.layout[i].name);
    CHECK(parsed[i].col0 == red.layout[i].col0);
    CHECK(parsed[i].meta == red.layout[i].meta);
  }
}

TEST_CASE("reduction of the two-variable formula has the right inventory") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);

  std::map<std::string, int> counts;
  for (const GadgetRecord& g : red.layout) counts[g.name] += 1;
  CHECK(counts["universal_left"] == 1);
  CHECK(counts["universal_right"] == 1);
  CHECK(counts["existential"] == 1);
  CHECK(counts["bridge"] == 1);
  CHECK(counts["clause"] == 2);
  CHECK(counts["reward"] == 1);
  CHECK(counts["move_wasting"] == 1);
  CHECK(counts["connection"] == 4);  // one hole per clause literal
  // p = 2; budgets: universal rows 3 and 1, existential rows 3 and 2.
  // Each literal occurs once, so overflow = (3-1)+(1-1)+(3-1)+(2-1) = 5.
  CHECK(counts["overflow"] == 5);

  // Exactly one black king, anchored, so White is to move.
  CHECK(red.state.count(Color::Black, PieceKind::King) == 1);
  CHECK(red.state.count(Color::White, PieceKind::King) == 1);
  REQUIRE(red.state.anchor().has_value());
  CHECK(red.state.piece_at(*red.state.anchor())->color == Color::Black);
  CHECK(red.state.to_move() == Color::White);

  // Black pawns: one per universal variable plus the reward target.
  CHECK(red.state.count(Color::Black, PieceKind::Pawn) == 2);
}

TEST_CASE("gadget boxes are pairwise disjoint") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  for (size_t i = 0; i < red.layout.size(); ++i) {
    for (size_t j = i + 1; j < red.layout.size(); ++j) {
      CAPTURE(red.layout[i].name);
      CAPTURE(red.layout[j].name);
      CHECK(boxes_disjoint(red.layout[i], red.layout[j]));
    }
  }
}

TEST_CASE("reduction board round-trips through PFB text") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  GameState reparsed = parse_board(serialize_board(red.state));
  CHECK(reparsed == red.state);
}

TEST_CASE("reduction is deterministic") {
  QbfFormula f = parse_qdimacs(kFig7);
  CHECK(serialize_board(reduce_q3sat(f).state) ==
        serialize_board(reduce_q3sat(f).state));
}

TEST_CASE("exactly three open edges: reward top plus move-wasting pair") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  auto open = red.state.board().open_edges();
  REQUIRE(open.size() == 3);
  int north_top = 0, north_mw = 0;
  for (const auto& [sq, dir] : open) {
    REQUIRE(dir == Direction::North);
    if (sq.row == 0) ++north_top;  // board top row = reward opening
    else ++north_mw;
  }
  CHECK(north_top == 1);
  CHECK(north_mw == 2);
}

TEST_CASE("hole budgets per literal row match the gadget requirement") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  // Recount holes (empty squares) in each literal row right of the gadget:
  // row budgets are p+1 for the lower row, p (existential) or p-1
  // (universal) for the upper row, counting the universal toggle hole.
  const GameState& s = red.state;
  int rows = s.board().rows();
  int p = 2;

  // Variable 1 (universal, bottom band): math rows 4 and 5.
  auto row_holes = [&](int math_y, int from_col) {
    int row = rows - math_y;
    int holes = 0;
    for (int col = from_col; col < s.board().cols(); ++col) {
      if (s.board().has_cell({col, row}) && !s.occupied({col, row})) ++holes;
    }
    return holes;
  };
  // Gadget 1 spans math cols 1..p+6 = 1..8 (universal). The lower row
  // carries its p+1 budget plus the toggle hole the committing push takes;
  // the upper row's toggle square starts occupied by the black pawn.
  CHECK(row_holes(4, 8) == p + 2);
  CHECK(row_holes(5, 8) == p - 1);
  // Gadget 2 (existential) sits at math cols 7..13, rows 9..13.
  CHECK(row_holes(9, 13) == p + 1);
  CHECK(row_holes(10, 13) == p);
}

TEST_CASE("vacuous formula: no clause gadgets, bridge feeds the reward") {
  QbfFormula f;
  f.prefix = {{Quantifier::Exists, 1}};
  Q3SatReduction red = reduce_q3sat(f);
  std::map<std::string, int> counts;
  for (const GadgetRecord& g : red.layout) counts[g.name] += 1;
  CHECK(counts["clause"] == 0);
  CHECK(counts["existential"] == 1);
  CHECK(counts["reward"] == 1);
  CHECK(counts["connection"] == 0);
  GameState reparsed = parse_board(serialize_board(red.state));
  CHECK(reparsed == red.state);
}

TEST_CASE("every square is gadget, recorded hole, or white-pawn fill") {
  QbfFormula f = parse_qdimacs(kFig7);
  Q3SatReduction red = reduce_q3sat(f);
  auto inside = [&](const GadgetRecord& g, Square s) {
    return s.col >= g.col0 && s.col <= g.col1 && s.row >= g.row0 &&
           s.row <= g.row1;
  };
  for (Square s : red.state.board().cells()) {
    bool in_gadget = false;
    for (const GadgetRecord& g : red.layout) {
      if (inside(g, s)) in_gadget = true;
    }
    if (in_gadget) continue;
    // Anything outside every box must be a white pawn (sea).
    auto piece = red.state.piece_at(s);
    REQUIRE(piece.has_value());
    CHECK(piece->color == Color::White);
    CHECK(piece->kind == PieceKind::Pawn);
  }
}
