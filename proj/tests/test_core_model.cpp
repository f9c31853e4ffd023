#include "doctest.h"

#include "pushfight/pfb.hpp"
#include "pushfight/render.hpp"
#include "test_util.hpp"

using namespace pushfight;
using testutil::grid_state;

TEST_CASE("square ordering is row-major, top row first") {
  CHECK(Square{3, 0} < Square{0, 1});
  CHECK(Square{0, 1} < Square{1, 1});
  CHECK(Square{2, 2}.neighbor(Direction::North) == Square{2, 1});
  CHECK(Square{2, 2}.neighbor(Direction::South) == Square{2, 3});
  CHECK(Square{2, 2}.neighbor(Direction::East) == Square{3, 2});
  CHECK(Square{2, 2}.neighbor(Direction::West) == Square{1, 2});
}

TEST_CASE("1x1 all-railed king board") {
  GameState s = parse_board("PFB v1\nrows 1\ncols 1\nK\n");
  CHECK(s.board().area() == 1);
  CHECK(s.to_move() == Color::White);
  CHECK(s.piece_at({0, 0})->kind == PieceKind::King);
  CHECK(s.board().has_rail({0, 0}, Direction::North));
  CHECK(s.board().has_rail({0, 0}, Direction::South));
  CHECK(s.board().open_edges().empty());
}

TEST_CASE("turn derivation follows the anchor") {
  GameState none = grid_state({"Kk"});
  CHECK(none.to_move() == Color::White);
  GameState white_anchor = grid_state({"Ak"});
  CHECK(white_anchor.to_move() == Color::Black);
  GameState black_anchor = grid_state({"Ka"});
  CHECK(black_anchor.to_move() == Color::White);
}

TEST_CASE("parse and serialize round-trip") {
  std::string text =
      "PFB v1\n"
      "rows 2\n"
      "cols 3\n"
      "K.p\n"
      "#Pa\n"
      "open 0 0 N\n"
      "open 2 0 E\n";
  GameState s = parse_board(text);
  CHECK(serialize_board(s) == text);
  // parse(serialize(s)) == s
  CHECK(parse_board(serialize_board(s)) == s);
}

TEST_CASE("serialization is canonical for open-edge order") {
  // Same open edges listed in scrambled order normalize on round-trip.
  std::string scrambled =
      "PFB v1\nrows 1\ncols 2\nKp\nopen 1 0 E\nopen 0 0 W\nopen 0 0 N\n";
  std::string canonical =
      "PFB v1\nrows 1\ncols 2\nKp\nopen 0 0 N\nopen 0 0 W\nopen 1 0 E\n";
  CHECK(serialize_board(parse_board(scrambled)) == canonical);
}

TEST_CASE("anchor placement changes the serialization") {
  GameState a = grid_state({"Ak"});
  GameState b = grid_state({"Ka"});
  CHECK(serialize_board(a) != serialize_board(b));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_board("nope\n"), ParseError);
  CHECK_THROWS_AS(parse_board("PFB v1\nrows 1\ncols 2\nK\n"), ParseError);
  CHECK_THROWS_AS(parse_board("PFB v1\nrows 1\ncols 1\nZ\n"), ParseError);
  // Two anchors.
  CHECK_THROWS_AS(parse_board("PFB v1\nrows 1\ncols 2\nAa\n"), ParseError);
  // Open on an interior edge.
  CHECK_THROWS_AS(parse_board("PFB v1\nrows 1\ncols 2\nK.\nopen 0 0 E\n"),
                  ParseError);
  // Open on a non-board square.
  CHECK_THROWS_AS(parse_board("PFB v1\nrows 1\ncols 2\nK#\nopen 1 0 E\n"),
                  ParseError);
  try {
    parse_board("PFB v1\nrows 1\ncols 1\nZ\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("rails only on boundary edges") {
  GameState s = grid_state({"K.", "..", ".p"});
  for (const auto& [sq, dir] : s.board().rails()) {
    CHECK(s.board().is_boundary_edge(sq, dir));
    CHECK_FALSE(s.board().has_cell(sq.neighbor(dir)));
  }
}

TEST_CASE("ascii render of an empty 2x2 board is a framed grid") {
  GameState s = grid_state({"..", ".."});
  std::string expected =
      "+-+-+\n"
      "|. .|\n"
      "+ + +\n"
      "|. .|\n"
      "+-+-+\n";
  CHECK(render(s, RenderFormat::Ascii) == expected);
}

TEST_CASE("render is deterministic") {
  GameState s = grid_state({"KpP", ".ak"});
  CHECK(render(s, RenderFormat::Ascii) == render(s, RenderFormat::Ascii));
  CHECK(render(s, RenderFormat::Svg) == render(s, RenderFormat::Svg));
  CHECK(render(s, RenderFormat::Svg).find("<svg") == 0);
}

TEST_CASE("open edges show as gaps in the ascii frame") {
  GameState s = grid_state({"Kp"}, {{{1, 0}, Direction::East}});
  std::string art = render(s, RenderFormat::Ascii);
  // Right border of the second cell is open.
  CHECK(art.find("|K p \n") != std::string::npos);
}
