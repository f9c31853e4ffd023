#include <deque>
#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pushfight/class_space.hpp"
#include "test_util.hpp"

using namespace pushfight;
using testutil::grid_state;

namespace {

std::set<Square> pawn_squares(const SingleKingView& view,
                              const Configuration& c) {
  return c.pawns;
}

// Groups reachable configurations by descriptor.
std::map<ClassDescriptor, std::set<Configuration>> classes_of(
    const SingleKingView& view) {
  std::map<ClassDescriptor, std::set<Configuration>> groups;
  for (const Configuration& c :
       oracle::reachable_configs(view, view.initial_config())) {
    groups[descriptor_of(view, c)].insert(c);
  }
  return groups;
}

}  // namespace

TEST_CASE("pawnspace of an empty 2x2 with the king in a corner") {
  GameState s = grid_state({"K.", ".."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  Pawnspace ps = pawnspace_of(view, {0, 0});
  REQUIRE(ps.component_count() == 1);
  CHECK(ps.component_area(0) == 3);
  CHECK(ps.component_id(0) == Square{1, 0});
}

TEST_CASE("an opponent wall splits the pawnspace") {
  GameState s = grid_state({"K.p..", "..p..", "..p.."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  Pawnspace ps = pawnspace_of(view, {0, 0});
  REQUIRE(ps.component_count() == 2);
  CHECK(ps.component_id(0) == Square{1, 0});
  CHECK(ps.component_id(1) == Square{3, 0});
  CHECK(ps.component_area(0) == 5);
  CHECK(ps.component_area(1) == 6);
}

TEST_CASE("components match the union-find oracle on random 5x5 boards") {
  std::mt19937 rng(99);
  const char glyphs[] = {'.', '.', '.', 'p', 'k', 'P'};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> rows(5, std::string(5, '.'));
    for (auto& row : rows) {
      for (char& ch : row) ch = glyphs[rng() % 6];
    }
    rows[0][0] = 'K';
    GameState s = grid_state(rows);
    SingleKingView view = SingleKingView::make(s, {0, 0});
    Pawnspace ps = pawnspace_of(view, {0, 0});
    auto want = oracle::union_find_components(view, {0, 0});
    REQUIRE(static_cast<size_t>(ps.component_count()) == want.size());
    for (int i = 0; i < ps.component_count(); ++i) {
      std::set<Square> got(ps.components()[i].begin(),
                           ps.components()[i].end());
      CHECK(got == want[i]);
    }
  }
}

TEST_CASE("descriptor counts sum to the pawn total") {
  GameState s = grid_state({"KPP.", "p.P.", "...."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  ClassDescriptor d = descriptor_of(view, view.initial_config());
  int total = 0;
  for (const auto& [id, count] : d.signature) total += count;
  CHECK(total == view.pawn_total());
  CHECK(d.king == Square{0, 0});
}

TEST_CASE("moving one pawn within a component keeps the descriptor") {
  GameState s = grid_state({"KP..", "....", "..p."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  Configuration a = view.initial_config();
  Configuration b = a;
  b.pawns.erase({1, 0});
  b.pawns.insert({3, 2});  // same component
  CHECK(descriptor_of(view, a) == descriptor_of(view, b));
}

TEST_CASE("descriptors partition the reachable set exactly (3x4 exhaustive)") {
  GameState s = grid_state({"KPP.", "p..p", ".P.."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  auto groups = classes_of(view);
  // Every configuration in one group realizes the shared descriptor, and
  // distinct groups have distinct descriptors (by construction of the map);
  // check that within each group all configurations have equal king and
  // per-component counts, and that group sizes sum to the reachable count.
  size_t total = 0;
  for (const auto& [desc, configs] : groups) {
    total += configs.size();
    for (const Configuration& c : configs) {
      CHECK(descriptor_of(view, c) == desc);
    }
  }
  CHECK(total == oracle::reachable_configs(view, view.initial_config()).size());
}

TEST_CASE("corridor king steps keep the signature") {
  // Single-row corridor: no split or merge is possible.
  GameState s = grid_state({"K.P.p"});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  ClassDescriptor d = descriptor_of(view, view.initial_config());
  auto neighbors = class_neighbors(view, d);
  REQUIRE(neighbors.size() == 1);
  CHECK(neighbors.begin()->king == Square{1, 0});
  int total = 0;
  for (const auto& [id, count] : neighbors.begin()->signature) total += count;
  CHECK(total == 1);
}

TEST_CASE("splitting a 0-pawn component yields one neighbor per direction") {
  // King in the middle of a plus shape with no pawns: stepping any
  // direction splits the space, but every composition of 0 is (0,...,0).
  GameState s = grid_state({".....", ".....", "..K..", ".....", "....."});
  SingleKingView view = SingleKingView::make(s, {2, 2});
  ClassDescriptor d = descriptor_of(view, view.initial_config());
  auto neighbors = class_neighbors(view, d);
  CHECK(neighbors.size() == 4);  // one per direction
}

TEST_CASE("neighbor step into a full component is skipped") {
  // The pocket right of the king holds as many pawns as squares.
  GameState s = grid_state({"KPp", "PPp", "ppp"});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  ClassDescriptor d = descriptor_of(view, view.initial_config());
  CHECK(class_neighbors(view, d).empty());
}

TEST_CASE("class_neighbors matches the brute-force projection on 4x4") {
  std::mt19937 rng(4242);
  const char glyphs[] = {'.', '.', 'P', 'p'};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> rows(4, std::string(4, '.'));
    for (auto& row : rows) {
      for (char& ch : row) ch = glyphs[rng() % 4];
    }
    rows[1][2] = 'K';
    GameState s = grid_state(rows);
    SingleKingView view = SingleKingView::make(s, {2, 1});
    auto groups = classes_of(view);

    for (const auto& [desc, configs] : groups) {
      // Oracle: descriptors reachable from any config in the class by one
      // unit king step.
      std::set<ClassDescriptor> want;
      for (const Configuration& c : configs) {
        for (Direction d : all_directions) {
          Square to = c.king.neighbor(d);
          if (!view.board().has_cell(to) || view.opponent_at(to)) continue;
          if (c.pawns.count(to)) continue;  // destination must be empty
          Configuration stepped = c;
          stepped.king = to;
          want.insert(descriptor_of(view, stepped));
        }
      }
      CHECK(class_neighbors(view, desc) == want);
    }
  }
}

TEST_CASE("neighbor relation is symmetric on small fixtures") {
  GameState s = grid_state({"K.P.", ".pP.", "...."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  std::set<ClassDescriptor> seen;
  std::deque<ClassDescriptor> queue;
  ClassDescriptor d0 = descriptor_of(view, view.initial_config());
  seen.insert(d0);
  queue.push_back(d0);
  while (!queue.empty()) {
    ClassDescriptor cur = queue.front();
    queue.pop_front();
    for (const ClassDescriptor& next : class_neighbors(view, cur)) {
      CHECK(class_neighbors(view, next).count(cur) == 1);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  CHECK(seen.size() > 4);
}

TEST_CASE("is_winning_class base cases") {
  SUBCASE("king adjacent to a lone ejectable pawn") {
    GameState s = grid_state({"Kp"}, {{{1, 0}, Direction::East}});
    SingleKingView view = SingleKingView::make(s, {0, 0});
    ClassDescriptor d = descriptor_of(view, view.initial_config());
    auto dir = is_winning_class(view, d);
    REQUIRE(dir.has_value());
    CHECK(*dir == Direction::East);
  }
  SUBCASE("a railed exit edge is not winning") {
    GameState s = grid_state({"Kp"});
    SingleKingView view = SingleKingView::make(s, {0, 0});
    ClassDescriptor d = descriptor_of(view, view.initial_config());
    CHECK_FALSE(is_winning_class(view, d).has_value());
  }
  SUBCASE("anchored king in the ray blocks the win") {
    GameState s = grid_state({"Kap"}, {{{2, 0}, Direction::East}});
    SingleKingView view = SingleKingView::make(s, {0, 0});
    ClassDescriptor d = descriptor_of(view, view.initial_config());
    CHECK_FALSE(is_winning_class(view, d).has_value());
  }
}

TEST_CASE("is_winning_class matches per-class brute force on 3x4") {
  std::mt19937 rng(11000);
  const char glyphs[] = {'.', '.', 'P', 'p'};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> rows(3, std::string(4, '.'));
    for (auto& row : rows) {
      for (char& ch : row) ch = glyphs[rng() % 4];
    }
    rows[2][1] = 'K';
    std::set<Edge> open;
    GameState probe = grid_state(rows);
    for (const Edge& e : probe.board().rails()) {
      if (rng() % 3 == 0) open.insert(e);
    }
    GameState s = grid_state(rows, open);
    SingleKingView view = SingleKingView::make(s, {1, 2});
    for (const auto& [desc, configs] : classes_of(view)) {
      bool oracle_win = false;
      for (const Configuration& c : configs) {
        if (oracle::config_has_winning_push(view, c)) oracle_win = true;
      }
      CHECK(is_winning_class(view, desc).has_value() == oracle_win);
    }
  }
}

TEST_CASE("class count stays within n^4 on small boards") {
  std::mt19937 rng(555);
  const char glyphs[] = {'.', 'P', 'p', '.'};
  for (int trial = 0; trial < 30; ++trial) {
    int rows_n = 1 + static_cast<int>(rng() % 3);
    int cols_n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> rows(rows_n, std::string(cols_n, '.'));
    for (auto& row : rows) {
      for (char& ch : row) ch = glyphs[rng() % 4];
    }
    rows[0][0] = 'K';
    GameState s = grid_state(rows);
    SingleKingView view = SingleKingView::make(s, {0, 0});
    uint64_t n = static_cast<uint64_t>(s.board().area());
    CHECK(classes_of(view).size() <= n * n * n * n);
  }
}

TEST_CASE("realize_in_class basics") {
  GameState s = grid_state({"KP..", "....", "...."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  Configuration from = view.initial_config();
  SUBCASE("identical configurations need no moves") {
    CHECK(realize_in_class(view, from, from).empty());
  }
  SUBCASE("one pawn, adjacent target, one move") {
    Configuration to = from;
    to.pawns.erase({1, 0});
    to.pawns.insert({2, 0});
    auto moves = realize_in_class(view, from, to);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == Move{{1, 0}, {2, 0}});
  }
  SUBCASE("descriptor mismatch is rejected") {
    GameState wall = grid_state({"KP.", "ppp", "..."});
    SingleKingView wview = SingleKingView::make(wall, {0, 0});
    Configuration a = wview.initial_config();
    Configuration b = a;
    b.pawns.erase({1, 0});
    b.pawns.insert({0, 2});  // different component
    CHECK_THROWS_AS(realize_in_class(wview, a, b), std::invalid_argument);
  }
}

TEST_CASE("realize_in_class replays legally within the length bound") {
  std::mt19937 rng(31337);
  const char glyphs[] = {'.', '.', 'P', 'p'};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> rows(4, std::string(4, '.'));
    for (auto& row : rows) {
      for (char& ch : row) ch = glyphs[rng() % 4];
    }
    rows[3][3] = 'K';
    GameState s = grid_state(rows);
    SingleKingView view = SingleKingView::make(s, {3, 3});
    auto groups = classes_of(view);
    // Pick one class with at least two configurations.
    for (const auto& [desc, configs] : groups) {
      if (configs.size() < 2) continue;
      auto it = configs.begin();
      Configuration from = *it;
      Configuration to = *std::next(it, static_cast<long>(rng() % configs.size()));
      auto moves = realize_in_class(view, from, to);
      uint64_t n = static_cast<uint64_t>(s.board().area());
      CHECK(moves.size() <= n * n - 1);
      // Replay through the rules engine.
      GameState cur = view.to_state(from);
      for (const Move& m : moves) {
        REQUIRE(legal_moves(cur, view.mover()).count(m) == 1);
        // The king never moves.
        CHECK_FALSE(m.from == from.king);
        std::map<Square, Piece> pieces = cur.pieces();
        Piece moved = pieces.at(m.from);
        pieces.erase(m.from);
        pieces[m.to] = moved;
        cur = GameState(cur.board(), std::move(pieces), cur.anchor());
        // Intermediate configurations stay in the class.
        Configuration mid;
        mid.king = from.king;
        for (const auto& [sq, piece] : cur.pieces()) {
          if (piece.color == view.mover() && sq != from.king) {
            mid.pawns.insert(sq);
          }
        }
        CHECK(descriptor_of(view, mid) == desc);
      }
      Configuration reached;
      reached.king = from.king;
      for (const auto& [sq, piece] : cur.pieces()) {
        if (piece.color == view.mover() && sq != from.king) {
          reached.pawns.insert(sq);
        }
      }
      CHECK(reached == to);
      ++checked;
      break;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("sealed components never change their count") {
  // A pocket fenced off by opponent pieces keeps its pawn count across all
  // reachable descriptors.
  GameState s = grid_state({"K.p.P", "..p.P", "ppp.."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  Pawnspace ps = pawnspace_of(view, {0, 0});
  // Identify components not adjacent to the king square.
  std::set<Square> adj_ids;
  for (Direction d : all_directions) {
    int i = ps.component_of(Square{0, 0}.neighbor(d));
    if (i >= 0) adj_ids.insert(ps.component_id(i));
  }
  ClassDescriptor d0 = descriptor_of(view, view.initial_config());
  for (const auto& [desc, configs] : classes_of(view)) {
    for (const auto& [id, count] : d0.signature) {
      if (adj_ids.count(id)) continue;
      if (desc.king == d0.king) {
        CHECK(desc.count_for(id) == count);
      }
    }
  }
}

TEST_CASE("descriptor debug dump format") {
  GameState s = grid_state({"KP.p."});
  SingleKingView view = SingleKingView::make(s, {0, 0});
  ClassDescriptor d = descriptor_of(view, view.initial_config());
  CHECK(d.to_string() == "king 0 0; sig (1,0)=1; sig (4,0)=0");
}
