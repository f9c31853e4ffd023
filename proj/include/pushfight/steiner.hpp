#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pushfight/state.hpp"

namespace pushfight {

struct SteinerPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const SteinerPoint&, const SteinerPoint&) = default;
  friend auto operator<=>(const SteinerPoint&, const SteinerPoint&) = default;
};

// Integer rectilinear Steiner tree instance: points in math coordinates
// plus the length budget.
struct SteinerInstance {
  std::vector<SteinerPoint> points;
  long long ell = 0;
};

// One `x y` pair per line; blank lines ignored.
SteinerInstance parse_points_file(const std::string& text, long long ell);

// Exact minimal rectilinear Steiner tree length for up to 5 points, by
// Dreyfus-Wagner dynamic programming on the Hanan grid graph.
long long steiner_oracle(const std::vector<SteinerPoint>& points);

struct SteinerReduction {
  GameState state;
  uint64_t k = 0;  // ell + 3
  // Translated points (min x = 2, min y = 4, first point has y = 4),
  // in math coordinates of the produced board.
  std::vector<SteinerPoint> translated;
};

// The k-move hardness construction: a rectangular board mostly full of
// white pawns whose only open edge sits below the first point's column;
// the point squares are the holes White must gather to free its king.
SteinerReduction reduce_steiner(const SteinerInstance& instance);

}  // namespace pushfight
