#pragma once

#include "pushfight/geometry.hpp"

namespace pushfight {

// The reduction constructions work in 1-based math coordinates: x grows
// rightward, y grows upward, origin at the bottom-left square. This is the
// single place that converts them to board squares (0-based col/row with
// row 0 on top).
struct MathGrid {
  int width = 0;   // number of columns
  int height = 0;  // number of rows

  constexpr Square to_square(int x, int y) const {
    return Square{x - 1, height - y};
  }
};

}  // namespace pushfight
