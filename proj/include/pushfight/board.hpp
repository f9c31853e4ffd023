#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "pushfight/geometry.hpp"

namespace pushfight {

// An edge of the grid, identified by the square it borders and the side.
using Edge = std::pair<Square, Direction>;

// A polyomino board with per-boundary-edge side rails.
//
// Cells live inside a fixed bounding grid (rows x cols). Rails are stored
// per boundary edge; a boundary edge is one whose far side is not a cell.
// Immutable after construction.
class Board {
 public:
  Board() = default;
  Board(int rows, int cols, std::vector<uint8_t> cell_mask,
        std::set<Edge> rails);

  // Builds a board where every boundary edge is railed except `open_edges`.
  static Board with_all_rails(int rows, int cols,
                              std::vector<uint8_t> cell_mask,
                              const std::set<Edge>& open_edges = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int area() const { return area_; }

  bool in_bounds(Square s) const {
    return s.col >= 0 && s.col < cols_ && s.row >= 0 && s.row < rows_;
  }
  bool has_cell(Square s) const {
    return in_bounds(s) && cell_mask_[index(s)] != 0;
  }
  // True iff `s` is a cell and its edge toward `d` leaves the polyomino.
  bool is_boundary_edge(Square s, Direction d) const {
    return has_cell(s) && !has_cell(s.neighbor(d));
  }
  bool has_rail(Square s, Direction d) const {
    return rails_.count({s, d}) != 0;
  }

  // Cells in row-major order.
  const std::vector<Square>& cells() const { return cells_; }
  const std::set<Edge>& rails() const { return rails_; }

  // Boundary edges without a rail, in canonical (row-major square, then
  // N,E,S,W) order.
  std::vector<Edge> open_edges() const;

  size_t index(Square s) const {
    return static_cast<size_t>(s.row) * cols_ + s.col;
  }

  friend bool operator==(const Board& a, const Board& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.cell_mask_ == b.cell_mask_ && a.rails_ == b.rails_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int area_ = 0;
  std::vector<uint8_t> cell_mask_;  // rows_*cols_, 1 = cell
  std::vector<Square> cells_;
  std::set<Edge> rails_;
};

}  // namespace pushfight
