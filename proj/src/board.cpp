#include "pushfight/board.hpp"

#include <stdexcept>

namespace pushfight {

Board::Board(int rows, int cols, std::vector<uint8_t> cell_mask,
             std::set<Edge> rails)
    : rows_(rows), cols_(cols), cell_mask_(std::move(cell_mask)),
      rails_(std::move(rails)) {
  if (rows_ < 0 || cols_ < 0 ||
      cell_mask_.size() != static_cast<size_t>(rows_) * cols_) {
    throw std::invalid_argument("board: cell mask does not match dimensions");
  }
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      Square s{c, r};
      if (cell_mask_[index(s)]) cells_.push_back(s);
    }
  }
  area_ = static_cast<int>(cells_.size());
  if (area_ < 1) throw std::invalid_argument("board: needs at least one cell");
  for (const auto& [sq, dir] : rails_) {
    if (!is_boundary_edge(sq, dir)) {
      throw std::invalid_argument("board: rail on non-boundary edge at " +
                                  sq.to_string() + direction_char(dir));
    }
  }
}

Board Board::with_all_rails(int rows, int cols, std::vector<uint8_t> cell_mask,
                            const std::set<Edge>& open_edges) {
  Board probe(rows, cols, cell_mask, {});
  std::set<Edge> rails;
  for (Square s : probe.cells()) {
    for (Direction d : all_directions) {
      if (probe.is_boundary_edge(s, d) && !open_edges.count({s, d})) {
        rails.insert({s, d});
      }
    }
  }
  for (const Edge& e : open_edges) {
    if (!probe.is_boundary_edge(e.first, e.second)) {
      throw std::invalid_argument("board: opened edge is not a boundary edge");
    }
  }
  return Board(rows, cols, std::move(cell_mask), std::move(rails));
}

std::vector<Edge> Board::open_edges() const {
  std::vector<Edge> out;
  for (Square s : cells_) {
    for (Direction d : all_directions) {
      if (is_boundary_edge(s, d) && !has_rail(s, d)) out.push_back({s, d});
    }
  }
  return out;
}

}  // namespace pushfight
