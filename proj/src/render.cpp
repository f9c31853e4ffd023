#include "pushfight/render.hpp"

#include <sstream>

namespace pushfight {

namespace {

char cell_glyph(const GameState& state, Square s) {
  auto piece = state.piece_at(s);
  if (!piece) return '.';
  bool anchored = state.is_anchored(s);
  if (piece->color == Color::White) {
    if (piece->kind == PieceKind::Pawn) return 'P';
    return anchored ? 'A' : 'K';
  }
  if (piece->kind == PieceKind::Pawn) return 'p';
  return anchored ? 'a' : 'k';
}

std::string render_ascii(const GameState& state,
                         const std::vector<GadgetRecord>& outline) {
  const Board& board = state.board();
  int lat_rows = 2 * board.rows() + 1;
  int lat_cols = 2 * board.cols() + 1;
  std::vector<std::string> lattice(lat_rows, std::string(lat_cols, ' '));

  for (Square s : board.cells()) {
    int lr = 2 * s.row + 1, lc = 2 * s.col + 1;
    lattice[lr][lc] = cell_glyph(state, s);
    if (board.has_rail(s, Direction::North)) lattice[lr - 1][lc] = '-';
    if (board.has_rail(s, Direction::South)) lattice[lr + 1][lc] = '-';
    if (board.has_rail(s, Direction::West)) lattice[lr][lc - 1] = '|';
    if (board.has_rail(s, Direction::East)) lattice[lr][lc + 1] = '|';
    // Corner ticks around every cell keep the frame readable.
    for (int dr : {-1, 1}) {
      for (int dc : {-1, 1}) lattice[lr + dr][lc + dc] = '+';
    }
  }

  std::ostringstream out;
  for (const std::string& line : lattice) out << line << "\n";
  for (const GadgetRecord& g : outline) {
    out << "GADGET " << g.name << " " << g.col0 << " " << g.row0 << " "
        << g.col1 << " " << g.row1;
    if (!g.meta.empty()) out << " " << g.meta;
    out << "\n";
  }
  return out.str();
}

std::string render_svg(const GameState& state,
                       const std::vector<GadgetRecord>& outline) {
  const Board& board = state.board();
  constexpr int kCell = 32;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << board.cols() * kCell << "\" height=\"" << board.rows() * kCell
      << "\">\n";
  for (Square s : board.cells()) {
    int x = s.col * kCell, y = s.row * kCell;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
        << "\" height=\"" << kCell
        << "\" fill=\"#e8d8b8\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  }
  // Rails as thick boundary segments.
  for (const auto& [sq, dir] : state.board().rails()) {
    int x = sq.col * kCell, y = sq.row * kCell;
    int x1 = x, y1 = y, x2 = x, y2 = y;
    switch (dir) {
      case Direction::North: x2 = x + kCell; break;
      case Direction::South: y1 = y2 = y + kCell; x2 = x + kCell; break;
      case Direction::West: y2 = y + kCell; break;
      case Direction::East: x1 = x2 = x + kCell; y2 = y + kCell; break;
    }
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" stroke=\"#222\" stroke-width=\"4\"/>\n";
  }
  for (const auto& [sq, piece] : state.pieces()) {
    int cx = sq.col * kCell + kCell / 2, cy = sq.row * kCell + kCell / 2;
    const char* fill = piece.color == Color::White ? "#fafafa" : "#333333";
    if (piece.kind == PieceKind::Pawn) {
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
          << kCell / 2 - 5 << "\" fill=\"" << fill
          << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    } else {
      int side = kCell - 10;
      out << "<rect x=\"" << cx - side / 2 << "\" y=\"" << cy - side / 2
          << "\" width=\"" << side << "\" height=\"" << side << "\" fill=\""
          << fill << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    }
    if (state.is_anchored(sq)) {
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
          << kCell / 4 << "\" fill=\"none\" stroke=\"#c00\" "
          << "stroke-width=\"3\"/>\n";
    }
  }
  for (const GadgetRecord& g : outline) {
    int x = g.col0 * kCell, y = g.row0 * kCell;
    int w = (g.col1 - g.col0 + 1) * kCell, h = (g.row1 - g.row0 + 1) * kCell;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
        << "\" height=\"" << h
        << "\" fill=\"none\" stroke=\"#0044cc\" stroke-width=\"2\" "
        << "stroke-dasharray=\"6,3\"/>\n";
    out << "<text x=\"" << x + 3 << "\" y=\"" << y + 12
        << "\" font-size=\"10\" fill=\"#0044cc\">" << g.name << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const GameState& state, RenderFormat format,
                   const std::vector<GadgetRecord>& outline) {
  return format == RenderFormat::Ascii ? render_ascii(state, outline)
                                       : render_svg(state, outline);
}

}  // namespace pushfight
