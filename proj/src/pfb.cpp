#include "pushfight/pfb.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace pushfight {

namespace {

struct Glyph {
  bool is_cell = false;
  std::optional<Piece> piece;
  bool anchored = false;
};

std::optional<Glyph> decode_glyph(char ch) {
  switch (ch) {
    case '#': return Glyph{false, std::nullopt, false};
    case '.': return Glyph{true, std::nullopt, false};
    case 'P': return Glyph{true, Piece{Color::White, PieceKind::Pawn}, false};
    case 'K': return Glyph{true, Piece{Color::White, PieceKind::King}, false};
    case 'A': return Glyph{true, Piece{Color::White, PieceKind::King}, true};
    case 'p': return Glyph{true, Piece{Color::Black, PieceKind::Pawn}, false};
    case 'k': return Glyph{true, Piece{Color::Black, PieceKind::King}, false};
    case 'a': return Glyph{true, Piece{Color::Black, PieceKind::King}, true};
    default: return std::nullopt;
  }
}

char encode_glyph(const GameState& state, Square s) {
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

std::optional<Direction> decode_direction(const std::string& s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'N': return Direction::North;
    case 'E': return Direction::East;
    case 'S': return Direction::South;
    case 'W': return Direction::West;
    default: return std::nullopt;
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

int parse_header_int(const std::string& line, const std::string& key,
                     int line_no) {
  std::istringstream iss(line);
  std::string word;
  long value = -1;
  if (!(iss >> word) || word != key || !(iss >> value) || value < 0 ||
      (iss >> word)) {
    throw ParseError(line_no, 1, "expected `" + key + " N`");
  }
  return static_cast<int>(value);
}

}  // namespace

GameState parse_board(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  size_t ln = 0;
  auto next_line = [&]() -> const std::string& {
    if (ln >= lines.size()) {
      throw ParseError(static_cast<int>(lines.size() + 1), 1,
                       "unexpected end of input");
    }
    return lines[ln++];
  };

  if (next_line() != "PFB v1") throw ParseError(1, 1, "expected `PFB v1`");
  int rows = parse_header_int(next_line(), "rows", 2);
  int cols = parse_header_int(next_line(), "cols", 3);
  if (rows < 1 || cols < 1) throw ParseError(2, 1, "rows/cols must be >= 1");

  std::vector<uint8_t> cell_mask(static_cast<size_t>(rows) * cols, 0);
  std::map<Square, Piece> pieces;
  std::optional<Square> anchor;

  for (int r = 0; r < rows; ++r) {
    int line_no = static_cast<int>(ln) + 1;
    const std::string& line = next_line();
    if (static_cast<int>(line.size()) != cols) {
      throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                       "grid row has wrong width");
    }
    for (int c = 0; c < cols; ++c) {
      auto glyph = decode_glyph(line[c]);
      if (!glyph) {
        throw ParseError(line_no, c + 1,
                         std::string("unknown glyph `") + line[c] + "`");
      }
      Square sq{c, r};
      if (glyph->is_cell) cell_mask[static_cast<size_t>(r) * cols + c] = 1;
      if (glyph->piece) pieces[sq] = *glyph->piece;
      if (glyph->anchored) {
        if (anchor) throw ParseError(line_no, c + 1, "two anchors");
        anchor = sq;
      }
    }
  }

  std::set<Edge> open_edges;
  Board probe(rows, cols, cell_mask, {});
  while (ln < lines.size()) {
    int line_no = static_cast<int>(ln) + 1;
    const std::string& line = next_line();
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string word, dir_word;
    long col = -1, row = -1;
    if (!(iss >> word) || word != "open" || !(iss >> col >> row >> dir_word) ||
        (iss >> word)) {
      throw ParseError(line_no, 1, "expected `open COL ROW DIR`");
    }
    auto dir = decode_direction(dir_word);
    if (!dir) throw ParseError(line_no, 1, "direction must be N, E, S or W");
    Square sq{static_cast<int>(col), static_cast<int>(row)};
    if (!probe.has_cell(sq)) {
      throw ParseError(line_no, 1, "open line names a non-board square");
    }
    if (!probe.is_boundary_edge(sq, *dir)) {
      throw ParseError(line_no, 1, "open line names an interior edge");
    }
    open_edges.insert({sq, *dir});
  }

  Board board = Board::with_all_rails(rows, cols, std::move(cell_mask),
                                      open_edges);
  try {
    return GameState(std::move(board), std::move(pieces), anchor);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
}

std::string serialize_board(const GameState& state) {
  const Board& board = state.board();
  std::ostringstream out;
  out << "PFB v1\n";
  out << "rows " << board.rows() << "\n";
  out << "cols " << board.cols() << "\n";
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      Square s{c, r};
      out << (board.has_cell(s) ? encode_glyph(state, s) : '#');
    }
    out << "\n";
  }
  // open_edges() already yields canonical order: row-major square, then
  // direction in N,E,S,W order.
  for (const Edge& e : board.open_edges()) {
    out << "open " << e.first.col << " " << e.first.row << " "
        << direction_char(e.second) << "\n";
  }
  return out.str();
}

}  // namespace pushfight
