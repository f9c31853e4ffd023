#include "pushfight/qbf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pushfight/mathgrid.hpp"
#include "pushfight/pfb.hpp"

namespace pushfight {

QbfFormula parse_qdimacs(const std::string& text) {
  QbfFormula formula;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool prefix_done = false;
  long declared_vars = 0;
  std::set<int> quantified;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, cnf;
      long nclauses;
      if (!(ls >> p >> cnf >> declared_vars >> nclauses) || p != "p" ||
          cnf != "cnf" || declared_vars < 0 || nclauses < 0) {
        throw ParseError(line_no, 1, "expected `p cnf VARS CLAUSES`");
      }
      have_header = true;
      continue;
    }
    std::string head;
    ls >> head;
    if (head == "a" || head == "e") {
      if (prefix_done) {
        throw ParseError(line_no, 1, "quantifier line after clauses");
      }
      Quantifier q = head == "a" ? Quantifier::ForAll : Quantifier::Exists;
      long v;
      bool terminated = false;
      while (ls >> v) {
        if (v == 0) { terminated = true; break; }
        if (v < 0 || v > declared_vars) {
          throw ParseError(line_no, 1, "variable out of range");
        }
        if (!quantified.insert(static_cast<int>(v)).second) {
          throw ParseError(line_no, 1, "variable quantified twice");
        }
        formula.prefix.push_back({q, static_cast<int>(v)});
      }
      if (!terminated) throw ParseError(line_no, 1, "missing terminating 0");
      continue;
    }
    // Clause line; `head` is its first literal.
    prefix_done = true;
    std::vector<int> clause;
    std::istringstream cs(line);
    long lit;
    bool terminated = false;
    while (cs >> lit) {
      if (lit == 0) { terminated = true; break; }
      int var = static_cast<int>(lit < 0 ? -lit : lit);
      if (var > declared_vars) {
        throw ParseError(line_no, 1, "variable out of range");
      }
      if (!quantified.count(var)) {
        throw ParseError(line_no, 1, "unquantified variable in clause");
      }
      // Duplicate literals within a clause carry no weight; drop them.
      if (std::find(clause.begin(), clause.end(), static_cast<int>(lit)) ==
          clause.end()) {
        clause.push_back(static_cast<int>(lit));
      }
    }
    if (!terminated) throw ParseError(line_no, 1, "missing terminating 0");
    if (clause.empty()) throw ParseError(line_no, 1, "empty clause");
    if (clause.size() > 3) {
      throw ParseError(line_no, 1, "clause has more than 3 literals");
    }
    formula.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing `p cnf` header");
  return formula;
}

namespace {

enum class Cell : uint8_t {
  Unset,
  Fill,  // white pawn placed by the final fill pass
  WhitePawn,
  BlackPawn,
  WhiteKing,
  BlackKing,
  Empty,
};

// Paint-once worksheet in math coordinates (x right, y up, 1-based).
class Worksheet {
 public:
  Worksheet(int width, int height, int rect_width)
      : width_(width), height_(height), rect_width_(rect_width),
        cells_(static_cast<size_t>(width) * height, Cell::Unset) {}

  bool exists(int x, int y) const {
    if (x < 1 || x > width_ || y < 1 || y > height_) return false;
    return x <= rect_width_ || y <= 3;  // bottom-right extension is 3 high
  }

  void paint(int x, int y, Cell value) {
    Cell& slot = at(x, y);
    if (slot != Cell::Unset) {
      throw std::logic_error("layout overlap at (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
    }
    slot = value;
  }

  void repaint(int x, int y, Cell expected, Cell value) {
    Cell& slot = at(x, y);
    if (slot != expected) throw std::logic_error("unexpected repaint");
    slot = value;
  }

  Cell get(int x, int y) const {
    return const_cast<Worksheet*>(this)->at(x, y);
  }

  void fill_rest() {
    for (int y = 1; y <= height_; ++y) {
      for (int x = 1; x <= width_; ++x) {
        if (exists(x, y) && at(x, y) == Cell::Unset) at(x, y) = Cell::Fill;
      }
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int rect_width() const { return rect_width_; }

 private:
  Cell& at(int x, int y) {
    if (!exists(x, y)) {
      throw std::logic_error("cell outside board at (" + std::to_string(x) +
                             "," + std::to_string(y) + ")");
    }
    return cells_[static_cast<size_t>(y - 1) * width_ + (x - 1)];
  }

  int width_, height_, rect_width_;
  std::vector<Cell> cells_;
};

constexpr Cell P = Cell::WhitePawn;
constexpr Cell E = Cell::Empty;

// Core variable mechanism, width p+5, height 5, in gadget-local math
// coordinates (pre-entry form: the entry pawn arrives from below or is
// placed by the builder). Column 1 is the entry column; the bottom two rows
// are the literal rows; the king exits upward through column p+4.
std::map<std::pair<int, int>, Cell> core_cells(int p) {
  int w = p + 5;
  std::map<std::pair<int, int>, Cell> cells;
  auto set = [&](int x, int y, Cell v) { cells[{x, y}] = v; };
  // Column 1: delivery interface (rows 1-2) and the escape hole for the
  // row-2 branch (row 3).
  set(1, 1, E);
  set(1, 2, E);
  set(1, 3, E);
  set(1, 4, P);
  set(1, 5, P);
  for (int x = 2; x <= w; ++x) set(x, 1, P);
  for (int x = 2; x <= p + 2; ++x) set(x, 2, P);
  set(p + 3, 2, E);  // internal absorb for the row-2 ride
  set(p + 4, 2, P);
  set(p + 5, 2, P);
  for (int x = 2; x <= p + 3; ++x) set(x, 3, P);
  set(p + 4, 3, E);  // exit turn absorbs
  set(p + 5, 3, E);
  for (int x = 2; x <= p + 1; ++x) set(x, 4, P);
  set(p + 2, 4, E);  // upward absorbs after the rides
  set(p + 3, 4, E);
  set(p + 4, 4, P);
  set(p + 5, 4, P);
  for (int x = 2; x <= p + 1; ++x) set(x, 5, P);
  set(p + 2, 5, E);
  set(p + 3, 5, E);
  set(p + 4, 5, E);  // exit column
  set(p + 5, 5, P);
  return cells;
}

struct RowBudget {
  int y = 0;        // math row
  int budget = 0;   // number of holes right of the gadget
  int literal = 0;  // the literal this row rules out when filled
};

}  // namespace

Q3SatReduction reduce_q3sat(const QbfFormula& formula) {
  if (formula.prefix.empty()) {
    throw std::invalid_argument("reduce_q3sat: empty prefix");
  }
  for (const auto& clause : formula.clauses) {
    if (clause.empty() || clause.size() > 3) {
      throw std::invalid_argument("reduce_q3sat: clause width out of range");
    }
  }

  int nvars = static_cast<int>(formula.prefix.size());
  int nclauses = static_cast<int>(formula.clauses.size());

  std::map<int, int> var_pos;  // variable -> prefix index (0-based)
  for (int i = 0; i < nvars; ++i) var_pos[formula.prefix[i].var] = i;

  std::map<int, int> occurrences;  // signed literal -> count
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) occurrences[lit] += 1;
  }
  int max_occ = 0;
  for (const auto& [lit, cnt] : occurrences) max_occ = std::max(max_occ, cnt);
  int p = max_occ + 1;

  // Column/row plan (math coordinates, y up).
  auto var_y = [&](int i) { return 4 + 5 * i; };  // band of prefix index i
  std::vector<int> var_x(nvars), var_w(nvars);
  {
    int x = 1;
    for (int i = 0; i < nvars; ++i) {
      var_x[i] = x;
      var_w[i] =
          formula.prefix[i].quantifier == Quantifier::ForAll ? p + 6 : p + 5;
      x += var_w[i] - 2;
    }
  }
  int bridge_x = var_x[nvars - 1] + var_w[nvars - 1] - 2;
  int bridge_base = var_y(nvars - 1) + 5;
  int exit_top = var_y(nvars - 1) + std::max(5, nclauses + 4);  // bridge turn
  // With no clauses the reward column needs one pawn row of its own to keep
  // the top black pawn sealed until the king arrives.
  int top = exit_top + (nclauses == 0 ? 2 : 1);
  int region_x = bridge_x + 2;  // universal right regions, one column band
  auto clause_x = [&](int j) { return bridge_x + 4 + 6 * j; };
  auto clause_top = [&](int j) { return exit_top - j; };
  auto check_col = [&](int j) { return clause_x(j) + 2; };
  int reward_row = nclauses > 0 ? clause_top(nclauses - 1) - 1 : exit_top;
  int reward_x = nclauses > 0 ? clause_x(nclauses - 1) + 6 : bridge_x + 4;
  int overflow_x = reward_x + 7;
  int rect_width = overflow_x + p + 1;
  int width = rect_width + 5;  // move-wasting extension, height 3

  Worksheet sheet(width, top, rect_width);
  std::vector<GadgetRecord> layout;
  MathGrid grid{width, top};
  auto box = [&](const std::string& name, int x0, int y0, int x1, int y1,
                 const std::string& meta) {
    Square a = grid.to_square(x0, y1);  // top-left in board coords
    Square b = grid.to_square(x1, y0);
    layout.push_back(GadgetRecord{name, a.col, a.row, b.col, b.row, meta});
  };

  // Variable gadgets.
  for (int i = 0; i < nvars; ++i) {
    bool universal = formula.prefix[i].quantifier == Quantifier::ForAll;
    int x0 = var_x[i], y0 = var_y(i);
    auto core = core_cells(p);
    int core_dx = universal ? 1 : 0;
    if (universal) {
      // Entry column: delivery interface low, sealed above.
      sheet.paint(x0, y0, E);
      sheet.paint(x0, y0 + 1, E);
      sheet.paint(x0, y0 + 2, P);
      sheet.paint(x0, y0 + 3, P);
      sheet.paint(x0, y0 + 4, P);
      // The king enters the core sideways, so its first column is solid.
      core[{1, 1}] = P;
      core[{1, 2}] = P;
    }
    for (const auto& [xy, cell] : core) {
      sheet.paint(x0 + core_dx + xy.first - 1, y0 + xy.second - 1, cell);
    }
    if (i == 0) {
      // White king below the first gadget, pawn in the gadget's entry cell.
      sheet.repaint(x0, y0, E, P);
      sheet.paint(x0, 3, Cell::WhiteKing);
    }
    std::string vname = "x" + std::to_string(formula.prefix[i].var);
    if (universal) {
      box("universal_left", x0, y0, x0 + p + 5, y0 + 4, vname);
      // Right region: a two-cell pocket lets Black park its pawn on either
      // literal row before White's committing push arrives.
      int rx = region_x, ry = y0;
      sheet.paint(rx, ry, P);
      sheet.paint(rx + 1, ry, E);
      sheet.paint(rx + 2, ry, P);
      sheet.paint(rx + 3, ry, P);
      sheet.paint(rx, ry + 1, P);
      sheet.paint(rx + 1, ry + 1, Cell::BlackPawn);
      sheet.paint(rx + 2, ry + 1, P);
      sheet.paint(rx + 3, ry + 1, P);
      for (int dx = 0; dx < 4; ++dx) sheet.paint(rx + dx, ry + 2, P);
      box("universal_right", rx, ry, rx + 3, ry + 2, vname);
    } else {
      box("existential", x0, y0, x0 + p + 4, y0 + 4, vname);
    }
  }

  // Bridge: empty two-column shaft, then a rightward turn at the exit row.
  for (int y = bridge_base; y <= exit_top + 1; ++y) sheet.paint(bridge_x, y, E);
  for (int y = exit_top + 2; y <= top; ++y) sheet.paint(bridge_x, y, P);
  for (int y = bridge_base; y < exit_top; ++y) sheet.paint(bridge_x + 1, y, E);
  for (int y = exit_top; y <= top; ++y) sheet.paint(bridge_x + 1, y, P);
  for (int y = bridge_base; y < exit_top; ++y) sheet.paint(bridge_x + 2, y, P);
  sheet.paint(bridge_x + 2, exit_top, E);
  for (int y = exit_top + 1; y <= top; ++y) sheet.paint(bridge_x + 2, y, P);
  box("bridge", bridge_x, bridge_base, bridge_x + 2, top, "");

  // Clause gadgets, stacked right and one row lower each.
  for (int j = 0; j < nclauses; ++j) {
    int cx = clause_x(j), ct = clause_top(j);
    for (int dx = 0; dx < 5; ++dx) sheet.paint(cx + dx, ct, E);
    sheet.paint(cx + 5, ct, P);
    for (int dx = 0; dx < 5; ++dx) sheet.paint(cx + dx, ct - 1, P);
    sheet.paint(cx + 5, ct - 1, E);
    for (int dx = 0; dx < 6; ++dx) sheet.paint(cx + dx, ct - 2, P);
    box("clause", cx, ct - 2, cx + 5, ct, "c" + std::to_string(j));
  }

  // Reward: the final ride row plus a column of pawns capped by the black
  // pawn under the single open top edge.
  for (int dx = 0; dx < 5; ++dx) sheet.paint(reward_x + dx, reward_row, E);
  sheet.paint(reward_x + 5, reward_row, P);
  for (int y = reward_row + 1; y < top; ++y) sheet.paint(reward_x + 2, y, P);
  sheet.paint(reward_x + 2, top, Cell::BlackPawn);
  box("reward", reward_x, reward_row, reward_x + 5, top, "");

  // Connection holes: one per clause literal at the intersection of the
  // clause's checked column and the literal's row.
  std::map<int, int> used;  // signed literal -> holes already placed
  for (int j = 0; j < nclauses; ++j) {
    for (int lit : formula.clauses[j]) {
      int i = var_pos.at(lit < 0 ? -lit : lit);
      int y = lit < 0 ? var_y(i) : var_y(i) + 1;
      sheet.paint(check_col(j), y, E);
      used[lit] += 1;
      box("connection", check_col(j), y, check_col(j), y,
          "c" + std::to_string(j) + (lit < 0 ? " -x" : " x") +
              std::to_string(lit < 0 ? -lit : lit));
    }
  }

  // Overflow holes: the rest of each literal row's budget, right of the
  // reward column.
  for (int i = 0; i < nvars; ++i) {
    bool universal = formula.prefix[i].quantifier == Quantifier::ForAll;
    int v = formula.prefix[i].var;
    RowBudget rows[2] = {
        {var_y(i), p + 1, -v},
        {var_y(i) + 1, universal ? p - 1 : p, v},
    };
    for (const RowBudget& rb : rows) {
      int have = used.count(rb.literal) ? used.at(rb.literal) : 0;
      if (have > rb.budget) {
        throw std::logic_error("reduce_q3sat: literal row over budget");
      }
      for (int s = 0; s < rb.budget - have; ++s) {
        sheet.paint(overflow_x + s, rb.y, E);
        box("overflow", overflow_x + s, rb.y, overflow_x + s, rb.y,
            (rb.literal < 0 ? "-x" : "x") +
                std::to_string(rb.literal < 0 ? -rb.literal : rb.literal));
      }
    }
  }

  // Move-wasting zone: the bottom three rows; the dance happens in the
  // four rightmost extension columns.
  int mw = rect_width + 2;  // columns mw..mw+3
  sheet.paint(mw + 0, 3, P);
  sheet.paint(mw + 1, 3, E);
  sheet.paint(mw + 2, 3, P);
  sheet.paint(mw + 3, 3, P);
  sheet.paint(mw + 0, 2, P);
  sheet.paint(mw + 1, 2, E);
  sheet.paint(mw + 2, 2, Cell::BlackKing);
  sheet.paint(mw + 3, 2, P);
  for (int dx = 0; dx < 4; ++dx) sheet.paint(mw + dx, 1, P);
  box("move_wasting", 1, 1, width, 3, "anchored black king");

  sheet.fill_rest();

  // Assemble the board.
  std::vector<uint8_t> cell_mask(static_cast<size_t>(top) * width, 0);
  for (int y = 1; y <= top; ++y) {
    for (int x = 1; x <= width; ++x) {
      if (sheet.exists(x, y)) {
        Square s = grid.to_square(x, y);
        cell_mask[static_cast<size_t>(s.row) * width + s.col] = 1;
      }
    }
  }
  std::set<Edge> open_edges{
      {grid.to_square(reward_x + 2, top), Direction::North},
      {grid.to_square(mw + 1, 3), Direction::North},
      {grid.to_square(mw + 2, 3), Direction::North},
  };
  Board board =
      Board::with_all_rails(top, width, std::move(cell_mask), open_edges);

  std::map<Square, Piece> pieces;
  std::optional<Square> anchor;
  for (int y = 1; y <= top; ++y) {
    for (int x = 1; x <= width; ++x) {
      if (!sheet.exists(x, y)) continue;
      Square s = grid.to_square(x, y);
      switch (sheet.get(x, y)) {
        case Cell::Fill:
        case Cell::WhitePawn:
          pieces[s] = Piece{Color::White, PieceKind::Pawn};
          break;
        case Cell::BlackPawn:
          pieces[s] = Piece{Color::Black, PieceKind::Pawn};
          break;
        case Cell::WhiteKing:
          pieces[s] = Piece{Color::White, PieceKind::King};
          break;
        case Cell::BlackKing:
          pieces[s] = Piece{Color::Black, PieceKind::King};
          anchor = s;
          break;
        case Cell::Empty:
          break;
        case Cell::Unset:
          throw std::logic_error("unfilled cell");
      }
    }
  }

  Q3SatReduction out{GameState(std::move(board), std::move(pieces), anchor),
                     std::move(layout)};
  return out;
}

std::string serialize_layout(const std::vector<GadgetRecord>& layout) {
  std::ostringstream out;
  for (const GadgetRecord& g : layout) {
    out << "GADGET " << g.name << " " << g.col0 << " " << g.row0 << " "
        << g.col1 << " " << g.row1;
    if (!g.meta.empty()) out << " " << g.meta;
    out << "\n";
  }
  return out.str();
}

std::vector<GadgetRecord> parse_layout(const std::string& text) {
  std::vector<GadgetRecord> layout;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    GadgetRecord g;
    if (!(ls >> tag >> g.name >> g.col0 >> g.row0 >> g.col1 >> g.row1) ||
        tag != "GADGET") {
      throw ParseError(line_no, 1, "expected `GADGET name c0 r0 c1 r1`");
    }
    std::string meta;
    std::getline(ls, meta);
    if (!meta.empty() && meta[0] == ' ') meta.erase(0, 1);
    g.meta = meta;
    layout.push_back(std::move(g));
  }
  return layout;
}

}  // namespace pushfight
