#include "pushfight/turnfile.hpp"

#include <sstream>

#include "pushfight/pfb.hpp"

namespace pushfight {

Turn parse_turn(const std::string& text) {
  Turn turn;
  bool have_push = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "move") {
      if (have_push) throw ParseError(line_no, 1, "move after push");
      int a, b, c, d;
      std::string extra;
      if (!(ls >> a >> b >> c >> d) || (ls >> extra)) {
        throw ParseError(line_no, 1, "expected `move COL ROW COL ROW`");
      }
      turn.moves.push_back(Move{{a, b}, {c, d}});
    } else if (word == "push") {
      if (have_push) throw ParseError(line_no, 1, "two pushes");
      int a, b;
      std::string d, extra;
      if (!(ls >> a >> b >> d) || (ls >> extra)) {
        throw ParseError(line_no, 1, "expected `push COL ROW DIR`");
      }
      Direction dir;
      if (d == "N") dir = Direction::North;
      else if (d == "E") dir = Direction::East;
      else if (d == "S") dir = Direction::South;
      else if (d == "W") dir = Direction::West;
      else throw ParseError(line_no, 1, "direction must be N, E, S or W");
      turn.push = Push{{a, b}, dir};
      have_push = true;
    } else {
      throw ParseError(line_no, 1, "expected `move` or `push`");
    }
  }
  if (!have_push) throw ParseError(line_no + 1, 1, "missing push line");
  return turn;
}

std::string serialize_turn(const Turn& turn) {
  std::ostringstream out;
  for (const Move& m : turn.moves) {
    out << "move " << m.from.col << " " << m.from.row << " " << m.to.col
        << " " << m.to.row << "\n";
  }
  out << "push " << turn.push.king.col << " " << turn.push.king.row << " "
      << direction_char(turn.push.dir) << "\n";
  return out.str();
}

}  // namespace pushfight
