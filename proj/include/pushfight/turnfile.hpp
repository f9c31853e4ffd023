#pragma once

#include <string>

#include "pushfight/rules.hpp"

namespace pushfight {

// Turn text format: zero or more `move COL ROW COL ROW` lines followed by
// one `push COL ROW DIR` line.
Turn parse_turn(const std::string& text);
std::string serialize_turn(const Turn& turn);

}  // namespace pushfight
