#pragma once

#include <string>
#include <vector>

#include "pushfight/qbf.hpp"
#include "pushfight/state.hpp"

namespace pushfight {

enum class RenderFormat : uint8_t { Ascii, Svg };

// Deterministic rendering. Ascii: one glyph per cell on a lattice with rail
// marks along railed boundary edges (open edges show as gaps). Svg: circles
// for pawns, squares for kings, a ring for the anchor, thick segments for
// rails. `outline` overlays gadget bounding boxes.
std::string render(const GameState& state, RenderFormat format,
                   const std::vector<GadgetRecord>& outline = {});

}  // namespace pushfight
