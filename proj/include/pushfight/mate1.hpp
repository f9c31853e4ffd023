#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pushfight/class_space.hpp"
#include "pushfight/rules.hpp"

namespace pushfight {

struct Mate1Answer {
  bool winnable = false;
  std::optional<Turn> witness;
};

// Thrown by solve_k_move when the configurable node limit is exceeded;
// distinct from a negative answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n^6 with saturation (n is the board area).
uint64_t move_bound(const GameState& state);

// Mate-in-1 with at most `c` moves and one push. Breadth-first search over
// configurations at move depth <= c, one pushing-king choice at a time,
// other mover kings demoted to pawns.
Mate1Answer solve_c_move(const GameState& state, int c);

enum class CertificateFault {
  None,
  TooManyMoves,
  IllegalMove,
  IllegalPush,
  NotWinning,
};

struct CertificateCheck {
  bool ok = false;
  CertificateFault fault = CertificateFault::None;
  std::string detail;
};

const char* fault_name(CertificateFault fault);

// Deterministic verifier of the k-move NP algorithm: accepts iff
// turn.moves.size() <= min(k, n^6), all moves replay legally, the push is
// legal, and the outcome is a win for the mover.
CertificateCheck verify_k_certificate(const GameState& state, uint64_t k,
                                      const Turn& turn);

// Exact k-move decision. Answers "no" immediately when the unbounded
// problem is unwinnable; otherwise BFS over configurations with a visited
// set, depth capped at min(k, n^6). Worst-case exponential; `node_cap`
// bounds the visited set and raises ResourceLimitError when exceeded.
Mate1Answer solve_k_move(const GameState& state, uint64_t k,
                         uint64_t node_cap = 10'000'000);

// Polynomial unbounded-move decision: BFS over the equivalence-class graph
// per pushing king; the witness is reconstructed by stitching unit king
// steps with in-class pawn rearrangements, then compressing consecutive
// king steps into single moves.
Mate1Answer solve_unbounded(const GameState& state);

}  // namespace pushfight
