// Command-line front end: solving, verifying, generating and rendering.
//
// Exit codes: 0 decided/generated, 1 negative decision, 2 usage error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pushfight/game_solver.hpp"
#include "pushfight/mate1.hpp"
#include "pushfight/pfb.hpp"
#include "pushfight/qbf.hpp"
#include "pushfight/render.hpp"
#include "pushfight/steiner.hpp"
#include "pushfight/turnfile.hpp"

namespace {

using namespace pushfight;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string witness_summary(const Mate1Answer& answer) {
  std::ostringstream out;
  out << "RESULT winnable=" << (answer.winnable ? "true" : "false");
  if (answer.witness) out << " moves=" << answer.witness->moves.size();
  out << "\n";
  if (answer.witness) out << serialize_turn(*answer.witness);
  return out.str();
}

int run_solve(const std::string& regime, std::optional<int> c,
              std::optional<long long> k, uint64_t node_cap,
              const std::string& file) {
  GameState state = parse_board(read_input(file));
  Mate1Answer answer;
  if (regime == "c") {
    answer = solve_c_move(state, c.value_or(2));
  } else if (regime == "k") {
    if (!k) {
      std::cerr << "solve: --regime k requires --k\n";
      return 2;
    }
    answer = solve_k_move(state, static_cast<uint64_t>(*k), node_cap);
  } else if (regime == "unbounded") {
    answer = solve_unbounded(state);
  } else {
    std::cerr << "solve: unknown regime `" << regime << "`\n";
    return 2;
  }
  std::cout << witness_summary(answer);
  return answer.winnable ? 0 : 1;
}

int run_verify(const std::string& file, const std::string& turnfile,
               std::optional<long long> k) {
  GameState state = parse_board(read_input(file));
  Turn turn = parse_turn(read_input(turnfile));
  uint64_t cap = k ? static_cast<uint64_t>(*k) : move_bound(state);
  CertificateCheck check = verify_k_certificate(state, cap, turn);
  std::cout << "RESULT valid=" << (check.ok ? "true" : "false");
  if (!check.ok) std::cout << " reason=" << fault_name(check.fault);
  std::cout << "\n";
  if (!check.ok) std::cerr << check.detail << "\n";
  return check.ok ? 0 : 1;
}

int run_whowins(const std::string& file, uint64_t state_cap) {
  GameState state = parse_board(read_input(file));
  SolveResult result = who_wins(state, state_cap);
  std::cout << "RESULT outcome=";
  switch (result.value) {
    case GameValue::WhiteWins: std::cout << "white_wins"; break;
    case GameValue::BlackWins: std::cout << "black_wins"; break;
    case GameValue::Draw: std::cout << "draw"; break;
  }
  if (result.depth_to_outcome) {
    std::cout << " depth=" << *result.depth_to_outcome;
  }
  std::cout << "\n";
  return 0;
}

int run_reduce_steiner(long long ell, const std::string& pointsfile) {
  SteinerInstance instance =
      parse_points_file(read_input(pointsfile), ell);
  SteinerReduction reduction = reduce_steiner(instance);
  std::cout << serialize_board(reduction.state);
  std::cerr << "k=" << reduction.k << "\n";
  return 0;
}

int run_reduce_q3sat(const std::string& file, const std::string& out_prefix) {
  QbfFormula formula = parse_qdimacs(read_input(file));
  Q3SatReduction reduction = reduce_q3sat(formula);
  std::string board_text = serialize_board(reduction.state);
  std::cout << board_text;
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".pfb", board_text);
    write_file(out_prefix + ".layout", serialize_layout(reduction.layout));
  }
  return 0;
}

int run_render(const std::string& file, const std::string& format,
               bool outline) {
  GameState state = parse_board(read_input(file));
  std::vector<GadgetRecord> boxes;
  if (outline) {
    if (file == "-") {
      std::cerr << "render: --outline needs a file path (sidecar lookup)\n";
      return 2;
    }
    std::string sidecar = file;
    auto dot = sidecar.rfind(".pfb");
    if (dot != std::string::npos && dot == sidecar.size() - 4) {
      sidecar = sidecar.substr(0, dot) + ".layout";
    } else {
      sidecar += ".layout";
    }
    boxes = parse_layout(read_input(sidecar));
  }
  RenderFormat rf = format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  std::cout << render(state, rf, boxes);
  return 0;
}

int run_check_gadget(const std::string& file, const std::string& assertfile) {
  GameState state = parse_board(read_input(file));
  TraceAssertion assertion = parse_trace_assertions(read_input(assertfile));
  TraceReport report = check_gadget_trace(state, assertion);
  for (const std::string& line : report.lines) std::cout << line << "\n";
  std::cout << "RESULT gadget=" << (report.passed ? "pass" : "fail") << "\n";
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Push Fight solver toolkit"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "mate-in-1 decision");
  std::string regime;
  std::optional<int> c_moves;
  std::optional<long long> k_moves;
  uint64_t node_cap = 10'000'000;
  std::string solve_file;
  solve->add_option("--regime", regime, "c, k or unbounded")->required();
  solve->add_option("--c", c_moves, "move budget for --regime c (default 2)");
  solve->add_option("--k", k_moves, "move budget for --regime k");
  solve->add_option("--node-cap", node_cap, "search node cap for --regime k");
  solve->add_option("FILE", solve_file, "board file or -")->required();

  auto* verify = app.add_subcommand("verify-turn", "check a turn certificate");
  std::string verify_file, verify_turn;
  std::optional<long long> verify_k;
  verify->add_option("FILE", verify_file)->required();
  verify->add_option("TURNFILE", verify_turn)->required();
  verify->add_option("--k", verify_k, "move budget (default n^6)");

  auto* whowins = app.add_subcommand("whowins", "retrograde game solve");
  std::string whowins_file;
  uint64_t state_cap = 10'000'000;
  whowins->add_option("FILE", whowins_file)->required();
  whowins->add_option("--state-cap", state_cap, "reachable state cap");

  auto* rsteiner = app.add_subcommand("reduce-steiner",
                                      "rectilinear Steiner tree reduction");
  long long ell = 0;
  std::string points_file;
  rsteiner->add_option("--ell", ell, "length budget")->required();
  rsteiner->add_option("POINTSFILE", points_file)->required();

  auto* rq3sat = app.add_subcommand("reduce-q3sat", "Q3SAT reduction");
  std::string qdimacs_file, out_prefix;
  rq3sat->add_option("QDIMACSFILE", qdimacs_file)->required();
  rq3sat->add_option("--out", out_prefix, "write PREFIX.pfb and .layout");

  auto* render_cmd = app.add_subcommand("render", "render a board");
  std::string render_file, render_format = "ascii";
  bool outline = false;
  render_cmd->add_option("FILE", render_file)->required();
  render_cmd->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_flag("--outline", outline, "overlay gadget boxes");

  auto* check = app.add_subcommand("check-gadget", "run a gadget trace");
  std::string check_file, check_assert;
  check->add_option("FILE", check_file)->required();
  check->add_option("ASSERTFILE", check_assert)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      return run_solve(regime, c_moves, k_moves, node_cap, solve_file);
    }
    if (verify->parsed()) {
      return run_verify(verify_file, verify_turn, verify_k);
    }
    if (whowins->parsed()) return run_whowins(whowins_file, state_cap);
    if (rsteiner->parsed()) return run_reduce_steiner(ell, points_file);
    if (rq3sat->parsed()) return run_reduce_q3sat(qdimacs_file, out_prefix);
    if (render_cmd->parsed()) {
      return run_render(render_file, render_format, outline);
    }
    if (check->parsed()) return run_check_gadget(check_file, check_assert);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
