#include "pushfight/steiner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pushfight/mathgrid.hpp"
#include "pushfight/pfb.hpp"

namespace pushfight {

SteinerInstance parse_points_file(const std::string& text, long long ell) {
  SteinerInstance instance;
  instance.ell = ell;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long x, y;
    std::string rest;
    if (!(ls >> x >> y) || (ls >> rest)) {
      throw ParseError(line_no, 1, "expected `x y`");
    }
    instance.points.push_back(
        {static_cast<int>(x), static_cast<int>(y)});
  }
  if (instance.points.empty()) {
    throw ParseError(line_no + 1, 1, "no points");
  }
  std::set<SteinerPoint> dedup(instance.points.begin(), instance.points.end());
  if (dedup.size() != instance.points.size()) {
    throw ParseError(1, 1, "points must be pairwise distinct");
  }
  return instance;
}

long long steiner_oracle(const std::vector<SteinerPoint>& points) {
  if (points.empty()) throw std::invalid_argument("steiner: no points");
  if (points.size() > 5) {
    throw std::invalid_argument("steiner: more than 5 points unsupported");
  }
  if (points.size() == 1) return 0;

  // Hanan grid vertices and edge weights.
  std::vector<int> xs, ys;
  for (const auto& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  int nx = static_cast<int>(xs.size());
  int ny = static_cast<int>(ys.size());
  int nv = nx * ny;
  auto vid = [&](int ix, int iy) { return ix * ny + iy; };

  constexpr long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<std::vector<long long>> dist(nv,
                                           std::vector<long long>(nv, inf));
  for (int v = 0; v < nv; ++v) dist[v][v] = 0;
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) {
      if (ix + 1 < nx) {
        long long w = xs[ix + 1] - xs[ix];
        dist[vid(ix, iy)][vid(ix + 1, iy)] = w;
        dist[vid(ix + 1, iy)][vid(ix, iy)] = w;
      }
      if (iy + 1 < ny) {
        long long w = ys[iy + 1] - ys[iy];
        dist[vid(ix, iy)][vid(ix, iy + 1)] = w;
        dist[vid(ix, iy + 1)][vid(ix, iy)] = w;
      }
    }
  }
  for (int k = 0; k < nv; ++k) {
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < nv; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }

  auto vertex_of = [&](const SteinerPoint& p) {
    int ix = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), p.x) -
                              xs.begin());
    int iy = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), p.y) -
                              ys.begin());
    return vid(ix, iy);
  };

  // Dreyfus-Wagner over terminal subsets.
  int t = static_cast<int>(points.size()) - 1;  // terminals beyond the root
  int root = vertex_of(points[0]);
  std::vector<int> term(t);
  for (int i = 0; i < t; ++i) term[i] = vertex_of(points[i + 1]);

  size_t nsets = size_t{1} << t;
  std::vector<std::vector<long long>> dp(nsets,
                                         std::vector<long long>(nv, inf));
  for (int i = 0; i < t; ++i) {
    for (int v = 0; v < nv; ++v) {
      dp[size_t{1} << i][v] = dist[term[i]][v];
    }
  }
  for (size_t s = 1; s < nsets; ++s) {
    if ((s & (s - 1)) != 0) {  // not a singleton
      for (int v = 0; v < nv; ++v) {
        long long best = inf;
        for (size_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
          if (sub > (s ^ sub)) continue;  // each split once
          best = std::min(best, dp[sub][v] + dp[s ^ sub][v]);
        }
        dp[s][v] = std::min(dp[s][v], best);
      }
    }
    // Re-root through shortest paths.
    for (int v = 0; v < nv; ++v) {
      long long base = dp[s][v];
      if (base >= inf) continue;
      for (int u = 0; u < nv; ++u) {
        dp[s][u] = std::min(dp[s][u], base + dist[v][u]);
      }
    }
  }
  return dp[nsets - 1][root];
}

SteinerReduction reduce_steiner(const SteinerInstance& instance) {
  if (instance.points.empty()) {
    throw std::invalid_argument("reduce_steiner: no points");
  }
  if (instance.ell < 0) {
    throw std::invalid_argument("reduce_steiner: ell must be >= 0");
  }
  std::vector<SteinerPoint> pts = instance.points;
  int min_x = pts[0].x, min_y = pts[0].y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (auto& p : pts) {
    p.x += 2 - min_x;
    p.y += 4 - min_y;
  }
  // Reorder so the first point sits on y = 4 (lowest row of the plaza);
  // among candidates pick the smallest x for determinism.
  size_t first = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y != 4) continue;
    if (pts[first].y != 4 || pts[i].x < pts[first].x) first = i;
  }
  std::swap(pts[0], pts[first]);

  int n = static_cast<int>(pts.size());
  int max_x = 0, max_y = 0;
  for (const auto& p : pts) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  int width = n + max_x;
  int height = max_y;
  int x1 = pts[0].x;
  MathGrid grid{width, height};

  std::set<SteinerPoint> holes(pts.begin(), pts.end());
  std::map<Square, Piece> pieces;
  for (int y = 1; y <= height; ++y) {
    for (int x = 1; x <= width; ++x) {
      Square sq = grid.to_square(x, y);
      if (holes.count({x, y})) continue;
      if (x == x1 + n && y == 2) {
        pieces[sq] = Piece{Color::White, PieceKind::King};
        continue;
      }
      if (x == x1 - 1 && y == 2) {
        pieces[sq] = Piece{Color::Black, PieceKind::King};
        continue;
      }
      bool black_pawn = (y == 3 && x != x1) ||
                        (y == 2 && (x < x1 - 1 || x > x1 + n)) || (y == 1);
      pieces[sq] = black_pawn ? Piece{Color::Black, PieceKind::Pawn}
                              : Piece{Color::White, PieceKind::Pawn};
    }
  }

  std::vector<uint8_t> cell_mask(static_cast<size_t>(height) * width, 1);
  std::set<Edge> open_edges{{grid.to_square(x1, 1), Direction::South}};
  Board board =
      Board::with_all_rails(height, width, std::move(cell_mask), open_edges);
  GameState state(std::move(board), std::move(pieces),
                  grid.to_square(x1 - 1, 2));

  SteinerReduction out{std::move(state),
                       static_cast<uint64_t>(instance.ell) + 3, pts};
  return out;
}

}  // namespace pushfight
