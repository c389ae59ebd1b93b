#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cylnet/families.hpp"

namespace cylnet {

namespace {

long floordiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

long wrap(long i, int period) {
  long r = i % period;
  return r < 0 ? r + period : r;
}

// Multiply acc by w_{i,j}^e.
void mul_weight(MPoly& acc, int n, int m, long i, int j, int e) {
  if (e == 0 || j <= 0 || j >= m) return;
  std::string name = "x" + std::to_string(wrap(i, 2 * n)) + "_" +
                     std::to_string(j);
  acc *= MPoly::var(name, e);
}

// Weight of the network edge into the black square with corner (hx, hy),
// entered by the step (dx, dy).
MPoly edge_weight(int n, int m, long hx, int hy, int dx, int dy) {
  MPoly w(1);
  if (dx == 1 && dy == 1) {
    mul_weight(w, n, m, hx + 1, hy + 1, 1);
    mul_weight(w, n, m, hx, hy, -1);
  } else if (dx == 2 && dy == 0) {
    mul_weight(w, n, m, hx + 1, hy + 1, 1);
    mul_weight(w, n, m, hx + 1, hy, 1);
    mul_weight(w, n, m, hx, hy, -1);
    mul_weight(w, n, m, hx, hy + 1, -1);
  } else if (dx == 1 && dy == -1) {
    mul_weight(w, n, m, hx + 1, hy, 1);
    mul_weight(w, n, m, hx, hy + 1, -1);
  } else {
    throw NetworkError("edge_weight: not a network step");
  }
  return w;
}

// Run fn once per tiling; a tiling is reported as sorted cell pairs.
void for_each_tiling(const std::vector<Cell>& cells, size_t max_tilings,
                     const std::function<void(const Tiling&)>& fn) {
  std::map<Cell, int> index;
  for (size_t i = 0; i < cells.size(); i++) index[cells[i]] = int(i);
  std::vector<bool> covered(cells.size(), false);
  Tiling current;
  size_t count = 0;
  std::function<void(size_t)> rec = [&](size_t from) {
    while (from < cells.size() && covered[from]) from++;
    if (from == cells.size()) {
      if (++count > max_tilings)
        throw EnumerationLimit("too many domino tilings to enumerate");
      Tiling t = current;
      std::sort(t.begin(), t.end());
      fn(t);
      return;
    }
    // First uncovered cell in sorted order: left and down neighbors are
    // already covered, so the partner is to the right or above.
    auto [a, b] = cells[from];
    for (Cell partner : {Cell{a + 1, b}, Cell{a, b + 1}}) {
      auto it = index.find(partner);
      if (it == index.end() || covered[it->second]) continue;
      covered[from] = covered[it->second] = true;
      current.push_back({cells[from], partner});
      rec(from + 1);
      current.pop_back();
      covered[from] = covered[it->second] = false;
    }
  };
  rec(0);
}

}  // namespace

MPoly domino_weight(int n, int m, long i, int j) {
  MPoly w(1);
  mul_weight(w, n, m, i, j, 1);
  return w;
}

LiftedVertex DominoNetwork::lift(long a, int b) const {
  int idx = net.index_of(std::to_string(wrap(a, 2 * n)) + "," +
                         std::to_string(b));
  return {idx, int(floordiv(a, 2 * n))};
}

DominoNetwork build_domino(int n, int m) {
  if (n < 1 || m < 2) throw NetworkError("build_domino: need n >= 1, m >= 2");
  std::vector<std::string> vertices;
  std::map<std::pair<int, int>, int> index;
  for (int j = 0; j < m; j++)
    for (int i = 0; i < 2 * n; i++)
      if ((i + j) % 2 == 1) {
        index[{i, j}] = int(vertices.size());
        vertices.push_back(std::to_string(i) + "," + std::to_string(j));
      }
  std::vector<std::string> vars;
  for (int j = 1; j < m; j++)
    for (int i = 0; i < 2 * n; i++)
      vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<EdgeRecord> edges;
  for (auto& [ij, tail] : index) {
    auto [i, j] = ij;
    for (auto [dx, dy] : {std::pair{1, 1}, {2, 0}, {1, -1}}) {
      int hj = j + dy;
      if (hj < 0 || hj >= m) continue;
      long hi = i + dx;
      edges.push_back({tail, index.at({int(wrap(hi, 2 * n)), hj}),
                       int(hi / (2 * n)), edge_weight(n, m, hi, hj, dx, dy)});
    }
  }
  DominoNetwork out;
  out.net = build_network(std::move(vertices), std::move(edges),
                          std::move(vars), true);
  out.n = n;
  out.m = m;
  return out;
}

std::vector<Cell> aztec_cells(int m, long i, int j, int ell) {
  std::vector<Cell> cells;
  for (long a = i - ell - 1; a <= i + ell; a++)
    for (int b = 0; b < m; b++) {
      long fx = std::max(std::abs(a - i), std::abs(a + 1 - i));
      long fy = std::max(std::abs(long(b) - j), std::abs(long(b) + 1 - j));
      if (fx + fy <= ell + 1) cells.push_back({a, b});
    }
  return cells;
}

std::vector<Tiling> domino_tilings(const std::vector<Cell>& cells,
                                   size_t max_tilings) {
  std::vector<Tiling> out;
  for_each_tiling(cells, max_tilings,
                  [&](const Tiling& t) { out.push_back(t); });
  return out;
}

MPoly tiling_weight(int n, int m, const std::vector<Cell>& cells,
                    const Tiling& t) {
  std::map<Cell, int> owner;
  for (size_t d = 0; d < t.size(); d++) {
    owner[t[d].first] = int(d);
    owner[t[d].second] = int(d);
  }
  MPoly w(1);
  // Every lattice point incident to at least two region squares contributes
  // w^(D - 3), D = number of distinct dominoes touching the point.  Single-
  // corner points are skipped; this makes the weight change under a domino
  // flip match the change of the induced path weight exactly.
  std::set<std::pair<long, int>> points;
  for (auto& [a, b] : cells)
    for (int dx = 0; dx < 2; dx++)
      for (int dy = 0; dy < 2; dy++) points.insert({a + dx, b + dy});
  for (auto& [px, py] : points) {
    std::set<int> dominoes;
    int squares = 0;
    for (Cell c : {Cell{px - 1, py - 1}, Cell{px - 1, py}, Cell{px, py - 1},
                   Cell{px, py}}) {
      auto it = owner.find(c);
      if (it == owner.end()) continue;
      squares++;
      dominoes.insert(it->second);
    }
    if (squares < 2) continue;
    mul_weight(w, n, m, px, py, int(dominoes.size()) - 3);
  }
  return w;
}

MPoly domino_oracle(const DominoQuery& q, int ell, size_t max_tilings) {
  auto cells = aztec_cells(q.m, q.i + ell, q.j, ell * q.n + q.ell0);
  MPoly total;
  for_each_tiling(cells, max_tilings, [&](const Tiling& t) {
    total += tiling_weight(q.n, q.m, cells, t);
  });
  return total;
}

mpq_class domino_oracle_eval(const DominoQuery& q, int ell,
                             const std::map<std::string, mpq_class>& point,
                             size_t max_tilings) {
  auto cells = aztec_cells(q.m, q.i + ell, q.j, ell * q.n + q.ell0);
  mpq_class total = 0;
  for_each_tiling(cells, max_tilings, [&](const Tiling& t) {
    total += tiling_weight(q.n, q.m, cells, t).eval(point);
  });
  return total;
}

DominoPaths tiling_to_paths(const DominoNetwork& dn,
                            const std::vector<Cell>& cells, const Tiling& t) {
  std::map<Cell, Cell> partner;
  for (auto& [c1, c2] : t) {
    partner[c1] = c2;
    partner[c2] = c1;
  }
  // Successor of each black square whose right white neighbor is tiled.
  std::map<Cell, Cell> succ;
  std::map<Cell, int> indeg;
  DominoPaths out;
  out.weight = MPoly(1);
  for (auto& cell : cells) {
    auto [wa, wb] = cell;
    if (wrap(wa + wb, 2) != 0) continue;  // white squares have even corners
    Cell black{wa - 1, wb};
    Cell other = partner.at(cell);
    if (other == black) continue;  // horizontal domino ending the walk here
    succ[black] = other;
    indeg[other]++;
    out.weight *= edge_weight(dn.n, dn.m, other.first, other.second,
                              int(other.first - black.first),
                              other.second - black.second);
  }
  std::vector<Cell> starts;
  for (auto& [start, next] : succ)
    if (!indeg.count(start)) starts.push_back(start);
  // Source order: bottom row first, matching the endpoint description.
  std::sort(starts.begin(), starts.end(), [](const Cell& p, const Cell& q) {
    return std::pair(p.second, p.first) < std::pair(q.second, q.first);
  });
  for (Cell cur : starts) {
    std::vector<LiftedVertex> path{dn.lift(cur.first, cur.second)};
    while (true) {
      auto it = succ.find(cur);
      if (it == succ.end()) break;
      cur = it->second;
      path.push_back(dn.lift(cur.first, cur.second));
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

}  // namespace cylnet
