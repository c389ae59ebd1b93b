#include "cylnet/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace cylnet {

namespace {

struct CycleSearch {
  const QuotientNetwork& net;
  std::vector<std::vector<int>> out_edges;  // per tail vertex
  std::vector<bool> on_path;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  int root = 0;
  std::vector<SimpleCycle>* found;

  explicit CycleSearch(const QuotientNetwork& n, std::vector<SimpleCycle>* f)
      : net(n), out_edges(n.vertices.size()), on_path(n.vertices.size()), found(f) {
    for (size_t i = 0; i < net.edges.size(); i++)
      out_edges[net.edges[i].tail].push_back(int(i));
  }

  void emit() {
    SimpleCycle c;
    c.vertices = path_vertices;
    c.edge_ids = path_edges;
    c.weight = MPoly(1);
    for (int e : path_edges) {
      c.winding += net.edges[e].offset;
      c.weight *= net.edges[e].weight;
    }
    found->push_back(std::move(c));
  }

  // Blocked-set backtracking rooted at `root`: only vertices >= root are
  // visited, so each vertex-cycle is found exactly once, at its smallest
  // vertex; parallel edges branch separately.
  void dfs(int v) {
    for (int eid : out_edges[v]) {
      const EdgeRecord& e = net.edges[eid];
      if (e.head == root) {
        path_edges.push_back(eid);
        emit();
        path_edges.pop_back();
      } else if (e.head > root && !on_path[e.head]) {
        on_path[e.head] = true;
        path_vertices.push_back(e.head);
        path_edges.push_back(eid);
        dfs(e.head);
        path_edges.pop_back();
        path_vertices.pop_back();
        on_path[e.head] = false;
      }
    }
  }
};

}  // namespace

std::vector<SimpleCycle> simple_cycles(const QuotientNetwork& net) {
  std::vector<SimpleCycle> cycles;
  CycleSearch search(net, &cycles);
  for (int r = 0; r < int(net.vertices.size()); r++) {
    search.root = r;
    search.path_vertices = {r};
    search.on_path.assign(net.vertices.size(), false);
    search.on_path[r] = true;
    search.dfs(r);
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const SimpleCycle& a, const SimpleCycle& b) {
              if (a.vertices != b.vertices) return a.vertices < b.vertices;
              return a.edge_ids < b.edge_ids;
            });
  return cycles;
}

std::vector<CycleFamily> cycle_families(const QuotientNetwork& net,
                                        size_t max_cycles) {
  std::vector<SimpleCycle> cycles = simple_cycles(net);
  if (cycles.size() > max_cycles) {
    std::ostringstream msg;
    msg << "cycle count " << cycles.size() << " exceeds limit " << max_cycles;
    throw SizeLimit(msg.str());
  }
  size_t n = cycles.size();
  // Conflict bitsets: cycles sharing a vertex cannot join the same family.
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> uses(n,
                                      std::vector<bool>(net.vertices.size(), false));
  for (size_t i = 0; i < n; i++)
    for (int v : cycles[i].vertices) uses[i][v] = true;
  for (size_t i = 0; i < n; i++)
    for (size_t j = i + 1; j < n; j++) {
      bool hit = false;
      for (size_t v = 0; v < net.vertices.size() && !hit; v++)
        hit = uses[i][v] && uses[j][v];
      conflict[i][j] = conflict[j][i] = hit;
    }
  std::vector<CycleFamily> families;
  CycleFamily cur;
  cur.weight = MPoly(1);
  // Ordered independent-set backtracking over the conflict graph.
  auto extend = [&](auto&& self, size_t next) -> void {
    families.push_back(cur);
    for (size_t i = next; i < n; i++) {
      bool ok = true;
      for (int id : cur.cycle_ids)
        if (conflict[id][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.cycle_ids.push_back(int(i));
      cur.r++;
      cur.winding += cycles[i].winding;
      MPoly saved = cur.weight;
      cur.weight *= cycles[i].weight;
      self(self, i + 1);
      cur.weight = saved;
      cur.winding -= cycles[i].winding;
      cur.r--;
      cur.cycle_ids.pop_back();
    }
  };
  extend(extend, 0);
  return families;
}

TPoly q_n_cycles(const QuotientNetwork& net, size_t max_cycles) {
  std::vector<CycleFamily> families = cycle_families(net, max_cycles);
  int d = 0;
  for (auto& f : families) d = std::max(d, f.winding);
  TPoly q;
  for (auto& f : families) {
    if (net.planar_declared && f.winding != f.r) {
      std::ostringstream msg;
      msg << "planar-declared network has a cycle family with winding "
          << f.winding << " != r = " << f.r;
      throw NetworkError(msg.str());
    }
    MPoly w = (f.r % 2) ? -f.weight : f.weight;
    q.set(d - f.winding, q.coeff(d - f.winding) + w);
  }
  return q;
}

std::vector<int> planar_sanity(const QuotientNetwork& net) {
  if (!net.planar_declared)
    throw NetworkError("planar_sanity requires a planar-declared network");
  for (auto& c : simple_cycles(net))
    if (c.winding != 1) return c.vertices;
  return {};
}

TPoly q_n_det(const QuotientNetwork& net, int* stripped_t_power) {
  int n = int(net.vertices.size());
  Mat<TPoly> b = transfer_matrix(net);
  TPoly ql = det_division_free(Mat<TPoly>::identity(n) - b);
  if (ql.is_zero()) throw NetworkError("det(Id - B) vanished");
  // Q_N(t) = (-t)^d Q_L(1/t): reverse the coefficient list, strip any
  // t-power padding, then fix the global sign to make the result monic.
  int top = ql.degree();
  TPoly rev;
  for (auto& [k, c] : ql.coeffs()) rev.set(top - k, c);
  int stripped = rev.lowdeg();
  rev = rev.shifted(-stripped);
  if (stripped_t_power) *stripped_t_power = stripped;
  const MPoly& lead = rev.coeff(rev.degree());
  if (lead.is_one()) return rev;
  if ((-lead).is_one()) return -rev;
  throw NetworkError("Q_L reversal is not monic up to sign");
}

}  // namespace cylnet
