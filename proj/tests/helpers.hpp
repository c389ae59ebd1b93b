#pragma once

#include <random>
#include <string>

#include "cylnet/network.hpp"

namespace cylnet::testing {

// The running two-vertex example: self-loops a (on u) and e (on v) of
// offset 1, u->v with weights c (offset 0) and b (offset 1), v->u with
// weight d (offset 1).
inline QuotientNetwork two_vertex_example() {
  return build_network(
      {"u", "v"},
      {
          {0, 0, 1, MPoly::var("a")},
          {1, 1, 1, MPoly::var("e")},
          {0, 1, 0, MPoly::var("c")},
          {0, 1, 1, MPoly::var("b")},
          {1, 0, 1, MPoly::var("d")},
      },
      {"a", "b", "c", "d", "e"}, false);
}

// Random local network: an acyclic set of offset-0 edges (tail < head)
// plus arbitrary offset-1 edges, each with a fresh variable weight.  Every
// cycle uses at least one offset-1 edge, so windings are positive.
inline QuotientNetwork random_local_network(std::mt19937_64& rng,
                                            int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(1, max_edges);
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  int m = ne(rng);
  std::vector<std::string> vertices, vars;
  for (int i = 0; i < n; i++) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeRecord> edges;
  std::set<std::tuple<int, int, int>> seen;
  for (int i = 0; i < m; i++) {
    int a = vert(rng), b = vert(rng);
    int offset = coin(rng);
    if (offset == 0) {
      if (a == b) continue;
      if (a > b) std::swap(a, b);
    }
    if (!seen.insert({a, b, offset}).second) continue;
    std::string w = "w" + std::to_string(edges.size());
    vars.push_back(w);
    edges.push_back({a, b, offset, MPoly::var(w)});
  }
  return build_network(vertices, edges, vars, false);
}

}  // namespace cylnet::testing
