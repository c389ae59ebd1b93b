#include <algorithm>

#include "cylnet/families.hpp"

namespace cylnet {

RVertex SchurNetwork::sources(int r) const {
  if (r < 1 || r > n)
    throw NetworkError("schur sources: need 1 <= r <= height");
  RVertex out;
  for (int k = 0; k < r; k++) out.push_back({k % m, k / m});
  return out;
}

RVertex SchurNetwork::targets(const std::vector<int>& lambda) const {
  int r = int(lambda.size());
  if (r < 1 || r > n)
    throw NetworkError("schur targets: need 1 <= parts <= height");
  for (int k = 0; k + 1 < r; k++)
    if (lambda[k] < lambda[k + 1])
      throw NetworkError("schur targets: parts must be weakly decreasing");
  if (lambda.back() < 0)
    throw NetworkError("schur targets: negative part");
  RVertex out;
  for (int k = 0; k < r; k++) {
    int col = lambda[r - 1 - k] + k;
    out.push_back({(col % m) + (n - 1) * m, col / m});
  }
  return out;
}

SchurNetwork build_schur(int n, int m) {
  if (n < 1 || m < 1) throw NetworkError("build_schur: need n, m >= 1");
  std::vector<std::string> vertices;
  for (int j = 0; j < n; j++)
    for (int i = 0; i < m; i++)
      vertices.push_back(std::to_string(i) + "," + std::to_string(j));
  std::vector<std::string> vars;
  for (int j = 1; j <= n; j++) vars.push_back("x" + std::to_string(j));
  std::vector<EdgeRecord> edges;
  auto at = [m](int i, int j) { return j * m + i; };
  for (int j = 0; j < n; j++)
    for (int i = 0; i < m; i++) {
      edges.push_back({at(i, j), at((i + 1) % m, j), i == m - 1 ? 1 : 0,
                       MPoly::var(vars[j])});
      if (j + 1 < n) edges.push_back({at(i, j), at(i, j + 1), 0, MPoly(1)});
    }
  SchurNetwork out;
  out.net = build_network(std::move(vertices), std::move(edges),
                          std::move(vars), true);
  out.n = n;
  out.m = m;
  return out;
}

MPoly complete_homogeneous(int k, int n) {
  if (k < 0) return MPoly();
  std::vector<MPoly> h(k + 1);
  h[0] = MPoly(1);
  for (int j = 1; j <= n; j++) {
    MPoly x = MPoly::var("x" + std::to_string(j));
    for (int deg = 1; deg <= k; deg++) h[deg] += x * h[deg - 1];
  }
  return h[k];
}

MPoly schur_oracle(const std::vector<int>& lambda, int n) {
  std::vector<int> parts = lambda;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  int r = int(parts.size());
  if (r == 0) return MPoly(1);
  if (r > n) return MPoly();
  int maxdeg = parts[0] + r;
  std::vector<MPoly> h(maxdeg + 1);
  h[0] = MPoly(1);
  for (int j = 1; j <= n; j++) {
    MPoly x = MPoly::var("x" + std::to_string(j));
    for (int deg = 1; deg <= maxdeg; deg++) h[deg] += x * h[deg - 1];
  }
  Mat<MPoly> jt(r);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < r; j++) {
      int k = parts[i] - i + j;
      if (k >= 0 && k <= maxdeg) jt(i, j) = h[k];
    }
  return det_division_free(jt);
}

}  // namespace cylnet
