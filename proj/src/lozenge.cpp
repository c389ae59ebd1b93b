#include <algorithm>
#include <functional>

#include "cylnet/families.hpp"

namespace cylnet {

QuotientNetwork build_lozenge(int m) {
  if (m < 2) throw NetworkError("build_lozenge: need m >= 2");
  std::vector<std::string> vertices;
  for (int k = 0; k < m; k++) vertices.push_back(std::to_string(k));
  MPoly q = MPoly::var("q");
  std::vector<EdgeRecord> edges;
  for (int k = 0; k + 1 < m; k++) {
    edges.push_back({k, k + 1, 1, MPoly(1)});
    edges.push_back({k + 1, k, 0, q.pow(k)});
  }
  return build_network(std::move(vertices), std::move(edges), {"q"}, true);
}

TPoly carlitz(int n) {
  if (n < 0) throw std::invalid_argument("carlitz: negative index");
  TPoly prev;                // F_0 = 0
  TPoly cur = TPoly(MPoly(1));  // F_1
  if (n == 0) return prev;
  MPoly q = MPoly::var("q");
  for (int i = 2; i <= n; i++) {
    // F_i = F_{i-1} + q^{i-3} t F_{i-2}; the i = 2 step contributes nothing
    // because F_0 = 0.
    TPoly next = cur;
    if (i >= 3) next = next + (TPoly(q.pow(i - 3)) * prev).shifted(1);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

void check_query(const LozengeQuery& q) {
  if (q.a < 1 || q.b < 1 || q.c < 1 || q.d < 1 || q.r < 1)
    throw std::invalid_argument("lozenge query: parameters must be >= 1");
  if (q.a + q.b != q.c + q.d)
    throw std::invalid_argument("lozenge query: need a + b = c + d");
}

// Run fn for every filling; fn gets the rows and the value sum.
void for_each_filling(
    const std::vector<std::pair<int, int>>& rows, int r, size_t max_fillings,
    const std::function<void(const std::vector<std::vector<int>>&, long)>&
        fn) {
  std::vector<std::vector<int>> vals(rows.size());
  for (size_t s = 0; s < rows.size(); s++)
    vals[s].assign(std::max(0, rows[s].second - rows[s].first), 0);
  size_t count = 0;
  // Cell order: row-major; constraints look left and up only.
  std::function<void(size_t, size_t, long)> rec = [&](size_t s, size_t t,
                                                      long sum) {
    if (s == rows.size()) {
      if (++count > max_fillings)
        throw EnumerationLimit("too many plane partitions to enumerate");
      fn(vals, sum);
      return;
    }
    if (t == vals[s].size()) {
      rec(s + 1, 0, sum);
      return;
    }
    int lo = t > 0 ? vals[s][t - 1] : 0;
    if (s > 0) {
      // Column above: row s-1 covers columns rows[s-1].first+1 .. .second.
      int col = rows[s].first + 1 + int(t);
      int above = col - rows[s - 1].first - 1;
      if (above >= 0 && above < int(vals[s - 1].size()))
        lo = std::max(lo, vals[s - 1][above]);
    }
    for (int v = lo; v <= r; v++) {
      vals[s][t] = v;
      rec(s, t + 1, sum + v);
    }
    vals[s][t] = 0;
  };
  rec(0, 0, 0);
}

}  // namespace

std::vector<std::pair<int, int>> lozenge_shape(const LozengeQuery& q,
                                               int ell) {
  check_query(q);
  if (ell < 0) throw std::invalid_argument("lozenge shape: negative ell");
  std::vector<std::pair<int, int>> rows;
  for (int s = 1; s <= ell + q.d; s++) {
    int lam = s <= q.b ? ell + q.a : ell + q.a - (s - q.b);
    int mu = std::max(ell - s + 1, 0);
    rows.push_back({mu, lam});
  }
  return rows;
}

MPoly rpp_oracle(const LozengeQuery& q, int ell, size_t max_fillings) {
  auto rows = lozenge_shape(q, ell);
  MPoly qq = MPoly::var("q");
  std::map<long, long> counts;
  for_each_filling(rows, q.r, max_fillings,
                   [&](const std::vector<std::vector<int>>&, long sum) {
                     counts[sum]++;
                   });
  MPoly out;
  for (auto& [e, c] : counts) out += MPoly(c) * qq.pow(int(e));
  return out;
}

std::vector<std::vector<std::vector<int>>> rpp_fillings(const LozengeQuery& q,
                                                        int ell,
                                                        size_t max_fillings) {
  auto rows = lozenge_shape(q, ell);
  std::vector<std::vector<std::vector<int>>> out;
  for_each_filling(rows, q.r, max_fillings,
                   [&](const std::vector<std::vector<int>>& vals, long) {
                     out.push_back(vals);
                   });
  return out;
}

LozengePaths rpp_to_paths(const LozengeQuery& q, int ell,
                          const std::vector<std::vector<int>>& filling) {
  auto rows = lozenge_shape(q, ell);
  if (filling.size() != rows.size())
    throw std::invalid_argument("rpp_to_paths: wrong row count");
  int m = q.a + q.b + 2 * q.r - 1;
  int big = m - 1 + ell;  // class of a drawn point (x, y) is big - x - y
  int top = ell + q.a;
  int bottom = int(rows.size());
  LozengePaths out;
  for (int k = 1; k <= q.r; k++) {
    std::vector<LiftedVertex> path;
    long x = top, y = 0;
    auto push = [&] {
      long xd = x + (k - 1), yd = y + (k - 1);
      int cls = int(big - xd - yd);
      if (cls < 0 || cls >= m)
        throw NetworkError("rpp_to_paths: path left the strip");
      path.push_back({cls, int(top - xd)});
    };
    auto left_to = [&](long xs) {
      while (x > xs) {
        x--;
        push();
      }
    };
    push();
    for (int s = 1; s <= bottom; s++) {
      long xs = rows[s - 1].first;
      for (int v : filling[s - 1])
        if (v < k) xs++;
      if (xs > x)
        throw std::invalid_argument("rpp_to_paths: filling not monotone");
      left_to(xs);
      y++;
      out.q_exponent += big - (x + k - 1) - (y + k - 1);
      push();
    }
    left_to(0);
    out.paths.push_back(std::move(path));
  }
  return out;
}

LozengeEndpoints lozenge_endpoints_and_beta(const LozengeQuery& q) {
  check_query(q);
  LozengeEndpoints out;
  out.m = q.a + q.b + 2 * q.r - 1;
  for (int k = 1; k <= q.r; k++) {
    out.ubf.push_back({out.m - q.a - 2 * k + 1, -(k - 1)});
    out.vbf.push_back({q.c + 2 * q.r - 2 * k, q.a + 1 - k});
  }
  // alpha, beta from the all-zeros filling at consecutive ell.
  long w[3];
  for (int ell = 1; ell <= 3; ell++) {
    auto rows = lozenge_shape(q, ell);
    std::vector<std::vector<int>> zeros;
    for (auto& [mu, lam] : rows)
      zeros.emplace_back(std::max(0, lam - mu), 0);
    w[ell - 1] = rpp_to_paths(q, ell, zeros).q_exponent;
  }
  out.beta = w[1] - w[0];
  if (w[2] - w[1] != out.beta)
    throw NetworkError("lozenge baseline weight is not linear in ell");
  out.alpha = out.beta - w[0];
  return out;
}

}  // namespace cylnet
