#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cylnet/cycles.hpp"
#include "cylnet/families.hpp"
#include "cylnet/plethysm.hpp"
#include "cylnet/recurrence.hpp"

using namespace cylnet;

namespace {

int fib(int n) {
  int a = 0, b = 1;
  for (int i = 0; i < n; i++) {
    int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

size_t term_count(const TPoly& q) {
  size_t total = 0;
  for (auto& [k, c] : q.coeffs()) total += c.size();
  return total;
}

// Independent matching counter: pick each white cell's partner in turn.
long matching_count(const std::vector<Cell>& cells) {
  std::set<Cell> free(cells.begin(), cells.end());
  std::vector<Cell> whites;
  for (auto& [a, b] : cells)
    if (((a + b) % 2 + 2) % 2 == 0) whites.push_back({a, b});
  std::function<long(size_t)> rec = [&](size_t i) -> long {
    if (i == whites.size()) return 1;
    auto [a, b] = whites[i];
    long total = 0;
    for (Cell nb : {Cell{a + 1, b}, Cell{a - 1, b}, Cell{a, b + 1},
                    Cell{a, b - 1}}) {
      if (!free.count(nb)) continue;
      free.erase(nb);
      total += rec(i + 1);
      free.insert(nb);
    }
    return total;
  };
  if (2 * whites.size() != cells.size()) return 0;
  return rec(0);
}

bool pairwise_disjoint(const std::vector<std::vector<LiftedVertex>>& paths) {
  std::set<LiftedVertex> seen;
  for (auto& p : paths)
    for (auto& v : p)
      if (!seen.insert(v).second) return false;
  return true;
}

}  // namespace

TEST_CASE("strip network shape") {
  DominoNetwork dn = build_domino(1, 3);
  CHECK(dn.net.vertices.size() == 3);
  CHECK(simple_cycles(dn.net).size() == 5);
  CHECK(build_domino(2, 4).net.vertices.size() == 8);
  CHECK_THROWS_AS(build_domino(0, 3), NetworkError);
}

TEST_CASE("one-row polynomial term counts follow a Pell recurrence") {
  // One cycle per row (loop) plus one per adjacent row pair; with n = 1 a
  // row holds a single vertex, so overlapping pairs share it and the family
  // count g obeys g(m) = 2 g(m-1) + g(m-2), g(1) = 2, g(2) = 5.
  std::vector<size_t> g{2, 5};
  while (g.size() < 6) g.push_back(2 * g.back() + g[g.size() - 2]);
  for (int m = 2; m <= 6; m++) {
    TPoly q = q_n_cycles(build_domino(1, m).net);
    CHECK(q.degree() == m);
    CHECK(simple_cycles(build_domino(1, m).net).size() == size_t(2 * m - 1));
    CHECK(cycle_families(build_domino(1, m).net).size() == g[m - 1]);
    CHECK(term_count(q) == g[m - 1]);
  }
}

TEST_CASE("unit weights turn coefficients into family counts") {
  TPoly q = q_n_cycles(build_domino(1, 3).net);
  std::map<std::string, MPoly> ones;
  for (auto& v : build_domino(1, 3).net.vars) ones[v] = MPoly(1);
  TPoly qn = q.subst_vars(ones);
  long total = 0;
  for (auto& [k, c] : qn.coeffs()) {
    REQUIRE(c.size() == 1);
    total += std::abs(long(c.terms().begin()->second.get_si()));
  }
  CHECK(total == 12);
}

TEST_CASE("small regions and their tilings") {
  // A single horizontal domino in the bottom row: the only contributing
  // point is its top-edge midpoint, touching one domino.
  std::vector<Cell> strip{{0, 0}, {1, 0}};
  auto ts = domino_tilings(strip);
  REQUIRE(ts.size() == 1);
  CHECK(tiling_weight(1, 5, strip, ts[0]) == MPoly::var("x1_1", -2));

  // Untruncated order-1 diamond: 2x2 block with two tilings; the center
  // sees 2 dominoes either way, the four edge midpoints see 1 or 2
  // depending on orientation.
  auto block = aztec_cells(10, 4, 5, 1);
  REQUIRE(block.size() == 4);
  auto bt = domino_tilings(block);
  REQUIRE(bt.size() == 2);
  auto v = [](const std::string& s, int e) { return MPoly::var(s, e); };
  MPoly center = v("x4_5", -1);
  MPoly horiz = center * v("x3_5", -1) * v("x5_5", -1) * v("x4_4", -2) *
                v("x4_6", -2);
  MPoly vert = center * v("x3_5", -2) * v("x5_5", -2) * v("x4_4", -1) *
               v("x4_6", -1);
  CHECK(tiling_weight(5, 10, block, bt[0]) +
            tiling_weight(5, 10, block, bt[1]) ==
        horiz + vert);
  CHECK(domino_oracle({5, 10, 4, 5, 1}, 0) == horiz + vert);
}

TEST_CASE("all-ones counts agree with an independent matching counter") {
  std::map<std::string, mpq_class> ones;
  for (int i = 0; i < 2; i++)
    for (int j = 1; j < 3; j++)
      ones["x" + std::to_string(i) + "_" + std::to_string(j)] = 1;
  DominoQuery q{1, 3, 1, 1, 0};
  for (int ell = 0; ell <= 3; ell++) {
    auto cells = aztec_cells(q.m, q.i + ell, q.j, ell + q.ell0);
    CHECK(domino_oracle_eval(q, ell, ones) == matching_count(cells));
  }
}

TEST_CASE("local rules produce disjoint paths with fixed endpoints") {
  DominoNetwork dn = build_domino(1, 3);
  DominoQuery q{1, 3, 1, 1, 0};
  for (int ell = 1; ell <= 3; ell++) {
    long ii = q.i + ell;
    int order = ell * q.n + q.ell0;
    auto cells = aztec_cells(q.m, ii, q.j, order);
    int r = std::min(q.m - q.j, order);
    std::set<std::vector<std::vector<LiftedVertex>>> images;
    std::optional<std::pair<MPoly, MPoly>> ratio;  // (tiling wt, path wt)
    for (auto& t : domino_tilings(cells)) {
      DominoPaths dp = tiling_to_paths(dn, cells, t);
      REQUIRE(dp.paths.size() == size_t(r));
      for (int k = 0; k < r; k++) {
        CHECK(dp.paths[k].front() == dn.lift(ii - order + k - 1, q.j + k));
        CHECK(dp.paths[k].back() == dn.lift(ii + order - k - 1, q.j + k));
      }
      CHECK(pairwise_disjoint(dp.paths));
      CHECK(images.insert(dp.paths).second);
      // wt(T) = tau * wt(paths) with tau tiling-independent.
      MPoly tw = tiling_weight(q.n, q.m, cells, t);
      if (!ratio)
        ratio = {tw, dp.weight};
      else
        CHECK(tw * ratio->second == dp.weight * ratio->first);
    }
  }
}

TEST_CASE("exterior-power polynomial annihilates the tiling sums") {
  DominoNetwork dn = build_domino(1, 3);
  TPoly qr = q_plee(q_n_cycles(dn.net), 2);  // m - j = 2
  std::mt19937_64 rng(12021);
  std::map<std::string, mpq_class> point;
  for (auto& v : dn.net.vars) point[v] = long(rng() % 7 + 1);
  QPoly cp = qpoly_from_tpoly(qr, point);
  // The region center (i + ell, j) and order ell + ell0 must keep
  // i + j - ell0 even so that tilings map to paths in this network.
  for (auto [i0, ell0] : {std::pair<long, int>{1, 0}, {2, 1}}) {
    DominoQuery q{1, 3, i0, 1, ell0};
    std::vector<mpq_class> f;
    for (int ell = 0; ell <= 5; ell++)
      f.push_back(domino_oracle_eval(q, ell, point));
    // Residuals of the degree-3 recurrence must vanish from index 1 on.
    for (size_t n0 = 1; n0 + cp.size() - 1 < f.size(); n0++) {
      mpq_class res = 0;
      for (size_t k = 0; k < cp.size(); k++) res += cp[k] * f[n0 + k];
      CHECK(res == 0);
    }
  }
}
