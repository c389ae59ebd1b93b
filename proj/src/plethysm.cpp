#include "cylnet/plethysm.hpp"

#include <algorithm>
#include <map>

namespace cylnet {

namespace {

std::vector<std::vector<int>> sorted_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; i++) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> sorted_multisets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; i++) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Mat<MPoly> companion(const TPoly& q) {
  if (!q.is_monic()) throw std::invalid_argument("companion: polynomial not monic");
  int d = q.degree();
  Mat<MPoly> m(d);
  for (int i = 0; i + 1 < d; i++) m(i + 1, i) = MPoly(1);
  for (int i = 0; i < d; i++) m(i, d - 1) = -q.coeff(i);
  return m;
}

Mat<MPoly> exterior_power(const Mat<MPoly>& m, int r) {
  int n = m.n();
  if (r < 0 || r > n) throw BadRank("exterior_power: rank out of range");
  std::vector<std::vector<int>> subsets = sorted_subsets(n, r);
  Mat<MPoly> out(int(subsets.size()));
  for (size_t a = 0; a < subsets.size(); a++)
    for (size_t b = 0; b < subsets.size(); b++) {
      Mat<MPoly> minor(r);
      for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++)
          minor(i, j) = m(subsets[a][i], subsets[b][j]);
      out(int(a), int(b)) = det_division_free(minor);
    }
  return out;
}

Mat<MPoly> symmetric_power(const Mat<MPoly>& m, int r) {
  if (r < 0) throw BadRank("symmetric_power: negative rank");
  int n = m.n();
  std::vector<std::vector<int>> basis = sorted_multisets(n, r);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); i++) index[basis[i]] = int(i);
  Mat<MPoly> out(int(basis.size()));
  // Column J: expand prod_k (sum_i m(i, j_k) w_i) on the monomial basis.
  for (size_t b = 0; b < basis.size(); b++) {
    std::map<std::vector<int>, MPoly> expansion;
    expansion[{}] = MPoly(1);
    for (int j : basis[b]) {
      std::map<std::vector<int>, MPoly> next;
      for (auto& [mono, coeff] : expansion)
        for (int i = 0; i < n; i++) {
          if (m(i, j).is_zero()) continue;
          std::vector<int> grown = mono;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
          next[grown] += coeff * m(i, j);
        }
      expansion = std::move(next);
    }
    for (auto& [mono, coeff] : expansion)
      out(index.at(mono), int(b)) = coeff;
  }
  return out;
}

TPoly q_plee(const TPoly& q, int r) {
  if (!q.is_monic()) throw std::invalid_argument("q_plee: polynomial not monic");
  if (r < 1 || r > q.degree()) throw BadRank("q_plee: rank out of range");
  return charpoly(exterior_power(companion(q), r));
}

TPoly q_pleh(const TPoly& q, int r) {
  if (!q.is_monic()) throw std::invalid_argument("q_pleh: polynomial not monic");
  if (r < 1) throw BadRank("q_pleh: rank must be positive");
  return charpoly(symmetric_power(companion(q), r));
}

PartitionShape PartitionShape::of(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i + 1 < parts.size(); i++)
    if (parts[i] < parts[i + 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  if (!parts.empty() && parts.back() < 0)
    throw std::invalid_argument("partition parts must be nonnegative");
  return PartitionShape{std::move(parts)};
}

PartitionShape PartitionShape::conjugate() const {
  std::vector<int> conj;
  for (int col = 0; col < (parts.empty() ? 0 : parts[0]); col++) {
    int height = 0;
    for (int p : parts)
      if (p > col) height++;
    conj.push_back(height);
  }
  return PartitionShape{std::move(conj)};
}

int PartitionShape::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

MPoly psi_schur(const PartitionShape& lambda, const std::vector<MPoly>& h) {
  PartitionShape conj = lambda.conjugate();
  int n = int(conj.parts.size());
  if (n == 0) return MPoly(1);
  auto hval = [&](int k) -> MPoly {
    if (k < 0 || k >= int(h.size())) return MPoly();
    return h[k];
  };
  Mat<MPoly> m(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      m(i, j) = hval(conj.parts[i] - (i + 1) + (j + 1));
  return det_division_free(m);
}

}  // namespace cylnet
