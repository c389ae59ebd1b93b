#include "cylnet/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cylnet/threads.hpp"

namespace cylnet {

namespace {

constexpr long long kInf = 1LL << 60;

// Single-source minimum total offset per vertex (Bellman-Ford; cycles all
// have positive total offset, so the minima are finite or +inf).
std::vector<long long> min_offset_from(const QuotientNetwork& net, int source,
                                       bool reversed) {
  int n = int(net.vertices.size());
  std::vector<long long> dist(n, kInf);
  dist[source] = 0;
  for (int round = 0; round < n; round++) {
    bool changed = false;
    for (auto& e : net.edges) {
      int tail = reversed ? e.head : e.tail;
      int head = reversed ? e.tail : e.head;
      if (dist[tail] < kInf && dist[tail] + e.offset < dist[head]) {
        dist[head] = dist[tail] + e.offset;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

struct CoverDP {
  const QuotientNetwork& net;
  LiftedVertex target;
  int max_window;
  std::vector<long long> lo;  // per vertex: min feasible shift
  std::vector<long long> hi;  // per vertex: max feasible shift
  std::map<LiftedVertex, MPoly> memo;
  std::vector<std::vector<int>> out_edges;

  CoverDP(const QuotientNetwork& n, LiftedVertex from, LiftedVertex to,
          int window)
      : net(n), target(to), max_window(window), out_edges(n.vertices.size()) {
    for (size_t i = 0; i < net.edges.size(); i++)
      out_edges[net.edges[i].tail].push_back(int(i));
    std::vector<long long> from_src = min_offset_from(net, from.base, false);
    std::vector<long long> to_tgt = min_offset_from(net, to.base, true);
    int p = int(net.vertices.size());
    lo.resize(p);
    hi.resize(p);
    for (int a = 0; a < p; a++) {
      lo[a] = from_src[a] >= kInf ? kInf : from.shift + from_src[a];
      hi[a] = to_tgt[a] >= kInf ? -kInf : to.shift - to_tgt[a];
      if (lo[a] < kInf && hi[a] > -kInf && hi[a] - lo[a] + 1 > max_window) {
        std::ostringstream msg;
        msg << "shift window of " << (hi[a] - lo[a] + 1) << " at vertex "
            << net.vertices[a] << " exceeds limit " << max_window;
        throw WindowOverflow(msg.str());
      }
    }
  }

  const MPoly& count(LiftedVertex at) {
    auto it = memo.find(at);
    if (it != memo.end()) return it->second;
    MPoly total;
    if (at == target) total += MPoly(1);
    for (int eid : out_edges[at.base]) {
      const EdgeRecord& e = net.edges[eid];
      LiftedVertex next{e.head, at.shift + e.offset};
      if (next.shift < lo[next.base] || next.shift > hi[next.base]) continue;
      total += e.weight * count(next);
    }
    return memo.emplace(at, std::move(total)).first->second;
  }
};

}  // namespace

MPoly count_paths(const QuotientNetwork& net, LiftedVertex from,
                  LiftedVertex to, int max_window) {
  int n = int(net.vertices.size());
  if (from.base < 0 || from.base >= n || to.base < 0 || to.base >= n)
    throw NetworkError("count_paths: vertex out of range");
  CoverDP dp(net, from, to, max_window);
  if (dp.lo[from.base] > from.shift || dp.hi[from.base] < from.shift)
    return MPoly();
  return dp.count(from);
}

Mat<MPoly> lgv_matrix(const QuotientNetwork& net, const RVertex& ubf,
                      const RVertex& vbf, int max_window) {
  if (ubf.size() != vbf.size())
    throw NetworkError("lgv_matrix: endpoint tuples differ in size");
  int r = int(ubf.size());
  Mat<MPoly> a(r);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < r; j++)
      a(i, j) = count_paths(net, ubf[i], vbf[j], max_window);
  return a;
}

std::vector<MPoly> lgv_sequence(const QuotientNetwork& net, const RVertex& ubf,
                                const RVertex& vbf, int L, int max_window) {
  if (L < 0) throw NetworkError("lgv_sequence: negative length");
  std::vector<MPoly> out(L + 1);
  parallel_for(size_t(L) + 1, [&](size_t l) {
    RVertex shifted = vbf;
    for (auto& v : shifted) v.shift += int(l);
    out[l] = det_division_free(lgv_matrix(net, ubf, shifted, max_window));
  });
  return out;
}

namespace {

struct PathEnum {
  const QuotientNetwork& net;
  size_t max_paths;
  std::vector<std::vector<int>> out_edges;

  PathEnum(const QuotientNetwork& n, size_t cap)
      : net(n), max_paths(cap), out_edges(n.vertices.size()) {
    for (size_t i = 0; i < net.edges.size(); i++)
      out_edges[net.edges[i].tail].push_back(int(i));
  }

  // All cover paths from -> to, as (vertex set, weight).  Window pruning as
  // in the DP keeps the search finite.
  void paths(LiftedVertex from, LiftedVertex to,
             std::vector<std::pair<std::set<LiftedVertex>, MPoly>>* out) {
    CoverDP dp(net, from, to, 1 << 20);
    std::set<LiftedVertex> visited{from};
    MPoly weight(1);
    auto rec = [&](auto&& self, LiftedVertex at) -> void {
      if (at == to) {
        out->push_back({visited, weight});
        if (out->size() > max_paths)
          throw EnumerationLimit("too many paths to enumerate");
      }
      for (int eid : out_edges[at.base]) {
        const EdgeRecord& e = net.edges[eid];
        LiftedVertex next{e.head, at.shift + e.offset};
        if (next.shift < dp.lo[next.base] || next.shift > dp.hi[next.base])
          continue;
        if (dp.count(next).is_zero()) continue;
        if (visited.count(next)) continue;  // cover is acyclic; safety only
        visited.insert(next);
        MPoly saved = weight;
        weight *= e.weight;
        self(self, next);
        weight = saved;
        visited.erase(next);
      }
    };
    if (dp.lo[from.base] <= from.shift && dp.hi[from.base] >= from.shift)
      rec(rec, from);
  }
};

MPoly disjoint_tuples_weight(
    const std::vector<std::vector<std::pair<std::set<LiftedVertex>, MPoly>>>&
        per_pair) {
  MPoly total;
  std::vector<const std::set<LiftedVertex>*> chosen;
  auto rec = [&](auto&& self, size_t i, const MPoly& weight) -> void {
    if (i == per_pair.size()) {
      total += weight;
      return;
    }
    for (auto& [verts, w] : per_pair[i]) {
      bool clash = false;
      for (auto* prev : chosen) {
        for (auto& v : verts)
          if (prev->count(v)) {
            clash = true;
            break;
          }
        if (clash) break;
      }
      if (clash) continue;
      chosen.push_back(&verts);
      self(self, i + 1, weight * w);
      chosen.pop_back();
    }
  };
  rec(rec, 0, MPoly(1));
  return total;
}

}  // namespace

MPoly enumerate_r_paths_sigma(const QuotientNetwork& net, const RVertex& ubf,
                              const RVertex& vbf, const std::vector<int>& sigma,
                              size_t max_paths) {
  size_t r = ubf.size();
  if (vbf.size() != r || sigma.size() != r)
    throw NetworkError("enumerate_r_paths_sigma: size mismatch");
  PathEnum en(net, max_paths);
  std::vector<std::vector<std::pair<std::set<LiftedVertex>, MPoly>>> per_pair(r);
  for (size_t i = 0; i < r; i++)
    en.paths(ubf[i], vbf[sigma[i]], &per_pair[i]);
  return disjoint_tuples_weight(per_pair);
}

MPoly enumerate_r_paths(const QuotientNetwork& net, const RVertex& ubf,
                        const RVertex& vbf, size_t max_paths) {
  size_t r = ubf.size();
  if (vbf.size() != r) throw NetworkError("enumerate_r_paths: size mismatch");
  std::vector<int> sigma(r);
  for (size_t i = 0; i < r; i++) sigma[i] = int(i);
  MPoly total;
  do {
    // Sign of the permutation by counting inversions.
    int inv = 0;
    for (size_t i = 0; i < r; i++)
      for (size_t j = i + 1; j < r; j++)
        if (sigma[i] > sigma[j]) inv++;
    MPoly part = enumerate_r_paths_sigma(net, ubf, vbf, sigma, max_paths);
    total += (inv % 2) ? -part : part;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::vector<Mat<MPoly>> local_series(const LocalForm& form, int L) {
  int n = form.S.n();
  // (Id - C)^{-1} = Id + C + C^2 + ... (C nilpotent).
  Mat<MPoly> inv = Mat<MPoly>::identity(n);
  Mat<MPoly> power = form.C;
  for (int k = 0; k < n; k++) {
    bool zero = true;
    for (int i = 0; i < n && zero; i++)
      for (int j = 0; j < n && zero; j++)
        if (!power(i, j).is_zero()) zero = false;
    if (zero) break;
    inv = inv + power;
    power = power * form.C;
  }
  std::vector<Mat<MPoly>> out;
  out.push_back(inv);
  for (int l = 1; l <= L; l++) out.push_back(form.S * out.back());
  return out;
}

}  // namespace cylnet
