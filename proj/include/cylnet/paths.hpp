#pragma once

#include "cylnet/network.hpp"

namespace cylnet {

// A vertex of the universal cover: quotient vertex plus shift count in
// units of the period.
struct LiftedVertex {
  int base = 0;
  int shift = 0;
  bool operator==(const LiftedVertex&) const = default;
  auto operator<=>(const LiftedVertex&) const = default;
};

// An r-tuple of pairwise distinct lifted vertices.
using RVertex = std::vector<LiftedVertex>;

class WindowOverflow : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

class EnumerationLimit : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

// Exact weighted count of directed cover paths from `from` to `to`.
// Memoized DP over (vertex, shift) states; the feasible shift window at
// each vertex is bounded through minimum-offset distances (positive cycle
// windings make these well-defined).  Throws WindowOverflow if the window
// exceeds max_window shifts at some vertex.
MPoly count_paths(const QuotientNetwork& net, LiftedVertex from,
                  LiftedVertex to, int max_window = 64);

// r x r matrix with entry (i, j) = count_paths(ubf[i], vbf[j]).
Mat<MPoly> lgv_matrix(const QuotientNetwork& net, const RVertex& ubf,
                      const RVertex& vbf, int max_window = 64);

// f(l) = det lgv_matrix(ubf, vbf + l*period) for l = 0..L.
std::vector<MPoly> lgv_sequence(const QuotientNetwork& net, const RVertex& ubf,
                                const RVertex& vbf, int L, int max_window = 64);

// Brute-force signed enumeration of pairwise vertex-disjoint r-path tuples
// over all endpoint permutations; the LGV oracle.  Throws EnumerationLimit
// if more than max_paths single paths exist for some endpoint pair.
MPoly enumerate_r_paths(const QuotientNetwork& net, const RVertex& ubf,
                        const RVertex& vbf, size_t max_paths = 200000);

// As enumerate_r_paths but only the given endpoint permutation, unsigned.
MPoly enumerate_r_paths_sigma(const QuotientNetwork& net, const RVertex& ubf,
                              const RVertex& vbf, const std::vector<int>& sigma,
                              size_t max_paths = 200000);

// Local-form series engine: A(l) = S^l (Id - C)^{-1}, whose (i, j) entry is
// the weighted path count from lift vertex i to lift vertex j + l*period.
// Valid for networks in local form (all offsets in {0,1}).
std::vector<Mat<MPoly>> local_series(const LocalForm& form, int L);

}  // namespace cylnet
