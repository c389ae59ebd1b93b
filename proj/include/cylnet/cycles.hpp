#pragma once

#include "cylnet/network.hpp"

namespace cylnet {

struct SimpleCycle {
  std::vector<int> vertices;   // rotated so the smallest index leads
  std::vector<int> edge_ids;   // indices into net.edges, aligned with vertices
  int winding = 0;             // total offset
  MPoly weight;                // product of edge weights
};

// All simple directed cycles of the quotient digraph, as edge sequences
// (parallel edges give distinct cycles).  Deterministic order.
std::vector<SimpleCycle> simple_cycles(const QuotientNetwork& net);

struct CycleFamily {
  std::vector<int> cycle_ids;  // indices into the simple_cycles output
  int r = 0;
  int winding = 0;
  MPoly weight;
};

class SizeLimit : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

// All families of pairwise vertex-disjoint simple cycles, including the
// empty family.  Throws SizeLimit if the cycle count exceeds max_cycles.
std::vector<CycleFamily> cycle_families(const QuotientNetwork& net,
                                        size_t max_cycles = 10000);

// Q_N(t) from the cycle-family expansion: monic of degree d = max family
// winding, Q_N = sum over families of (-1)^r t^{d-winding} weight.
TPoly q_n_cycles(const QuotientNetwork& net, size_t max_cycles = 10000);

// Q_N(t) via the transfer-matrix determinant Q_L(t) = det(Id - B(t)) and
// the conversion Q_N(t) = (-t)^d Q_L(1/t).  Any trailing t-power stripped
// during normalization is reported through stripped_t_power.
TPoly q_n_det(const QuotientNetwork& net, int* stripped_t_power = nullptr);

}  // namespace cylnet
