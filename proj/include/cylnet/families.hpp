#pragma once

#include "cylnet/network.hpp"
#include "cylnet/paths.hpp"

namespace cylnet {

// Grid network on a cylinder of width m and height n.  Columns wrap around;
// each horizontal step in row j carries weight x_{j+1}, vertical steps carry
// weight 1.  Paths from the bottom row to the top row collect one x per
// horizontal step, so LGV determinants produce Schur polynomials.
struct SchurNetwork {
  QuotientNetwork net;
  int n = 0;
  int m = 0;

  // Bottom endpoints at columns 0..r-1.
  RVertex sources(int r) const;
  // Top endpoints for a partition with exactly lambda.size() parts; entry k
  // (from the last part up) sits at column lambda[r-1-k] + k.
  RVertex targets(const std::vector<int>& lambda) const;
};

SchurNetwork build_schur(int n, int m);

// h_k(x_1..x_n); k < 0 yields 0.
MPoly complete_homogeneous(int k, int n);

// s_lambda(x_1..x_n) via the Jacobi-Trudi determinant; 0 when lambda has
// more than n nonzero parts.
MPoly schur_oracle(const std::vector<int>& lambda, int n);

// Two-way ladder on m vertices 0..m-1: edges k -> k+1 with weight 1 and
// offset 1, and k+1 -> k with weight q^k and offset 0.  Its simple cycles
// are the m-1 adjacent-pair loops with weights q^0..q^{m-2}.
QuotientNetwork build_lozenge(int m);

// F_0 = 0, F_1 = F_2 = 1, F_i = F_{i-1} + q^{i-3} t F_{i-2}.
TPoly carlitz(int n);

// Staircase skew shapes: lambda = ((l+a)^b, l+a-1, ..., c), mu = (l, ..., 1),
// filled weakly increasingly with values 0..r.  The associated ladder
// network has width a + b + 2r - 1.
struct LozengeQuery {
  int a = 1, b = 1, c = 1, d = 1, r = 1;
};

struct LozengeEndpoints {
  int m = 0;
  RVertex ubf, vbf;   // shift the targets by ell to advance the sequence
  long alpha = 0;     // q^|pi| = path weight * q^{alpha - ell*beta}
  long beta = 0;      // Q^(r) with t -> t*q^beta annihilates the sequence
};

// Row s (1-based) of the shape at parameter ell occupies columns
// mu_s+1 .. lambda_s; returns {mu_s, lambda_s} pairs.
std::vector<std::pair<int, int>> lozenge_shape(const LozengeQuery& q, int ell);

// Sum of q^|pi| over all fillings; throws EnumerationLimit past max_fillings.
MPoly rpp_oracle(const LozengeQuery& q, int ell,
                 size_t max_fillings = 10000000);

// Every filling, as per-row value vectors; throws EnumerationLimit.
std::vector<std::vector<std::vector<int>>> rpp_fillings(
    const LozengeQuery& q, int ell, size_t max_fillings = 100000);

// Image of one filling under the threshold-path bijection: path k traces the
// boundary between values < k and >= k, displaced k-1 diagonal steps.
struct LozengePaths {
  std::vector<std::vector<LiftedVertex>> paths;
  long q_exponent = 0;  // the path weight is q^q_exponent
};
LozengePaths rpp_to_paths(const LozengeQuery& q, int ell,
                          const std::vector<std::vector<int>>& filling);

LozengeEndpoints lozenge_endpoints_and_beta(const LozengeQuery& q);

// Domino networks live on the strip 0 <= y <= m with horizontal period 2n.
// Lattice weights w_{i,j} are 1 on the strip boundary and the indeterminate
// x<i>_<j> at interior points, i taken mod 2n.
MPoly domino_weight(int n, int m, long i, int j);

// Quotient network on black unit squares of the strip: vertex (i, j) is the
// square [i,i+1] x [j,j+1] with i+j odd, 0 <= i < 2n, 0 <= j < m.  Edges
// step right by (1,1), (2,0), or (1,-1) with lattice-weight-ratio weights.
struct DominoNetwork {
  QuotientNetwork net;
  int n = 0;
  int m = 0;

  // Cover vertex of the black square with lower-left corner (a, b).
  LiftedVertex lift(long a, int b) const;
};

DominoNetwork build_domino(int n, int m);

// Cell = lower-left corner of a unit square.
using Cell = std::pair<long, int>;

// Squares of the Aztec diamond around (i, j) of order ell, truncated to the
// strip; sorted.
std::vector<Cell> aztec_cells(int m, long i, int j, int ell);

// A tiling as a sorted list of cell pairs (each pair sorted).
using Tiling = std::vector<std::pair<Cell, Cell>>;

std::vector<Tiling> domino_tilings(const std::vector<Cell>& cells,
                                   size_t max_tilings = 2000000);

// Product over interior lattice points of w^eps, eps = +1/0/-1 when the
// point touches 4/3/2 dominoes.  Boundary points contribute nothing.
MPoly tiling_weight(int n, int m, const std::vector<Cell>& cells,
                    const Tiling& t);

struct DominoQuery {
  int n = 1, m = 2;
  long i = 0;
  int j = 0, ell0 = 0;
};

// f(ell): sum of tiling weights of the Aztec diamond around (i + ell, j) of
// order ell*n + ell0, truncated to the strip.
MPoly domino_oracle(const DominoQuery& q, int ell,
                    size_t max_tilings = 2000000);
// Same sum evaluated at a rational point, one tiling at a time.
mpq_class domino_oracle_eval(const DominoQuery& q, int ell,
                             const std::map<std::string, mpq_class>& point,
                             size_t max_tilings = 2000000);

// Image of a tiling under the local rules: each black square whose right
// white neighbor is covered by a non-horizontal-left domino emits one edge.
struct DominoPaths {
  std::vector<std::vector<LiftedVertex>> paths;
  MPoly weight;  // product of traversed edge weights
};
DominoPaths tiling_to_paths(const DominoNetwork& dn,
                            const std::vector<Cell>& cells, const Tiling& t);

}  // namespace cylnet
