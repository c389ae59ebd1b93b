#pragma once

#include "cylnet/matrix.hpp"

namespace cylnet {

class BadRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// d x d companion matrix of a monic degree-d polynomial; its
// characteristic polynomial is Q.
Mat<MPoly> companion(const TPoly& q);

// r-th exterior power: C(n,r) x C(n,r) matrix of r x r minors, rows and
// columns indexed by sorted r-subsets in lexicographic order.
Mat<MPoly> exterior_power(const Mat<MPoly>& m, int r);

// r-th symmetric power on the degree-r monomial basis (multisets of basis
// indices in lexicographic order), without divided-power normalization.
Mat<MPoly> symmetric_power(const Mat<MPoly>& m, int r);

// Monic polynomial of degree C(d,r) whose roots are the strict r-fold
// products of Q's roots: charpoly of the exterior power of the companion.
TPoly q_plee(const TPoly& q, int r);

// Monic polynomial of degree C(d+r-1,r) whose roots are the weak r-fold
// products of Q's roots: charpoly of the symmetric power of the companion.
TPoly q_pleh(const TPoly& q, int r);

struct PartitionShape {
  std::vector<int> parts;  // weakly decreasing, nonnegative

  static PartitionShape of(std::vector<int> parts);
  PartitionShape conjugate() const;
  int size() const;
};

// Dual Jacobi-Trudi specialization: det of the matrix with (i,j) entry
// H[conj(lambda)_i - i + j], out-of-range indices contributing 0.
MPoly psi_schur(const PartitionShape& lambda, const std::vector<MPoly>& h);

}  // namespace cylnet
