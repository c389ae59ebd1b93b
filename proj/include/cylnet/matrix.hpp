#pragma once

#include <cassert>
#include <vector>

#include "cylnet/tpoly.hpp"

namespace cylnet {

// Square matrix over a commutative ring R.  R needs +, -, *, default
// construction to zero, and construction from long for 0/1.
template <class R>
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(size_t(n) * n, R(0)) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; i++) m(i, i) = R(1);
    return m;
  }

  int n() const { return n_; }
  R& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const R& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }

  Mat operator+(const Mat& o) const {
    assert(n_ == o.n_);
    Mat r(n_);
    for (size_t k = 0; k < a_.size(); k++) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(n_ == o.n_);
    Mat r(n_);
    for (size_t k = 0; k < a_.size(); k++) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(n_ == o.n_);
    Mat r(n_);
    for (int i = 0; i < n_; i++)
      for (int k = 0; k < n_; k++) {
        const R& aik = (*this)(i, k);
        for (int j = 0; j < n_; j++) r(i, j) = r(i, j) + aik * o(k, j);
      }
    return r;
  }

 private:
  int n_;
  std::vector<R> a_;
};

namespace detail {

template <class R>
R det_cofactor(const Mat<R>& m, std::vector<int>& cols, int row) {
  int n = m.n();
  if (row == n) return R(1);
  R total(0);
  bool plus = true;
  for (size_t k = 0; k < cols.size(); k++) {
    int j = cols[k];
    if (j < 0) continue;
    cols[k] = -1;
    R sub = det_cofactor(m, cols, row + 1);
    cols[k] = j;
    R term = m(row, j) * sub;
    total = plus ? total + term : total - term;
    plus = !plus;
  }
  return total;
}

}  // namespace detail

// Coefficients c[0..n] of det(t*Id - M) = sum c[i] t^{n-i}, c[0] = 1,
// computed by the Berkowitz division-free algorithm.
template <class R>
std::vector<R> berkowitz(const Mat<R>& m) {
  int n = m.n();
  std::vector<R> p{R(1)};
  if (n == 0) return p;
  // Iterate over leading principal submatrices of growing size i+1.
  for (int i = 0; i < n; i++) {
    // Toeplitz column for the size-(i+1) step: v[0]=1, v[1]=-m_ii,
    // v[k+2] = -(row_i . A^k . col_i) with A the leading i x i block.
    std::vector<R> v(i + 2, R(0));
    v[0] = R(1);
    v[1] = R(0) - m(i, i);
    if (i > 0) {
      std::vector<R> w(i);
      for (int j = 0; j < i; j++) w[j] = m(j, i);
      for (int k = 0; k + 2 <= i + 1; k++) {
        R dot(0);
        for (int j = 0; j < i; j++) dot = dot + m(i, j) * w[j];
        v[k + 2] = R(0) - dot;
        if (k + 3 <= i + 1) {
          std::vector<R> w2(i, R(0));
          for (int a = 0; a < i; a++)
            for (int b = 0; b < i; b++) w2[a] = w2[a] + m(a, b) * w[b];
          w = std::move(w2);
        }
      }
    }
    std::vector<R> np(p.size() + 1, R(0));
    for (size_t a = 0; a < p.size(); a++)
      for (size_t b = 0; b < v.size() && a + b < np.size(); b++)
        np[a + b] = np[a + b] + p[a] * v[b];
    p = std::move(np);
  }
  return p;
}

// Exact division-free determinant: cofactor expansion for n <= 6, Berkowitz
// above.  det of the 0x0 matrix is 1.
template <class R>
R det_division_free(const Mat<R>& m) {
  int n = m.n();
  if (n == 0) return R(1);
  if (n <= 6) {
    std::vector<int> cols(n);
    for (int j = 0; j < n; j++) cols[j] = j;
    return detail::det_cofactor(m, cols, 0);
  }
  std::vector<R> c = berkowitz(m);
  R det = c[n];
  if (n & 1) det = R(0) - det;
  return det;
}

// Monic characteristic polynomial det(t*Id - M) of a constant-in-t matrix.
TPoly charpoly(const Mat<MPoly>& m);

// Fraction-free Gaussian elimination (Bareiss) determinant over the
// integers; used as an independent oracle in tests.
mpz_class det_bareiss(Mat<mpz_class> m);

}  // namespace cylnet
