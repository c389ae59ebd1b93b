#include "cylnet/matrix.hpp"

namespace cylnet {

TPoly charpoly(const Mat<MPoly>& m) {
  std::vector<MPoly> c = berkowitz(m);
  int n = m.n();
  TPoly p;
  for (int i = 0; i <= n; i++) p.set(n - i, c[i]);
  return p;
}

mpz_class det_bareiss(Mat<mpz_class> m) {
  int n = m.n();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; i++)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; j++) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace cylnet
