#include "cylnet/sturm.hpp"

#include <stdexcept>

namespace cylnet {

namespace {

int qsign(const mpq_class& x) { return sgn(x); }

// Sign of p at +inf (dir = +1) or -inf (dir = -1); p nonzero.
int sign_at_infinity(const QPoly& p, int dir) {
  int d = int(p.size()) - 1;
  int lead = qsign(p[d]);
  return (dir < 0 && d % 2 == 1) ? -lead : lead;
}

mpq_class eval_at(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Sign changes along the chain, with zeros skipped; at = 0 evaluates at the
// finite point x, otherwise at +/- infinity.
int variations(const std::vector<QPoly>& chain, int at, const mpq_class& x) {
  int count = 0, prev = 0;
  for (auto& p : chain) {
    int s = at == 0 ? qsign(eval_at(p, x)) : sign_at_infinity(p, at);
    if (s == 0) continue;
    if (prev != 0 && s != prev) count++;
    prev = s;
  }
  return count;
}

// Euclidean remainder of a by b; b nonzero.
QPoly qpoly_rem(QPoly a, const QPoly& b) {
  int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db && !a.empty()) {
    mpq_class q = a.back() / b[db];
    int shift = int(a.size()) - 1 - db;
    for (int k = 0; k <= db; k++) a[k + shift] -= q * b[k];
    a.pop_back();
    a = qpoly_trim(std::move(a));
  }
  return a;
}

QPoly monic(QPoly p) {
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Distinct positive roots of a polynomial with nonzero constant term.
int distinct_positive_nonzero_at_0(const QPoly& p) {
  auto chain = sturm_chain(p);
  return variations(chain, 0, 0) - variations(chain, +1, 0);
}

}  // namespace

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qpoly_derivative(const QPoly& p) {
  QPoly d;
  for (size_t k = 1; k < p.size(); k++) d.push_back(mpq_class(long(k)) * p[k]);
  return qpoly_trim(std::move(d));
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_trim(std::move(a));
  b = qpoly_trim(std::move(b));
  while (!b.empty()) {
    QPoly r = qpoly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  QPoly p0 = qpoly_trim(p);
  if (p0.empty()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<QPoly> chain{p0};
  QPoly p1 = qpoly_derivative(p0);
  while (!p1.empty()) {
    QPoly r = qpoly_rem(chain.back(), p1);
    chain.push_back(p1);
    for (auto& c : r) c = -c;
    p1 = std::move(r);
  }
  return chain;
}

int count_distinct_real_roots(const QPoly& p) {
  QPoly q = qpoly_trim(p);
  if (q.empty()) throw std::invalid_argument("count roots: zero polynomial");
  if (q.size() == 1) return 0;
  auto chain = sturm_chain(q);
  return variations(chain, -1, 0) - variations(chain, +1, 0);
}

int count_distinct_positive_roots(const QPoly& p) {
  QPoly q = qpoly_trim(p);
  if (q.empty()) throw std::invalid_argument("count roots: zero polynomial");
  // Roots at t = 0 are excluded: strip the monomial factor first.
  size_t low = 0;
  while (low < q.size() && q[low] == 0) low++;
  q.erase(q.begin(), q.begin() + long(low));
  if (q.size() <= 1) return 0;
  return distinct_positive_nonzero_at_0(q);
}

namespace {

// Sum the distinct-root counts of the repeated-gcd chain p, gcd(p, p'),
// gcd of that with its derivative, ...: a root of multiplicity m is counted
// in the first m entries, giving the count with multiplicity.
int with_multiplicity(QPoly p, int (*distinct)(const QPoly&)) {
  int total = 0;
  p = qpoly_trim(std::move(p));
  if (p.empty()) throw std::invalid_argument("count roots: zero polynomial");
  while (p.size() > 1) {
    total += distinct(p);
    p = qpoly_gcd(p, qpoly_derivative(p));
  }
  return total;
}

}  // namespace

int count_real_roots(const QPoly& p) {
  return with_multiplicity(p, count_distinct_real_roots);
}

int count_positive_roots(const QPoly& p) {
  return with_multiplicity(p, count_distinct_positive_roots);
}

}  // namespace cylnet
