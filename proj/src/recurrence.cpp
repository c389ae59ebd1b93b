#include "cylnet/recurrence.hpp"

#include <sstream>

namespace cylnet {

RecurrenceReport annihilates(const TPoly& q, const std::vector<MPoly>& f) {
  if (!q.is_monic()) throw std::invalid_argument("annihilates: q not monic");
  int d = q.degree();
  if (int(f.size()) < d + 2)
    throw Inconclusive("annihilates: need at least deg+2 sequence values");
  RecurrenceReport report;
  int windows = int(f.size()) - d;
  for (int n = 0; n < windows; n++) {
    MPoly res;
    for (int k = 0; k <= d; k++) res += q.coeff(k) * f[n + k];
    report.residuals.push_back(std::move(res));
  }
  int first = windows;
  while (first > 0 && report.residuals[first - 1].is_zero()) first--;
  if (first < windows && windows - first >= 2) {
    report.holds = true;
    report.first_valid_index = first;
  } else if (first == 0 && windows >= 2) {
    report.holds = true;
    report.first_valid_index = 0;
  }
  return report;
}

QPoly qpoly_from_tpoly(const TPoly& q,
                       const std::map<std::string, mpq_class>& point) {
  if (q.lowdeg() < 0)
    throw std::invalid_argument("qpoly_from_tpoly: negative t-degree");
  QPoly out(q.degree() + 1, 0);
  for (auto& [k, c] : q.coeffs()) out[k] = c.eval(point);
  return out;
}

std::optional<QPoly> qpoly_exact_div(const QPoly& a, const QPoly& b) {
  if (b.empty() || b.back() == 0)
    throw std::domain_error("qpoly_exact_div: bad divisor");
  QPoly r = a;
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.empty()) return QPoly{};
  if (r.size() < b.size()) return std::nullopt;
  QPoly q(r.size() - b.size() + 1, 0);
  for (int k = int(q.size()) - 1; k >= 0; k--) {
    mpq_class c = r[k + b.size() - 1] / b.back();
    q[k] = c;
    for (size_t i = 0; i < b.size(); i++) r[k + i] -= c * b[i];
  }
  for (auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

std::string qpoly_str(const QPoly& q) {
  std::ostringstream out;
  bool first = true;
  for (int k = int(q.size()) - 1; k >= 0; k--) {
    if (q[k] == 0 && !(first && k == 0)) continue;
    mpq_class c = q[k];
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    mpq_class a = abs(c);
    if (a != 1 || k == 0) out << a.get_str();
    if (k > 0) {
      if (a != 1) out << "*";
      out << (k == 1 ? "t" : "t^" + std::to_string(k));
    }
  }
  if (first) out << "0";
  return out.str();
}

std::vector<mpq_class> extend(const QPoly& q, std::vector<mpq_class> init,
                              int L) {
  if (q.empty() || q.back() != 1)
    throw std::invalid_argument("extend: polynomial must be monic");
  int d = int(q.size()) - 1;
  if (int(init.size()) < d)
    throw std::invalid_argument("extend: need deg(q) initial values");
  while (int(init.size()) < L) {
    int n = int(init.size());
    mpq_class next = 0;
    for (int k = 0; k < d; k++) next -= q[k] * init[n - d + k];
    init.push_back(next);
  }
  return init;
}

namespace {

// Berlekamp-Massey over the rationals: returns the monic characteristic
// polynomial (degree L) of the shortest LFSR generating f.
QPoly berlekamp_massey(const std::vector<mpq_class>& f) {
  std::vector<mpq_class> c{1}, b{1};
  int l = 0, m = 1;
  mpq_class bb = 1;
  for (size_t n = 0; n < f.size(); n++) {
    mpq_class delta = f[n];
    for (int i = 1; i <= l; i++)
      if (size_t(i) < c.size()) delta += c[i] * f[n - i];
    if (delta == 0) {
      m++;
      continue;
    }
    if (2 * l <= int(n)) {
      std::vector<mpq_class> saved = c;
      mpq_class coef = delta / bb;
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (size_t i = 0; i < b.size(); i++) c[i + m] -= coef * b[i];
      l = int(n) + 1 - l;
      b = saved;
      bb = delta;
      m = 1;
    } else {
      mpq_class coef = delta / bb;
      if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
      for (size_t i = 0; i < b.size(); i++) c[i + m] -= coef * b[i];
      m++;
    }
  }
  // Connection polynomial c: f(n) = -sum_{i>=1} c[i] f(n-i).  The monic
  // characteristic polynomial is t^l + c[1] t^{l-1} + ... + c[l].
  QPoly out(l + 1, 0);
  out[l] = 1;
  for (int i = 1; i <= l; i++)
    out[l - i] = size_t(i) < c.size() ? c[i] : mpq_class(0);
  return out;
}

}  // namespace

MinimalRecurrence minimal_recurrence(const std::vector<mpq_class>& f,
                                     int drop_prefix) {
  if (drop_prefix < 0 || drop_prefix >= int(f.size()))
    throw std::invalid_argument("minimal_recurrence: bad prefix drop");
  std::vector<mpq_class> tail(f.begin() + drop_prefix, f.end());
  if (tail.size() < 4)
    throw Inconclusive("minimal_recurrence: sequence too short");
  QPoly full = berlekamp_massey(tail);
  std::vector<mpq_class> shorter(tail.begin(), tail.end() - 2);
  QPoly check = berlekamp_massey(shorter);
  if (full != check)
    throw Unstable("minimal recurrence changed when the window shrank");
  if (2 * (int(full.size()) - 1) > int(tail.size()))
    throw Inconclusive("window too short to trust the detected degree");
  return {full, drop_prefix};
}

}  // namespace cylnet
