#include "cylnet/tpoly.hpp"

#include <sstream>

namespace cylnet {

const MPoly& TPoly::coeff(int k) const {
  static const MPoly zero;
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? zero : it->second;
}

void TPoly::set(int k, const MPoly& c) {
  if (c.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

bool TPoly::is_monic() const {
  return !coeffs_.empty() && lowdeg() >= 0 && coeffs_.rbegin()->second.is_one();
}

TPoly TPoly::operator-() const {
  TPoly r;
  for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (auto& [k, c] : o.coeffs_) set(k, coeff(k) + c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (auto& [k, c] : o.coeffs_) set(k, coeff(k) - c);
  return *this;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r = *this;
  r += o;
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
  TPoly r = *this;
  r -= o;
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  TPoly r;
  for (auto& [ka, ca] : coeffs_)
    for (auto& [kb, cb] : o.coeffs_) r.set(ka + kb, r.coeff(ka + kb) + ca * cb);
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  *this = *this * o;
  return *this;
}

TPoly TPoly::shifted(int k) const {
  TPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

std::optional<TPoly> TPoly::exact_div(const TPoly& b) const {
  if (b.is_zero()) throw std::domain_error("TPoly::exact_div by zero");
  // Shift both operands to lowdeg 0; t-powers are units of the Laurent ring.
  TPoly r = shifted(-lowdeg());
  TPoly bb = b.shifted(-b.lowdeg());
  int shift = lowdeg() - b.lowdeg();
  const MPoly& lead = bb.coeffs_.rbegin()->second;
  TPoly q;
  while (!r.is_zero()) {
    int k = r.degree() - bb.degree();
    if (k < 0) return std::nullopt;
    auto qc = r.coeffs_.rbegin()->second.exact_div(lead);
    if (!qc) return std::nullopt;
    TPoly step;
    step.set(k, *qc);
    q += step;
    r -= step * bb;
    if (!r.is_zero() && r.degree() >= k + bb.degree()) return std::nullopt;
  }
  return q.shifted(shift);
}

TPoly TPoly::reversed(int sign) const {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("TPoly::reversed: sign must be +-1");
  int d = degree();
  TPoly r;
  for (auto& [k, c] : coeffs_) {
    MPoly cc = (sign == -1 && (k & 1)) ? -c : c;
    r.set(d - k, cc);
  }
  return r;
}

TPoly TPoly::scale_t(const MPoly& m) const {
  TPoly r;
  for (auto& [k, c] : coeffs_) {
    MPoly factor;
    if (k >= 0) {
      factor = m.pow(k);
    } else {
      auto inv = MPoly(1).exact_div(m);
      if (!inv) throw std::domain_error("scale_t: non-invertible factor");
      factor = inv->pow(-k);
    }
    r.set(k, c * factor);
  }
  return r;
}

TPoly TPoly::subst_vars(const std::map<std::string, MPoly>& point) const {
  TPoly r;
  for (auto& [k, c] : coeffs_) r.set(k, c.subst(point));
  return r;
}

mpq_class TPoly::eval(const std::map<std::string, mpq_class>& point,
                      const mpq_class& tval) const {
  mpq_class total = 0;
  for (auto& [k, c] : coeffs_) {
    mpq_class tp = 1;
    mpq_class base = tval;
    int e = k;
    if (e < 0) {
      if (tval == 0) throw std::domain_error("TPoly::eval: t=0, negative power");
      base = 1 / base;
      e = -e;
    }
    for (int i = 0; i < e; i++) tp *= base;
    total += c.eval(point) * tp;
  }
  return total;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int k = it->first;
    const MPoly& c = it->second;
    bool wrap = c.size() > 1 && k != 0;
    std::string cs = c.str();
    bool neg = c.size() == 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0) {
      out << cs;
      continue;
    }
    std::string tpart = k == 1 ? "t" : "t^" + std::to_string(k);
    if (cs == "1") {
      out << tpart;
    } else if (wrap) {
      out << "(" << cs << ")*" << tpart;
    } else {
      out << cs << "*" << tpart;
    }
  }
  return out.str();
}

TPoly parse_tpoly(const std::string& text) {
  MPoly p = parse_mpoly(text);
  TPoly r;
  for (auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int k = 0;
    auto it = rest.find("t");
    if (it != rest.end()) {
      k = it->second;
      rest.erase(it);
    }
    MPoly term;
    term.add_term(rest, c);
    r.set(k, r.coeff(k) + term);
  }
  return r;
}

}  // namespace cylnet
