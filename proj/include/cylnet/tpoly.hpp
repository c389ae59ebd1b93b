#pragma once

#include "cylnet/mpoly.hpp"

namespace cylnet {

// Univariate (Laurent) polynomial in the recurrence variable t with MPoly
// coefficients.  Canonical: no zero coefficients stored.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c) { set(0, MPoly(c)); }
  explicit TPoly(const MPoly& c) { set(0, c); }
  static TPoly t(int exp = 1) {
    TPoly p;
    p.set(exp, MPoly(1));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Max t-exponent (0 for the zero polynomial).
  int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  int lowdeg() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  const MPoly& coeff(int k) const;
  const std::map<int, MPoly>& coeffs() const { return coeffs_; }
  void set(int k, const MPoly& c);

  bool is_monic() const;

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  TPoly shifted(int k) const;  // multiply by t^k

  // Exact quotient over the coefficient ring, if it exists.
  std::optional<TPoly> exact_div(const TPoly& b) const;

  // p(t) -> s^d * p(c/s) for d = degree: substitute t by the monomial c/s
  // and clear denominators, e.g. reverse(t, -1) gives t^d p(-1/t).
  // c must be 1 or -1; s is the new variable of the result (usually t).
  TPoly reversed(int sign) const;

  // Substitute t -> t * m for a monomial-with-unit-coefficient m.
  TPoly scale_t(const MPoly& m) const;

  // Substitute every x-variable (not t); result still a TPoly in t.
  TPoly subst_vars(const std::map<std::string, MPoly>& point) const;

  // Full rational evaluation: t and all variables.
  mpq_class eval(const std::map<std::string, mpq_class>& point,
                 const mpq_class& tval) const;

  std::string str() const;

 private:
  std::map<int, MPoly> coeffs_;
};

inline TPoly operator*(const MPoly& c, const TPoly& p) { return TPoly(c) * p; }

// Parse the expression grammar with "t" treated as the distinguished
// recurrence variable.
TPoly parse_tpoly(const std::string& text);

}  // namespace cylnet
