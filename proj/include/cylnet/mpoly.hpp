#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cylnet {

// Exponent vector of a Laurent monomial: variable name -> nonzero exponent.
using Monomial = std::map<std::string, int>;

int total_degree(const Monomial& m);

// Order used for canonical printing and for division: total degree
// descending, ties broken by giving larger exponents on lexicographically
// smaller variable names first.  Returns true if a comes before b.
bool monomial_before(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);

// a / b in the Laurent sense (always defined).
Monomial mono_div(const Monomial& a, const Monomial& b);

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.  Canonical: no zero coefficients stored.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);
  explicit MPoly(const mpz_class& c);
  static MPoly var(const std::string& name, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Number of stored terms.
  size_t size() const { return terms_.size(); }

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }

  void add_term(const Monomial& m, const mpz_class& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(int k) const;  // k >= 0

  // Exact quotient q with q*b == *this, if it exists.
  std::optional<MPoly> exact_div(const MPoly& b) const;

  // Substitute rational values for every variable appearing in the
  // polynomial.  Throws if a variable is missing from the map.
  mpq_class eval(const std::map<std::string, mpq_class>& point) const;

  // Substitute polynomials for variables; variables absent from the map are
  // kept.  Substituted values must not be zero if the variable occurs with a
  // negative exponent.
  MPoly subst(const std::map<std::string, MPoly>& point) const;

  // True if every coefficient is >= 0.
  bool nonneg_coeffs() const;

  std::vector<std::string> variables() const;

  // Canonical form in the expression grammar, e.g. "x^2 - 2*x*y + y^2".
  std::string str() const;

 private:
  std::map<Monomial, mpz_class> terms_;
};

inline MPoly operator*(long c, const MPoly& p) { return MPoly(c) * p; }

// Parse the expression grammar: integers, variables
// ([a-zA-Z][a-zA-Z0-9_]*), + - *, ^ with integer exponents on variables,
// parentheses.  Throws std::runtime_error on malformed input.
MPoly parse_mpoly(const std::string& text);

}  // namespace cylnet
