#pragma once

#include <optional>

#include "cylnet/tpoly.hpp"

namespace cylnet {

class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Unstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecurrenceReport {
  bool holds = false;
  std::optional<int> first_valid_index;       // l*: residuals vanish from here
  std::vector<MPoly> residuals;               // residual(n), n = 0.. len-d-1
};

// Does the monic degree-d polynomial q annihilate f as a shift operator?
// residual(n) = sum_k q_k f(n+k); finitely many leading exceptions are
// permitted and reported through first_valid_index.  Throws Inconclusive if
// fewer than d+2 values are supplied.
RecurrenceReport annihilates(const TPoly& q, const std::vector<MPoly>& f);

// Monic univariate polynomial over the rationals, coefficient of t^k at
// index k; used where exact division forces us out of the integers.
using QPoly = std::vector<mpq_class>;

QPoly qpoly_from_tpoly(const TPoly& q,
                       const std::map<std::string, mpq_class>& point);
std::optional<QPoly> qpoly_exact_div(const QPoly& a, const QPoly& b);
std::string qpoly_str(const QPoly& q);

// Extend init by the recurrence with characteristic polynomial q (monic)
// until the sequence has length L.
std::vector<mpq_class> extend(const QPoly& q, std::vector<mpq_class> init,
                              int L);

struct MinimalRecurrence {
  QPoly poly;
  int tail_offset = 0;  // how many leading values were dropped
};

// Minimal-degree monic annihilator of the tail of f (dropping drop_prefix
// leading values) via exact-rational Berlekamp-Massey.  Throws Unstable if
// shrinking the window changes the answer, Inconclusive if f is too short.
MinimalRecurrence minimal_recurrence(const std::vector<mpq_class>& f,
                                     int drop_prefix = 0);

}  // namespace cylnet
