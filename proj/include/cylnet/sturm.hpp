#pragma once

#include "cylnet/recurrence.hpp"

namespace cylnet {

// Real-root counting for rational univariate polynomials by exact Sturm
// sequences.  Polynomials use the QPoly layout (coefficient of t^k at index
// k); the zero polynomial is the empty vector.

// Drop high-order zero coefficients.
QPoly qpoly_trim(QPoly p);

QPoly qpoly_derivative(const QPoly& p);

// Monic greatest common divisor; gcd(0, p) is monic-normalized p.
QPoly qpoly_gcd(QPoly a, QPoly b);

// Canonical chain: p, p', then negated Euclidean remainders down to the
// last nonzero entry.  Requires p nonzero.
std::vector<QPoly> sturm_chain(const QPoly& p);

// Distinct real roots, over the whole line and in (0, +inf).
int count_distinct_real_roots(const QPoly& p);
int count_distinct_positive_roots(const QPoly& p);

// The same counts with multiplicity, via the repeated-gcd chain.
int count_real_roots(const QPoly& p);
int count_positive_roots(const QPoly& p);

}  // namespace cylnet
