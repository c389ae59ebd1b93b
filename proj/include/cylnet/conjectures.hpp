#pragma once

#include <cstdint>
#include <random>

#include "cylnet/cycles.hpp"
#include "cylnet/plethysm.hpp"

namespace cylnet {

// A measured minimal recurrence came out longer than the proven upper
// bound; that indicates an implementation bug, not a counterexample.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Outcome of an empirical checker run.  Checkers gather evidence; a clean
// report is not a proof, and every counterexample carries enough witness
// data to replay the finding (the run is deterministic given the seed).
struct ConjectureReport {
  std::string id;
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> counterexamples;

  bool pass() const { return counterexamples.empty(); }
  std::string summary() const;
  std::string to_json() const;
};

// Signed coefficients of Q_N read as the elementary symmetric functions of
// its roots: H[r] = (-1)^r [t^{d-r}] Q_N, with H[0] = 1.
std::vector<MPoly> h_sequence(const TPoly& q);

// Total positivity of the infinite Toeplitz matrix of (H_0, H_1, ...): its
// minors up to size max_minor are Schur-function images psi_schur(lambda, H)
// for lambda inside a max_minor x max_minor box, so those are tested for
// nonnegative coefficients.  Requires a planar-declared network.
ConjectureReport check_polya(const QuotientNetwork& net, int max_minor);

// Per trial, substitute independent random positive rationals for the edge
// variables and count the positive real roots of Q_N by exact Sturm
// sequences; a trial passes iff the count (with multiplicity) is deg Q_N.
// Requires a planar-declared network.
ConjectureReport check_real_roots(const QuotientNetwork& net, int trials,
                                  std::uint64_t seed);

// Per trial, substitute random positive rationals and test every minor of
// the transfer matrix S of the canonical local lift for strict positivity.
// The underlying claim quantifies over all local lifts, so a negative
// finding here is recorded but is inconclusive for the claim itself.
ConjectureReport check_total_positivity(const QuotientNetwork& net, int trials,
                                        std::uint64_t seed);

// Per trial, draw random r-tuples of endpoints and a random positive
// substitution, and compare the minimal recurrence degree of the LGV
// sequence with C(d, r).  Shorter recurrences are recorded as failures;
// longer ones contradict the proven upper bound and raise TheoremViolation.
// Requires a strongly connected quotient digraph.
ConjectureReport check_minimality(const QuotientNetwork& net, int r,
                                  int trials, std::uint64_t seed);

bool strongly_connected(const QuotientNetwork& net);

// Layered-cylinder sampler: a rows x layers grid with rightward horizontal
// and single-layer diagonal edges, at most one diagonal direction per
// quad so the drawing stays crossing-free; seam edges carry offset 1 and
// every edge gets a fresh variable.  Resamples until the planar winding
// axiom verifies and at least one cycle exists.
QuotientNetwork random_planar_network(std::mt19937_64& rng, int max_rows,
                                      int max_layers);

}  // namespace cylnet
