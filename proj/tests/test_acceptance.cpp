// Acceptance harness: one pass/fail line per criterion, exit status is the
// number of failed criteria.
#include <Eigen/Eigenvalues>

#include <chrono>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cylnet/conjectures.hpp"
#include "cylnet/families.hpp"
#include "cylnet/paths.hpp"
#include "cylnet/plethysm.hpp"
#include "cylnet/recurrence.hpp"
#include "helpers.hpp"

using namespace cylnet;
using cylnet::testing::two_vertex_example;
using cylnet::testing::random_local_network;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (note.tellp() > 0) note << "; ";
      note << "failed: " << what;
    }
  }
};

MPoly P(const std::string& s) { return parse_mpoly(s); }

std::vector<std::complex<double>> numeric_roots(const TPoly& q) {
  int d = q.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i + 1 < d; i++) m(i + 1, i) = 1;
  for (int i = 0; i < d; i++) m(i, d - 1) = -q.coeff(i).eval({}).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; i++) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

bool multisets_match(std::vector<std::complex<double>> a,
                     std::vector<std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  for (auto& x : a) {
    double best = 1e300;
    size_t at = 0;
    for (size_t i = 0; i < b.size(); i++) {
      double d = std::abs(x - b[i]);
      if (d < best) {
        best = d;
        at = i;
      }
    }
    if (best > tol * (1 + std::abs(x))) return false;
    b.erase(b.begin() + at);
  }
  return true;
}

// 1. Two-vertex running example: both characteristic polynomial routes and
// the full cycle inventory.
void criterion_two_vertex(Check& c) {
  QuotientNetwork net = two_vertex_example();
  TPoly expect = parse_tpoly("t^2 - (a+e+c*d)*t + (a*e-b*d)");
  c.require(q_n_cycles(net) == expect, "cycle route golden");
  c.require(q_n_det(net) == expect, "determinant route golden");
  auto cycles = simple_cycles(net);
  std::multiset<std::pair<std::string, int>> got;
  for (auto& cy : cycles) got.insert({cy.weight.str(), cy.winding});
  std::multiset<std::pair<std::string, int>> inventory{
      {"a", 1}, {"e", 1}, {"c*d", 1}, {"b*d", 2}};
  c.require(got == inventory, "cycle inventory");
  int pairs = 0;
  for (auto& fam : cycle_families(net))
    if (fam.r == 2) {
      pairs++;
      c.require(fam.weight == P("a*e"), "disjoint pair weight");
    }
  c.require(pairs == 1, "one disjoint pair");
}

// 2. LGV matrix golden on the same example, against brute enumeration.
void criterion_lgv(Check& c) {
  QuotientNetwork net = two_vertex_example();
  RVertex ubf{{0, 0}, {1, 0}}, vbf{{0, 1}, {1, 1}};
  Mat<MPoly> m = lgv_matrix(net, ubf, vbf);
  c.require(m(0, 0) == P("a + c*d"), "entry (0,0)");
  c.require(m(0, 1) == P("b + c*e + a*c + c^2*d"), "entry (0,1)");
  c.require(m(1, 0) == P("d"), "entry (1,0)");
  c.require(m(1, 1) == P("e + c*d"), "entry (1,1)");
  c.require(det_division_free(m) == P("a*e - b*d"), "determinant");
  c.require(enumerate_r_paths(net, ubf, vbf) == P("a*e - b*d"),
            "enumeration oracle");
}

// 3. Exterior square of the 3x3 worked matrix and its factored charpoly.
void criterion_exterior(Check& c) {
  Mat<MPoly> m(3);
  m(0, 0) = P("a");
  m(0, 2) = P("d");
  m(1, 1) = P("b");
  m(1, 2) = P("e");
  m(2, 1) = P("f");
  m(2, 2) = P("c");
  Mat<MPoly> w = exterior_power(m, 2);
  Mat<MPoly> expect(3);
  expect(0, 0) = P("a*b");
  expect(0, 1) = P("a*e");
  expect(0, 2) = P("-b*d");
  expect(1, 0) = P("a*f");
  expect(1, 1) = P("a*c");
  expect(1, 2) = P("-d*f");
  expect(2, 2) = P("b*c-e*f");
  c.require(w == expect, "exterior square matrix");
  TPoly factored =
      (TPoly::t() - TPoly(P("b*c-e*f"))) *
      ((TPoly::t() - TPoly(P("a*b"))) * (TPoly::t() - TPoly(P("a*c"))) -
       TPoly(P("a^2*e*f")));
  c.require(charpoly(w) == factored, "factored charpoly");
}

// 4. Strict/weak pair-product polynomials against numeric roots, exact
// divisibility, and the squared constant term of the generic cubic.
void criterion_products(Check& c) {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> u(-9, 9);
  for (int trial = 0; trial < 10; trial++) {
    int d = (trial % 2) ? 4 : 3;
    TPoly q = TPoly::t(d);
    for (int i = 0; i < d; i++) q.set(i, MPoly(u(rng)));
    while (q.coeff(0).is_zero()) q.set(0, MPoly(u(rng)));
    auto roots = numeric_roots(q);
    std::vector<std::complex<double>> strict, weak;
    for (int i = 0; i < d; i++)
      for (int j = i; j < d; j++) {
        weak.push_back(roots[i] * roots[j]);
        if (i != j) strict.push_back(roots[i] * roots[j]);
      }
    TPoly pe = q_plee(q, 2), ph = q_pleh(q, 2);
    c.require(multisets_match(numeric_roots(pe), strict, 1e-7),
              "strict products trial " + std::to_string(trial));
    c.require(multisets_match(numeric_roots(ph), weak, 1e-7),
              "weak products trial " + std::to_string(trial));
    auto ratio = ph.exact_div(pe);
    c.require(ratio && *ratio * pe == ph,
              "divisibility trial " + std::to_string(trial));
  }
  TPoly generic = parse_tpoly("t^3 - a1*t^2 + a2*t - a3");
  MPoly constant = q_plee(generic, 2).coeff(0);
  c.require(constant == P("-a3^2"), "generic cubic constant term");
  c.note << "generic cubic exterior square: " << q_plee(generic, 2).str();
}

// 5. Cylinder grid: the LGV sequence consists of shifted Schur polynomials
// and is annihilated by the pair-product polynomial, all exactly.
void criterion_grid(Check& c) {
  SchurNetwork sn = build_schur(3, 2);
  TPoly q = q_n_cycles(sn.net);
  TPoly product(1);
  for (int i = 1; i <= 3; i++)
    product *= TPoly::t() - TPoly(MPoly::var("x" + std::to_string(i), 2));
  c.require(q == product, "grid polynomial factors");
  TPoly pairs(1);
  for (int i = 1; i <= 3; i++)
    for (int j = i + 1; j <= 3; j++)
      pairs *= TPoly::t() -
               TPoly(MPoly::var("x" + std::to_string(i), 2) *
                     MPoly::var("x" + std::to_string(j), 2));
  TPoly pe = q_plee(q, 2);
  c.require(pe == pairs, "pair products factor");
  std::vector<MPoly> f = lgv_sequence(sn.net, sn.sources(2),
                                      sn.targets({1, 0}), 6);
  for (int l = 0; l <= 6; l++)
    c.require(f[l] == schur_oracle({1 + 2 * l, 2 * l}, 3),
              "Schur value l = " + std::to_string(l));
  RecurrenceReport rep = annihilates(pe, f);
  c.require(rep.holds && *rep.first_valid_index <= 2, "annihilation");
  if (rep.holds) c.note << "valid from l = " << *rep.first_valid_index;
}

// 6. Two-way ladder: q-Fibonacci reversal for m = 2..8, the m = 4 golden,
// and the scaled pair-product recurrence for the staircase filling sums.
void criterion_ladder(Check& c) {
  for (int m = 2; m <= 8; m++)
    c.require(q_n_cycles(build_lozenge(m)) == carlitz(m + 1).reversed(-1),
              "reversal m = " + std::to_string(m));
  c.require(q_n_cycles(build_lozenge(4)) ==
                parse_tpoly("t^2 - (1+q+q^2)*t + q^2"),
            "m = 4 golden");
  LozengeQuery query{2, 1, 1, 2, 2};
  LozengeEndpoints ep = lozenge_endpoints_and_beta(query);
  c.require(ep.m == 6, "ladder width");
  c.require(ep.beta == 2, "t-scaling exponent");
  TPoly scaled =
      q_plee(q_n_cycles(build_lozenge(ep.m)), 2).scale_t(MPoly::var("q", 2));
  TPoly monic = TPoly(MPoly::var("q", -6)) * scaled;  // q^{-beta*deg}
  std::vector<MPoly> f;
  for (int l = 0; l <= 8; l++) f.push_back(rpp_oracle(query, l));
  RecurrenceReport rep = annihilates(monic, f);
  c.require(rep.holds && *rep.first_valid_index <= 1,
            "scaled recurrence on filling sums");
  if (rep.holds) c.note << "valid from l = " << *rep.first_valid_index;
}

// 7. Strip domino tilings: the pair-product recurrence at a random positive
// weight assignment, and the corrected disjoint-family term counts.
void criterion_domino(Check& c) {
  DominoNetwork dn = build_domino(1, 3);
  TPoly pe = q_plee(q_n_cycles(dn.net), 2);
  std::mt19937_64 rng(707);
  std::map<std::string, mpq_class> point;
  for (auto& v : dn.net.vars) point[v] = long(rng() % 7 + 1);
  QPoly cp = qpoly_from_tpoly(pe, point);
  for (auto [i0, ell0] : {std::pair<long, int>{1, 0}, {2, 1}}) {
    DominoQuery q{1, 3, i0, 1, ell0};
    std::vector<mpq_class> f;
    for (int l = 0; l <= 7; l++) f.push_back(domino_oracle_eval(q, l, point));
    for (size_t n0 = 1; n0 + cp.size() - 1 < f.size(); n0++) {
      mpq_class res = 0;
      for (size_t k = 0; k < cp.size(); k++) res += cp[k] * f[n0 + k];
      c.require(res == 0, "residual at l = " + std::to_string(n0) +
                              " (center offset " + std::to_string(i0) + ")");
    }
  }
  // Term counts follow g(m) = 2 g(m-1) + g(m-2): adjacent row loops share
  // the single per-row vertex, so the count is Pell-type, not Fibonacci.
  std::vector<size_t> g{2, 5};
  while (g.size() < 6) g.push_back(2 * g.back() + g[g.size() - 2]);
  for (int m = 2; m <= 6; m++) {
    TPoly qm = q_n_cycles(build_domino(1, m).net);
    size_t terms = 0;
    for (auto& [k, coeff] : qm.coeffs()) terms += coeff.size();
    c.require(terms == g[m - 1], "term count m = " + std::to_string(m));
  }
  c.note << "term counts 5, 12, 29, 70, 169 (Pell-type)";
}

// 8. Property suite on 25 random local networks: the characteristic
// polynomial annihilates every single-path sequence, and both pair-product
// polynomials annihilate every shift-0 two-vertex LGV sequence.
void criterion_random_networks(Check& c) {
  std::mt19937_64 rng(2026);
  int max_star = 0;
  for (int k = 0; k < 25; k++) {
    QuotientNetwork net = random_local_network(rng, 5, 10);
    TPoly q = q_n_cycles(net);
    int d = q.degree();
    int n = int(net.vertices.size());
    for (int u = 0; u < n; u++)
      for (int v = 0; v < n; v++) {
        auto f = lgv_sequence(net, {{u, 0}}, {{v, 0}}, d + 4);
        RecurrenceReport rep = annihilates(q, f);
        c.require(rep.holds, "single path net " + std::to_string(k));
        if (rep.holds) max_star = std::max(max_star, *rep.first_valid_index);
      }
    if (d < 2) continue;
    TPoly qh = q_pleh(q, 2), qe = q_plee(q, 2);
    std::vector<std::pair<int, int>> duos;
    for (int a = 0; a < n; a++)
      for (int b = a + 1; b < n; b++) duos.push_back({a, b});
    for (auto [a, b] : duos)
      for (auto [x, y] : duos) {
        RVertex ubf{{a, 0}, {b, 0}}, vbf{{x, 0}, {y, 0}};
        auto f = lgv_sequence(net, ubf, vbf, qh.degree() + 4);
        RecurrenceReport rh = annihilates(qh, f);
        std::vector<MPoly> prefix(f.begin(), f.begin() + qe.degree() + 4);
        RecurrenceReport re = annihilates(qe, prefix);
        c.require(rh.holds, "weak pair products net " + std::to_string(k));
        c.require(re.holds, "strict pair products net " + std::to_string(k));
        if (rh.holds) max_star = std::max(max_star, *rh.first_valid_index);
        if (re.holds) max_star = std::max(max_star, *re.first_valid_index);
      }
  }
  c.note << "largest first valid index " << max_star;
}

// 9. Conjecture evidence: nonnegative Toeplitz minors, positive real roots
// on sampled planar networks, and minimal recurrence degrees at the bound.
void criterion_conjectures(Check& c) {
  c.require(check_polya(build_schur(3, 1).net, 3).pass(), "grid minors");
  for (int m = 2; m <= 6; m++)
    c.require(check_polya(build_lozenge(m), 3).pass(),
              "ladder minors m = " + std::to_string(m));
  std::mt19937_64 rng(909);
  for (int i = 0; i < 10; i++) {
    QuotientNetwork net = random_planar_network(rng, 3, 4);
    c.require(check_real_roots(net, 2, 500 + i).pass(),
              "positive roots sample " + std::to_string(i));
  }
  ConjectureReport row = check_minimality(build_schur(1, 2).net, 1, 5, 31);
  ConjectureReport ladder = check_minimality(build_lozenge(4), 1, 5, 37);
  for (auto* rep : {&row, &ladder}) {
    c.require(rep->pass(), rep->id + " counterexample-free");
    for (auto& [k, v] : rep->parameters)
      if (k == "matched") c.require(v == "5", rep->id + " matched all trials");
  }
  c.require(check_minimality(build_lozenge(4), 1, 5, 37).to_json() ==
                ladder.to_json(),
            "report replays bit-exactly");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Check&)> run;
  };
  std::vector<Entry> entries{
      {"two-vertex characteristic polynomial", criterion_two_vertex},
      {"LGV matrix golden", criterion_lgv},
      {"exterior square golden", criterion_exterior},
      {"pair-product root oracle", criterion_products},
      {"cylinder grid Schur sequences", criterion_grid},
      {"two-way ladder filling sums", criterion_ladder},
      {"strip domino tiling sums", criterion_domino},
      {"random network recurrences", criterion_random_networks},
      {"conjecture evidence", criterion_conjectures},
  };
  int failures = 0;
  for (size_t i = 0; i < entries.size(); i++) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      entries[i].run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::ostringstream line;
    line << "criterion " << i + 1 << " (" << entries[i].name
         << "): " << (c.ok ? "PASS" : "FAIL") << " [" << secs << "s]";
    std::string extra = c.note.str();
    if (!extra.empty()) line << " " << extra;
    std::cout << line.str() << "\n";
    if (!c.ok) failures++;
  }
  return failures;
}
