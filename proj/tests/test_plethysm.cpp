#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "cylnet/plethysm.hpp"

using namespace cylnet;

namespace {

MPoly P(const std::string& s) { return parse_mpoly(s); }

// Numeric roots of an integer-coefficient monic polynomial via the
// companion matrix.
std::vector<std::complex<double>> numeric_roots(const TPoly& q) {
  int d = q.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i + 1 < d; i++) m(i + 1, i) = 1;
  for (int i = 0; i < d; i++)
    m(i, d - 1) = -q.coeff(i).eval({}).get_d();
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
      double dd = std::abs(x - b[i]);
      if (dd < best) {
        best = dd;
        at = i;
      }
    }
    if (best > tol * (1 + std::abs(x))) return false;
    b.erase(b.begin() + at);
  }
  return true;
}

TPoly random_monic(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> u(-9, 9);
  TPoly q = TPoly::t(d);
  for (int i = 0; i < d; i++) q.set(i, MPoly(u(rng)));
  // A zero constant term stacks multiple roots at 0, which the numeric
  // oracle cannot separate at tight tolerance; reroll it.
  while (q.coeff(0).is_zero()) {
    int c = u(rng);
    q.set(0, MPoly(c));
  }
  return q;
}

}  // namespace

TEST_CASE("companion has the right charpoly") {
  std::mt19937_64 rng(5);
  for (int d : {1, 2, 4}) {
    TPoly q = random_monic(rng, d);
    CHECK(charpoly(companion(q)) == q);
  }
}

TEST_CASE("exterior power golden 3x3") {
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
  CHECK(w == expect);
  // Its characteristic polynomial in factored form.
  TPoly factored =
      (TPoly::t() - TPoly(P("b*c-e*f"))) *
      ((TPoly::t() - TPoly(P("a*b"))) * (TPoly::t() - TPoly(P("a*c"))) -
       TPoly(P("a^2*e*f")));
  CHECK(charpoly(w) == factored);
}

TEST_CASE("exterior power edge ranks") {
  Mat<MPoly> m(3);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) m(i, j) = MPoly(u(rng));
  CHECK(exterior_power(m, 1) == m);
  Mat<MPoly> top = exterior_power(m, 0);
  CHECK(top.n() == 1);
  CHECK(top(0, 0) == MPoly(1));
  CHECK_THROWS_AS(exterior_power(m, 4), BadRank);
}

TEST_CASE("exterior power is multiplicative") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int trial = 0; trial < 3; trial++) {
    Mat<MPoly> a(4), b(4);
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 4; j++) {
        a(i, j) = MPoly(u(rng));
        b(i, j) = MPoly(u(rng));
      }
    CHECK(exterior_power(a * b, 2) == exterior_power(a, 2) * exterior_power(b, 2));
  }
}

TEST_CASE("symmetric power basics") {
  Mat<MPoly> m(2);
  m(0, 0) = P("g1");
  m(1, 1) = P("g2");
  Mat<MPoly> s = symmetric_power(m, 2);
  REQUIRE(s.n() == 3);
  CHECK(s(0, 0) == P("g1^2"));
  CHECK(s(1, 1) == P("g1*g2"));
  CHECK(s(2, 2) == P("g2^2"));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> u(-3, 3);
  Mat<MPoly> a(3);
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) a(i, j) = MPoly(u(rng));
  CHECK(symmetric_power(a, 1) == a);
}

TEST_CASE("symmetric power eigenvalues are pairwise products") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int trial = 0; trial < 3; trial++) {
    Mat<MPoly> m(3);
    Eigen::Matrix3d em;
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) {
        int v = u(rng);
        m(i, j) = MPoly(v);
        em(i, j) = v;
      }
    Eigen::EigenSolver<Eigen::Matrix3d> solver(em);
    std::vector<std::complex<double>> expect;
    for (int i = 0; i < 3; i++)
      for (int j = i; j < 3; j++)
        expect.push_back(solver.eigenvalues()[i] * solver.eigenvalues()[j]);
    CHECK(multisets_match(numeric_roots(charpoly(symmetric_power(m, 2))),
                          expect, 1e-7));
  }
}

TEST_CASE("plethysm trivial ranks") {
  std::mt19937_64 rng(25);
  TPoly q = random_monic(rng, 4);
  CHECK(q_plee(q, 1) == q);
  CHECK(q_pleh(q, 1) == q);
  // Top rank: single root, the product of all roots = alpha_d.
  MPoly alpha4 = q.coeff(0);  // (-1)^4 alpha_4
  CHECK(q_plee(q, 4) == TPoly::t() - TPoly(alpha4));
  CHECK_THROWS_AS(q_plee(q, 5), BadRank);
  CHECK_THROWS_AS(q_plee(q, 0), BadRank);
}

TEST_CASE("generic cubic: exterior square, with the squared constant term") {
  // Q = t^3 - a1 t^2 + a2 t - a3.  The strict-pair product polynomial is
  // t^3 - a2 t^2 + a3 a1 t - a3^2 (constant (g1 g2 g3)^2 = a3^2).
  TPoly q = parse_tpoly("t^3 - a1*t^2 + a2*t - a3");
  CHECK(q_plee(q, 2) == parse_tpoly("t^3 - a2*t^2 + a3*a1*t - a3^2"));
}

TEST_CASE("generic cubic: symmetric square leading terms and divisibility") {
  TPoly q = parse_tpoly("t^3 - a1*t^2 + a2*t - a3");
  TPoly h = q_pleh(q, 2);
  CHECK(h.degree() == 6);
  CHECK(h.is_monic());
  CHECK(h.coeff(5) == P("-(a1^2-a2)"));
  CHECK(h.coeff(0) == P("a3^4"));
  auto ratio = h.exact_div(q_plee(q, 2));
  REQUIRE(ratio.has_value());
  CHECK(*ratio * q_plee(q, 2) == h);
}

TEST_CASE("numeric root oracle for strict and weak pair products") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 6; trial++) {
    int d = (trial % 2) ? 4 : 3;
    TPoly q = random_monic(rng, d);
    auto roots = numeric_roots(q);
    std::vector<std::complex<double>> strict, weak;
    for (int i = 0; i < d; i++)
      for (int j = i; j < d; j++) {
        weak.push_back(roots[i] * roots[j]);
        if (i != j) strict.push_back(roots[i] * roots[j]);
      }
    CHECK(multisets_match(numeric_roots(q_plee(q, 2)), strict, 1e-6));
    CHECK(multisets_match(numeric_roots(q_pleh(q, 2)), weak, 1e-6));
    auto ratio = q_pleh(q, 2).exact_div(q_plee(q, 2));
    CHECK(ratio.has_value());
  }
}

TEST_CASE("plethysm degrees") {
  std::mt19937_64 rng(41);
  TPoly q = random_monic(rng, 4);
  CHECK(q_plee(q, 2).degree() == 6);
  CHECK(q_plee(q, 3).degree() == 4);
  CHECK(q_pleh(q, 2).degree() == 10);
  CHECK(q_pleh(q, 3).degree() == 20);
}

TEST_CASE("psi_schur special shapes") {
  std::vector<MPoly> h{P("1"), P("H1"), P("H2"), P("H3")};
  CHECK(psi_schur(PartitionShape::of({}), h) == MPoly(1));
  CHECK(psi_schur(PartitionShape::of({1, 1, 1}), h) == P("H3"));
  CHECK(psi_schur(PartitionShape::of({1, 1}), h) == P("H2"));
  // s_(2) has conjugate (1,1): det [[H1, H2],[H0, H1]].
  CHECK(psi_schur(PartitionShape::of({2}), h) == P("H1^2 - H2"));
}

TEST_CASE("psi_schur matches symmetric functions of numeric roots") {
  // With H_r = e_r(roots), psi(s_lambda) must equal the Schur polynomial of
  // the roots' "dual" alphabet; spot-check s_(1,1) = e_2 and s_(2) = h_2 -
  // type relations through numeric roots of a fixed cubic.
  TPoly q = parse_tpoly("t^3 - 6*t^2 + 11*t - 6");  // roots 1, 2, 3
  std::vector<MPoly> h;
  for (int k = 0; k <= 3; k++) {
    MPoly hk = q.coeff(3 - k);
    if (k % 2) hk = -hk;
    h.push_back(hk);  // e_k(1,2,3) with sign fixed
  }
  CHECK(h[1] == MPoly(6));
  CHECK(h[2] == MPoly(11));
  CHECK(h[3] == MPoly(6));
  // s_(1,1)(e-alphabet) ... check the 2x2 determinant value directly.
  CHECK(psi_schur(PartitionShape::of({2}), h) == MPoly(6 * 6 - 11));
}
