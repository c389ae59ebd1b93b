#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cylnet/conjectures.hpp"
#include "cylnet/cycles.hpp"
#include "cylnet/families.hpp"
#include "cylnet/paths.hpp"
#include "cylnet/plethysm.hpp"
#include "cylnet/recurrence.hpp"

using namespace cylnet;

namespace {

// Endpoint tuples: entries separated by ';', each "name" or "name@shift"
// (vertex names may contain commas, so ';' is the separator).
RVertex parse_tuple(const QuotientNetwork& net, const std::string& spec) {
  RVertex out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    size_t at = item.rfind('@');
    std::string name = at == std::string::npos ? item : item.substr(0, at);
    int shift = at == std::string::npos ? 0 : std::stoi(item.substr(at + 1));
    out.push_back({net.index_of(name), shift});
  }
  if (out.empty()) throw NetworkError("empty endpoint tuple");
  return out;
}

std::vector<int> parse_parts(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::map<std::string, mpq_class> seeded_point(
    const std::vector<std::string>& vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::string, mpq_class> point;
  for (auto& v : vars) point[v] = long(rng() % 9 + 1);
  return point;
}

int cmd_qpoly(const std::string& path) {
  QuotientNetwork net = network_from_file(path);
  TPoly a = q_n_cycles(net);
  TPoly b = q_n_det(net);
  std::cout << "cycles: " << a.str() << "\n";
  std::cout << "det:    " << b.str() << "\n";
  std::cout << (a == b ? "AGREE" : "DISAGREE") << "\n";
  return a == b ? 0 : 1;
}

int cmd_pl(const std::string& path, int r, bool weak) {
  QuotientNetwork net = network_from_file(path);
  TPoly q = q_n_cycles(net);
  std::cout << (weak ? q_pleh(q, r) : q_plee(q, r)).str() << "\n";
  return 0;
}

int cmd_paths(const std::string& path, const std::string& from,
              const std::string& to, int L) {
  QuotientNetwork net = network_from_file(path);
  RVertex ubf = parse_tuple(net, from), vbf = parse_tuple(net, to);
  if (L >= 0) {
    std::vector<MPoly> f = lgv_sequence(net, ubf, vbf, L);
    for (int l = 0; l <= L; l++)
      std::cout << "f(" << l << ") = " << f[l].str() << "\n";
    return 0;
  }
  Mat<MPoly> m = lgv_matrix(net, ubf, vbf);
  for (int i = 0; i < m.n(); i++)
    for (int j = 0; j < m.n(); j++)
      std::cout << "M[" << i << "][" << j << "] = " << m(i, j).str() << "\n";
  std::cout << "det = " << det_division_free(m).str() << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& from,
               const std::string& to, int L, std::string method,
               const std::string& recurrence) {
  QuotientNetwork net = network_from_file(path);
  RVertex ubf = parse_tuple(net, from), vbf = parse_tuple(net, to);
  if (ubf.size() != vbf.size())
    throw NetworkError("verify: endpoint tuples must have equal size");
  int r = int(ubf.size());
  TPoly rec;
  if (!recurrence.empty()) {
    rec = parse_tpoly(recurrence);
  } else {
    TPoly q = q_n_cycles(net);
    if (method.empty()) method = net.planar_declared ? "plee" : "pleh";
    rec = method == "plee" ? q_plee(q, r) : q_pleh(q, r);
  }
  if (L < 0) L = rec.degree() + 4;
  std::vector<MPoly> f = lgv_sequence(net, ubf, vbf, L);
  RecurrenceReport rep = annihilates(rec, f);
  std::cout << "recurrence: " << rec.str() << "\n";
  if (rep.holds) {
    std::cout << "PASS valid from l = " << *rep.first_valid_index << "\n";
    return 0;
  }
  std::cout << "FAIL\n";
  return 1;
}

int cmd_minimal(const std::string& path, const std::string& from,
                const std::string& to, int L, std::uint64_t seed, int drop) {
  QuotientNetwork net = network_from_file(path);
  RVertex ubf = parse_tuple(net, from), vbf = parse_tuple(net, to);
  if (L < 0) L = 2 * int(net.vertices.size()) + 6;
  std::vector<MPoly> f = lgv_sequence(net, ubf, vbf, L);
  auto point = seeded_point(net.vars, seed);
  std::vector<mpq_class> values;
  for (auto& p : f) values.push_back(p.eval(point));
  MinimalRecurrence min = minimal_recurrence(values, drop);
  std::cout << "minimal: " << qpoly_str(min.poly) << "\n";
  std::cout << "degree " << min.poly.size() - 1 << ", tail offset "
            << min.tail_offset << "\n";
  return 0;
}

int cmd_family(const std::string& kind, int n, int m) {
  QuotientNetwork net;
  if (kind == "schur")
    net = build_schur(n, m).net;
  else if (kind == "lozenge")
    net = build_lozenge(m);
  else if (kind == "domino")
    net = build_domino(n, m).net;
  else
    throw NetworkError("family: unknown kind " + kind);
  std::cout << network_to_json(net) << "\n";
  return 0;
}

int cmd_oracle_schur(const std::string& lambda, int n) {
  std::cout << schur_oracle(parse_parts(lambda), n).str() << "\n";
  return 0;
}

int cmd_oracle_rpp(int a, int b, int c, int d, int r, int ell) {
  std::cout << rpp_oracle({a, b, c, d, r}, ell).str() << "\n";
  return 0;
}

int cmd_oracle_domino(int n, int m, long i, int j, int ell0, int ell) {
  std::cout << domino_oracle({n, m, i, j, ell0}, ell).str() << "\n";
  return 0;
}

int cmd_conjecture(const std::string& kind, const std::string& path,
                   int trials, std::uint64_t seed, int max_minor, int r,
                   bool json) {
  QuotientNetwork net = network_from_file(path);
  ConjectureReport rep;
  if (kind == "polya")
    rep = check_polya(net, max_minor);
  else if (kind == "roots")
    rep = check_real_roots(net, trials, seed);
  else if (kind == "tp")
    rep = check_total_positivity(net, trials, seed);
  else if (kind == "minimal")
    rep = check_minimality(net, r, trials, seed);
  else
    throw NetworkError("conjecture: unknown checker " + kind);
  std::cout << rep.summary() << "\n";
  if (json) std::cout << rep.to_json() << "\n";
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for cylindrical networks: characteristic polynomials, "
      "path counts, linear recurrences, combinatorial families, and "
      "conjecture checkers.\n"
      "Networks are JSON: {\"vars\": [...], \"vertices\": [...], \"planar\": "
      "bool, \"edges\": [{\"from\", \"to\", \"offset\", \"weight\"}]}; pass "
      "\"-\" to read from standard input.  Endpoint tuples are "
      "';'-separated \"vertex@shift\" entries.  CYLNET_THREADS caps worker "
      "parallelism (0 or unset = serial)."};
  app.require_subcommand(1);
  int code = 0;

  std::string net_path, from, to, method, kind, lambda, recurrence;
  int r = 1, L = -1, drop = 0, trials = 10, max_minor = 2;
  int fn = 1, fm = 2, oa = 1, ob = 1, oc = 1, od = 1, orr = 1, ell = 0, oj = 0,
      ell0 = 0;
  long oi = 0;
  std::uint64_t seed = 1;
  bool json = false;

  auto* qpoly = app.add_subcommand(
      "qpoly", "Characteristic polynomial by both routes; prints AGREE");
  qpoly->add_option("network", net_path, "network JSON file or -")->required();
  qpoly->callback([&] { code = cmd_qpoly(net_path); });

  auto* plee = app.add_subcommand(
      "plee", "Strict r-fold product polynomial of the network");
  plee->add_option("network", net_path, "network JSON file or -")->required();
  plee->add_option("-r", r, "product order")->default_val(1);
  plee->callback([&] { code = cmd_pl(net_path, r, false); });

  auto* pleh = app.add_subcommand(
      "pleh", "Weak r-fold product polynomial of the network");
  pleh->add_option("network", net_path, "network JSON file or -")->required();
  pleh->add_option("-r", r, "product order")->default_val(1);
  pleh->callback([&] { code = cmd_pl(net_path, r, true); });

  auto* paths = app.add_subcommand(
      "paths", "Path-count matrix and determinant, or a sequence with -L");
  paths->add_option("network", net_path, "network JSON file or -")->required();
  paths->add_option("--from", from, "source tuple, e.g. u@0;v@0")->required();
  paths->add_option("--to", to, "target tuple")->required();
  paths->add_option("-L", L, "also print f(0..L) determinants");
  paths->callback([&] { code = cmd_paths(net_path, from, to, L); });

  auto* verify = app.add_subcommand(
      "verify", "Check that the product polynomial annihilates a sequence");
  verify->add_option("network", net_path, "network JSON file or -")->required();
  verify->add_option("--from", from, "source tuple")->required();
  verify->add_option("--to", to, "target tuple")->required();
  verify->add_option("-L", L, "sequence length (default: degree + 4)");
  verify->add_option("--method", method, "plee or pleh")
      ->check(CLI::IsMember({"plee", "pleh"}));
  verify->add_option("--recurrence", recurrence,
                     "explicit recurrence polynomial to test instead");
  verify->callback([&] {
    code = cmd_verify(net_path, from, to, L, method, recurrence);
  });

  auto* minimal = app.add_subcommand(
      "minimal", "Minimal recurrence of a sequence at a seeded substitution");
  minimal->add_option("network", net_path, "network JSON file or -")
      ->required();
  minimal->add_option("--from", from, "source tuple")->required();
  minimal->add_option("--to", to, "target tuple")->required();
  minimal->add_option("-L", L, "sequence length");
  minimal->add_option("--seed", seed, "substitution seed")->default_val(1);
  minimal->add_option("--drop", drop, "leading values to drop")
      ->default_val(0);
  minimal->callback(
      [&] { code = cmd_minimal(net_path, from, to, L, seed, drop); });

  auto* family = app.add_subcommand(
      "family", "Emit a built-in network (schur, lozenge, domino) as JSON");
  family->add_option("kind", kind, "schur, lozenge, or domino")->required();
  family->add_option("-n", fn, "height / half-period")->default_val(1);
  family->add_option("-m", fm, "width / strip height")->default_val(2);
  family->callback([&] { code = cmd_family(kind, fn, fm); });

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force enumeration oracles (schur, rpp, domino)");
  oracle->require_subcommand(1);
  auto* os = oracle->add_subcommand("schur", "Schur polynomial by tableaux");
  os->add_option("--lambda", lambda, "partition, e.g. 2,1")->required();
  os->add_option("-n", fn, "number of variables")->required();
  os->callback([&] { code = cmd_oracle_schur(lambda, fn); });
  auto* orp = oracle->add_subcommand(
      "rpp", "Weighted count of staircase-shape fillings");
  orp->add_option("-a", oa)->default_val(1);
  orp->add_option("-b", ob)->default_val(1);
  orp->add_option("-c", oc)->default_val(1);
  orp->add_option("-d", od)->default_val(1);
  orp->add_option("-r", orr, "largest filling value")->default_val(1);
  orp->add_option("--ell", ell, "sequence index")->required();
  orp->callback([&] { code = cmd_oracle_rpp(oa, ob, oc, od, orr, ell); });
  auto* odm = oracle->add_subcommand(
      "domino", "Weighted count of strip domino tilings");
  odm->add_option("-n", fn, "half-period")->default_val(1);
  odm->add_option("-m", fm, "strip height")->default_val(2);
  odm->add_option("-i", oi, "region center column")->default_val(0);
  odm->add_option("-j", oj, "region center row")->default_val(0);
  odm->add_option("--ell0", ell0, "order offset")->default_val(0);
  odm->add_option("--ell", ell, "sequence index")->required();
  odm->callback(
      [&] { code = cmd_oracle_domino(fn, fm, oi, oj, ell0, ell); });

  auto* conjecture = app.add_subcommand(
      "conjecture", "Empirical checkers: polya, roots, tp, minimal");
  conjecture->add_option("kind", kind, "polya, roots, tp, or minimal")
      ->required();
  conjecture->add_option("network", net_path, "network JSON file or -")
      ->required();
  conjecture->add_option("--trials", trials, "number of trials")
      ->default_val(10);
  conjecture->add_option("--seed", seed, "random seed")->default_val(1);
  conjecture->add_option("--max-minor", max_minor, "largest minor size")
      ->default_val(2);
  conjecture->add_option("-r", r, "product order for minimality")
      ->default_val(1);
  conjecture->add_flag("--json", json, "also print the JSON report");
  conjecture->callback([&] {
    code = cmd_conjecture(kind, net_path, trials, seed, max_minor, r, json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
