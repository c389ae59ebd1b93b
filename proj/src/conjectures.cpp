#include "cylnet/conjectures.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "cylnet/paths.hpp"
#include "cylnet/recurrence.hpp"
#include "cylnet/sturm.hpp"
#include "cylnet/threads.hpp"

namespace cylnet {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(trial + 1));
}

// parallel_for cannot carry exceptions across worker threads; run each
// trial body under a catch-all and rethrow the lowest-index failure after
// the join so the outcome matches a serial run.
void parallel_trials(int trials, const std::function<void(int)>& body) {
  std::vector<std::exception_ptr> errors(trials);
  parallel_for(size_t(trials), [&](size_t trial) {
    try {
      body(int(trial));
    } catch (...) {
      errors[trial] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::map<std::string, mpq_class> random_positive_point(
    const std::vector<std::string>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 20), den(1, 4);
  std::map<std::string, mpq_class> point;
  for (auto& v : vars) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    point[v] = x;
  }
  return point;
}

std::string point_str(const std::map<std::string, mpq_class>& point) {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : point) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 0; i < k; i++) b = b * (n - i) / (i + 1);
  return b;
}

// All nonempty partitions with at most `rows` parts, each at most `cols`.
std::vector<std::vector<int>> partitions_in_box(int rows, int cols) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    if (!cur.empty()) out.push_back(cur);
    if (int(cur.size()) == rows) return;
    for (int part = 1; part <= cap; part++) {
      cur.push_back(part);
      rec(part);
      cur.pop_back();
    }
  };
  rec(cols);
  return out;
}

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i <= n - (k - int(cur.size())); i++) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Exact rational determinant by Gaussian elimination with pivot search.
mpq_class minor_det(const std::vector<std::vector<mpq_class>>& m,
                    const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  int k = int(rows.size());
  std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k));
  for (int i = 0; i < k; i++)
    for (int j = 0; j < k; j++) a[i][j] = m[rows[i]][cols[j]];
  mpq_class det = 1;
  for (int col = 0; col < k; col++) {
    int pivot = -1;
    for (int i = col; i < k; i++)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int i = col + 1; i < k; i++) {
      if (a[i][col] == 0) continue;
      mpq_class factor = a[i][col] / a[col][col];
      for (int j = col; j < k; j++) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

std::string tuple_str(const QuotientNetwork& net, const RVertex& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); i++) {
    if (i) os << ", ";
    os << net.vertices[t[i].base] << "@" << t[i].shift;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string ConjectureReport::summary() const {
  std::ostringstream os;
  os << id << ": " << (pass() ? "PASS" : "FAIL") << " (" << instances
     << " instances, " << counterexamples.size() << " counterexamples, seed "
     << seed << ")";
  return os.str();
}

std::string ConjectureReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["seed"] = seed;
  j["instances"] = instances;
  j["pass"] = pass();
  nlohmann::json params = nlohmann::json::object();
  for (auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["counterexamples"] = counterexamples;
  return j.dump(2);
}

std::vector<MPoly> h_sequence(const TPoly& q) {
  int d = q.degree();
  std::vector<MPoly> h;
  for (int r = 0; r <= d; r++) {
    MPoly c = q.coeff(d - r);
    h.push_back(r % 2 ? -c : c);
  }
  return h;
}

ConjectureReport check_polya(const QuotientNetwork& net, int max_minor) {
  if (!net.planar_declared)
    throw NetworkError("check_polya: network is not planar-declared");
  TPoly q = q_n_cycles(net);
  std::vector<MPoly> h = h_sequence(q);
  ConjectureReport report;
  report.id = "polya";
  report.parameters = {{"max_minor", std::to_string(max_minor)},
                       {"degree", std::to_string(q.degree())}};
  // Minors up to size max_minor are nonnegative combinations of the
  // Schur images for shapes in the max_minor box; single columns beyond the
  // box cover the remaining 1x1 entries H_r.
  std::set<std::vector<int>> shapes;
  for (auto& lambda : partitions_in_box(max_minor, max_minor))
    shapes.insert(lambda);
  for (int r = 1; r < int(h.size()); r++)
    shapes.insert(std::vector<int>(r, 1));
  for (auto& lambda : shapes) {
    MPoly image = psi_schur(PartitionShape::of(lambda), h);
    report.instances++;
    if (!image.nonneg_coeffs()) {
      std::ostringstream os;
      os << "lambda=(";
      for (size_t i = 0; i < lambda.size(); i++)
        os << (i ? "," : "") << lambda[i];
      os << "): psi = " << image.str();
      report.counterexamples.push_back(os.str());
    }
  }
  return report;
}

ConjectureReport check_real_roots(const QuotientNetwork& net, int trials,
                                  std::uint64_t seed) {
  if (!net.planar_declared)
    throw NetworkError("check_real_roots: network is not planar-declared");
  TPoly q = q_n_cycles(net);
  int d = q.degree();
  std::vector<std::optional<std::string>> bad(trials);
  parallel_trials(trials, [&](int trial) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    auto point = random_positive_point(net.vars, rng);
    QPoly p = qpoly_from_tpoly(q, point);
    int roots = count_positive_roots(p);
    if (roots != d) {
      std::ostringstream os;
      os << "trial " << trial << ": " << point_str(point)
         << "; Q = " << qpoly_str(p) << "; positive real roots " << roots
         << " of " << d;
      bad[trial] = os.str();
    }
  });
  ConjectureReport report;
  report.id = "real-roots";
  report.seed = seed;
  report.instances = trials;
  report.parameters = {{"degree", std::to_string(d)},
                       {"trials", std::to_string(trials)}};
  for (auto& w : bad)
    if (w) report.counterexamples.push_back(*w);
  return report;
}

ConjectureReport check_total_positivity(const QuotientNetwork& net, int trials,
                                        std::uint64_t seed) {
  Localization loc = localize(net);
  int n = loc.form.S.n();
  std::vector<std::optional<std::string>> bad(trials);
  parallel_trials(trials, [&](int trial) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    auto point = random_positive_point(net.vars, rng);
    std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) s[i][j] = loc.form.S(i, j).eval(point);
    std::ostringstream os;
    bool any = false;
    for (int k = 1; k <= n; k++) {
      auto subsets = sorted_subsets(n, k);
      for (auto& rows : subsets)
        for (auto& cols : subsets) {
          mpq_class det = minor_det(s, rows, cols);
          if (det > 0) continue;
          if (any) os << "; ";
          any = true;
          os << "trial " << trial << ": minor rows(";
          for (size_t i = 0; i < rows.size(); i++)
            os << (i ? "," : "") << rows[i];
          os << ") cols(";
          for (size_t i = 0; i < cols.size(); i++)
            os << (i ? "," : "") << cols[i];
          os << ") = " << det << (det == 0 ? " (non-strict)" : " (negative)")
             << " at " << point_str(point);
        }
    }
    if (any) bad[trial] = os.str();
  });
  ConjectureReport report;
  report.id = "total-positivity";
  report.seed = seed;
  report.instances = trials;
  report.parameters = {{"matrix_size", std::to_string(n)},
                       {"trials", std::to_string(trials)},
                       {"lift", "canonical"}};
  for (auto& w : bad)
    if (w) report.counterexamples.push_back(*w);
  return report;
}

bool strongly_connected(const QuotientNetwork& net) {
  int n = int(net.vertices.size());
  if (n == 0) return false;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& e : net.edges) {
        int from = forward ? e.tail : e.head;
        int to = forward ? e.head : e.tail;
        if (from == v && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return seen;
  };
  auto fwd = reach(true), bwd = reach(false);
  for (int v = 0; v < n; v++)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

ConjectureReport check_minimality(const QuotientNetwork& net, int r,
                                  int trials, std::uint64_t seed) {
  if (!strongly_connected(net))
    throw NetworkError(
        "check_minimality: quotient digraph is not strongly connected");
  TPoly q = q_n_cycles(net);
  int d = q.degree();
  long bound = binom(d, r);
  if (r < 1 || r > d)
    throw BadRank("check_minimality: need 1 <= r <= deg Q_N");
  int n = int(net.vertices.size());
  int L = int(2 * bound + 4);
  std::vector<std::optional<std::string>> bad(trials);
  std::vector<int> degrees(trials, -1);
  parallel_trials(trials, [&](int trial) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    auto point = random_positive_point(net.vars, rng);
    for (int attempt = 0;; attempt++) {
      if (attempt == 20)
        throw NetworkError(
            "check_minimality: no usable endpoint tuple after 20 draws");
      // r distinct source vertices at shift 0, r distinct targets one
      // period ahead; lgv_sequence advances the targets further.
      std::vector<int> perm(n);
      for (int i = 0; i < n; i++) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      RVertex ubf, vbf;
      for (int i = 0; i < r; i++) ubf.push_back({perm[i], 0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < r; i++) vbf.push_back({perm[i], 1});
      std::vector<MPoly> f;
      try {
        f = lgv_sequence(net, ubf, vbf, L);
      } catch (const WindowOverflow&) {
        continue;
      }
      std::vector<mpq_class> values;
      bool all_zero = true;
      for (auto& p : f) {
        values.push_back(p.eval(point));
        if (values.back() != 0) all_zero = false;
      }
      if (all_zero) continue;
      std::optional<MinimalRecurrence> min;
      for (int drop = 0; drop <= 3 && !min; drop++) {
        try {
          min = minimal_recurrence(values, drop);
        } catch (const Unstable&) {
        } catch (const Inconclusive&) {
        }
      }
      if (!min) continue;
      int deg = int(min->poly.size()) - 1;
      degrees[trial] = deg;
      if (deg > bound) {
        std::ostringstream os;
        os << "trial " << trial << ": minimal degree " << deg
           << " exceeds the proven bound C(" << d << "," << r << ") = "
           << bound << " for u=" << tuple_str(net, ubf)
           << " v=" << tuple_str(net, vbf) << " at " << point_str(point);
        throw TheoremViolation(os.str());
      }
      if (deg < bound) {
        std::ostringstream os;
        os << "trial " << trial << ": minimal degree " << deg << " < C(" << d
           << "," << r << ") = " << bound << " for u=" << tuple_str(net, ubf)
           << " v=" << tuple_str(net, vbf) << " at " << point_str(point)
           << "; recurrence " << qpoly_str(min->poly);
        bad[trial] = os.str();
      }
      return;
    }
  });
  ConjectureReport report;
  report.id = "minimality";
  report.seed = seed;
  report.instances = trials;
  int matched = 0;
  for (int deg : degrees) matched += (deg == bound);
  report.parameters = {{"r", std::to_string(r)},
                       {"degree", std::to_string(d)},
                       {"bound", std::to_string(bound)},
                       {"matched", std::to_string(matched)},
                       {"trials", std::to_string(trials)}};
  for (auto& w : bad)
    if (w) report.counterexamples.push_back(*w);
  return report;
}

QuotientNetwork random_planar_network(std::mt19937_64& rng, int max_rows,
                                      int max_layers) {
  std::uniform_int_distribution<int> nr(1, max_rows), nl(2, max_layers);
  std::uniform_int_distribution<int> pct(0, 99);
  for (;;) {
    int rows = nr(rng), layers = nl(rng);
    std::vector<std::string> vertices;
    for (int r = 0; r < rows; r++)
      for (int c = 0; c < layers; c++)
        vertices.push_back(std::to_string(r) + "," + std::to_string(c));
    auto at = [&](int r, int c) { return r * layers + c; };
    std::vector<EdgeRecord> edges;
    std::vector<std::string> vars;
    auto add = [&](int tail, int head, int offset) {
      std::string w = "p" + std::to_string(edges.size());
      vars.push_back(w);
      edges.push_back({tail, head, offset, MPoly::var(w)});
    };
    for (int c = 0; c < layers; c++) {
      int nc = (c + 1) % layers;
      int offset = (c == layers - 1) ? 1 : 0;
      for (int r = 0; r < rows; r++)
        if (pct(rng) < 80) add(at(r, c), at(r, nc), offset);
      // One diagonal direction per quad keeps the drawing crossing-free.
      for (int r = 0; r + 1 < rows; r++)
        if (pct(rng) < 50) {
          if (pct(rng) < 50)
            add(at(r, c), at(r + 1, nc), offset);
          else
            add(at(r + 1, c), at(r, nc), offset);
        }
    }
    QuotientNetwork net;
    try {
      net = build_network(std::move(vertices), std::move(edges),
                          std::move(vars), true);
    } catch (const NonPositiveWinding&) {
      continue;
    }
    if (!planar_sanity(net).empty()) continue;
    if (q_n_cycles(net).degree() < 1) continue;
    return net;
  }
}

}  // namespace cylnet
