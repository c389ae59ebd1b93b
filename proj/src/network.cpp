#include "cylnet/network.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace cylnet {

int QuotientNetwork::index_of(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end())
    throw NetworkError("unknown vertex: " + name);
  return int(it - vertices.begin());
}

namespace {

// Bellman-Ford negative-cycle detection on integer edge weights; returns a
// witness cycle (vertex indices) or empty if none.
std::vector<int> negative_cycle(int n, const std::vector<std::array<int, 3>>& edges) {
  // edges: {tail, head, weight}
  std::vector<long long> dist(n, 0);
  std::vector<int> pred(n, -1);
  int changed_vertex = -1;
  for (int round = 0; round <= n; round++) {
    changed_vertex = -1;
    for (auto& [u, v, w] : edges) {
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        pred[v] = u;
        changed_vertex = v;
      }
    }
    if (changed_vertex < 0) return {};
  }
  // Walk predecessors to land inside a cycle, then extract it.
  int x = changed_vertex;
  for (int i = 0; i < n && pred[x] >= 0; i++) x = pred[x];
  std::vector<int> cycle;
  int cur = x;
  do {
    cycle.push_back(cur);
    cur = pred[cur];
  } while (cur != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

void validate_windings(const QuotientNetwork& net) {
  int n = int(net.vertices.size());
  // Scale offsets so that any cycle with total offset <= 0 becomes a
  // negative cycle while cycles with total >= 1 stay positive: weight
  // offset*K - 1 with K > n bounds the -1 contributions of a simple cycle.
  int k = n + 1;
  std::vector<std::array<int, 3>> scaled;
  scaled.reserve(net.edges.size());
  for (auto& e : net.edges) scaled.push_back({e.tail, e.head, e.offset * k - 1});
  std::vector<int> cycle = negative_cycle(n, scaled);
  if (!cycle.empty()) {
    std::ostringstream msg;
    msg << "cycle with non-positive total offset:";
    for (int v : cycle) msg << " " << net.vertices[v];
    throw NonPositiveWinding(msg.str(), cycle);
  }
}

}  // namespace

QuotientNetwork build_network(std::vector<std::string> vertices,
                              std::vector<EdgeRecord> edges,
                              std::vector<std::string> vars,
                              bool planar_declared) {
  QuotientNetwork net;
  net.vertices = std::move(vertices);
  net.vars = std::move(vars);
  net.planar_declared = planar_declared;
  std::set<std::string> names(net.vertices.begin(), net.vertices.end());
  if (names.size() != net.vertices.size())
    throw NetworkError("duplicate vertex names");
  std::set<std::string> declared(net.vars.begin(), net.vars.end());
  std::map<std::tuple<int, int, int>, MPoly> merged;
  int n = int(net.vertices.size());
  for (auto& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw NetworkError("edge endpoint out of range");
    for (auto& v : e.weight.variables())
      if (!declared.count(v))
        throw NetworkError("edge weight uses undeclared variable: " + v);
    merged[{e.tail, e.head, e.offset}] += e.weight;
  }
  for (auto& [key, w] : merged) {
    if (w.is_zero()) continue;
    auto [tail, head, offset] = key;
    net.edges.push_back({tail, head, offset, w});
  }
  validate_windings(net);
  return net;
}

QuotientNetwork network_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw NetworkError(std::string("network JSON parse error: ") + e.what());
  }
  try {
    std::vector<std::string> vertices =
        j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::string> vars;
    if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
    bool planar = j.value("planar", false);
    std::vector<EdgeRecord> edges;
    QuotientNetwork lookup;
    lookup.vertices = vertices;
    for (auto& je : j.at("edges")) {
      EdgeRecord e;
      e.tail = lookup.index_of(je.at("from").get<std::string>());
      e.head = lookup.index_of(je.at("to").get<std::string>());
      e.offset = je.at("offset").get<int>();
      e.weight = parse_mpoly(je.at("weight").get<std::string>());
      edges.push_back(std::move(e));
    }
    return build_network(std::move(vertices), std::move(edges), std::move(vars),
                         planar);
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("network JSON: ") + e.what());
  }
}

std::string network_to_json(const QuotientNetwork& net) {
  nlohmann::json j;
  j["vars"] = net.vars;
  j["vertices"] = net.vertices;
  j["planar"] = net.planar_declared;
  j["edges"] = nlohmann::json::array();
  for (auto& e : net.edges) {
    j["edges"].push_back({{"from", net.vertices[e.tail]},
                          {"to", net.vertices[e.head]},
                          {"offset", e.offset},
                          {"weight", e.weight.str()}});
  }
  return j.dump(2);
}

QuotientNetwork network_from_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw NetworkError("cannot open network file: " + path);
    buf << in.rdbuf();
  }
  return network_from_json(buf.str());
}

Mat<TPoly> transfer_matrix(const QuotientNetwork& net) {
  int n = int(net.vertices.size());
  Mat<TPoly> b(n);
  for (auto& e : net.edges)
    b(e.tail, e.head) += TPoly(e.weight).shifted(e.offset);
  return b;
}

QuotientNetwork relabel_network(const QuotientNetwork& net,
                                const LiftRelabel& relabel) {
  QuotientNetwork out = net;
  for (auto& e : out.edges)
    e.offset += relabel.z[e.tail] - relabel.z[e.head];
  return out;
}

Localization localize(const QuotientNetwork& net) {
  int n = int(net.vertices.size());
  // Feasibility of 0 <= offset + z[tail] - z[head] <= 1 as difference
  // constraints: z[head]-z[tail] <= offset and z[tail]-z[head] <= 1-offset.
  // Constraint x_j - x_i <= c maps to edge i -> j of weight c; shortest
  // paths from a virtual source give a feasible z, a negative cycle means
  // the network is not local.
  std::vector<std::array<int, 3>> cons;
  for (auto& e : net.edges) {
    cons.push_back({e.tail, e.head, e.offset});
    cons.push_back({e.head, e.tail, 1 - e.offset});
  }
  std::vector<int> cycle = negative_cycle(n, cons);
  if (!cycle.empty()) {
    std::ostringstream msg;
    msg << "network is not local; infeasible constraint loop:";
    for (int v : cycle) msg << " " << net.vertices[v];
    throw NotLocal(msg.str(), cycle);
  }
  // Bellman-Ford distances from the virtual source (all distances start 0).
  std::vector<long long> dist(n, 0);
  for (int round = 0; round < n; round++) {
    bool changed = false;
    for (auto& [u, v, w] : cons)
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        changed = true;
      }
    if (!changed) break;
  }
  Localization loc;
  loc.relabel.z.resize(n);
  for (int i = 0; i < n; i++) loc.relabel.z[i] = int(dist[i]);
  loc.net = relabel_network(net, loc.relabel);
  for (auto& e : loc.net.edges)
    if (e.offset != 0 && e.offset != 1)
      throw NetworkError("internal: relabeled offset outside {0,1}");
  Mat<MPoly> c(n), d(n);
  for (auto& e : loc.net.edges) {
    if (e.offset == 0)
      c(e.tail, e.head) += e.weight;
    else
      d(e.tail, e.head) += e.weight;
  }
  // (Id - C)^{-1} = Id + C + ... ; C must be nilpotent (the offset-0
  // subgraph of a valid network is acyclic).
  Mat<MPoly> inv = Mat<MPoly>::identity(n);
  Mat<MPoly> power = c;
  for (int k = 1; k <= n; k++) {
    bool zero = true;
    for (int i = 0; i < n && zero; i++)
      for (int j = 0; j < n && zero; j++)
        if (!power(i, j).is_zero()) zero = false;
    if (zero) break;
    if (k == n)
      throw NetworkError("internal: offset-0 adjacency is not nilpotent");
    inv = inv + power;
    power = power * c;
  }
  loc.form.C = std::move(c);
  loc.form.D = std::move(d);
  loc.form.S = inv * loc.form.D;
  return loc;
}

}  // namespace cylnet
