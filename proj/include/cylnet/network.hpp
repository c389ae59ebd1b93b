#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cylnet/matrix.hpp"

namespace cylnet {

struct EdgeRecord {
  int tail = 0;
  int head = 0;
  int offset = 0;
  MPoly weight;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A directed cycle whose total offset is <= 0, violating the positive
// winding axiom (or, for localization, an infeasible constraint loop).
class NonPositiveWinding : public NetworkError {
 public:
  NonPositiveWinding(std::string msg, std::vector<int> cycle)
      : NetworkError(std::move(msg)), cycle(std::move(cycle)) {}
  std::vector<int> cycle;  // vertex indices of the witness
};

class NotLocal : public NetworkError {
 public:
  NotLocal(std::string msg, std::vector<int> cycle)
      : NetworkError(std::move(msg)), cycle(std::move(cycle)) {}
  std::vector<int> cycle;
};

// Finite quotient of a cylindrical network: vertices, offset-labeled
// weighted edges, planarity flag.  Parallel edges with equal (tail, head,
// offset) are merged by summing weights; every directed cycle must have
// total offset >= 1.
struct QuotientNetwork {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<std::string> vars;
  bool planar_declared = false;

  int index_of(const std::string& name) const;  // throws NetworkError
};

// Merge parallel edges, drop zero-weight edges, validate vertex references
// and the positive-winding axiom.  Throws NonPositiveWinding / NetworkError.
QuotientNetwork build_network(std::vector<std::string> vertices,
                              std::vector<EdgeRecord> edges,
                              std::vector<std::string> vars,
                              bool planar_declared);

// JSON wire format:
// {"vars": [...], "vertices": [...], "planar": bool,
//  "edges": [{"from": str, "to": str, "offset": int, "weight": str}]}
QuotientNetwork network_from_json(const std::string& text);
std::string network_to_json(const QuotientNetwork& net);
QuotientNetwork network_from_file(const std::string& path);  // "-" = stdin

// p x p transfer matrix: entry (i, j) = sum of t^offset * weight over edges
// i -> j.  Entries may be Laurent in t.
Mat<TPoly> transfer_matrix(const QuotientNetwork& net);

struct LiftRelabel {
  std::vector<int> z;  // potential per vertex; new offset = old + z[tail] - z[head]
};

struct LocalForm {
  Mat<MPoly> C;  // offset-0 adjacency (nilpotent)
  Mat<MPoly> D;  // offset-1 adjacency
  Mat<MPoly> S;  // (Id - C)^{-1} D
};

struct Localization {
  QuotientNetwork net;  // all offsets in {0, 1}
  LiftRelabel relabel;
  LocalForm form;
};

// Find a lift with all offsets in {0,1} by solving the difference
// constraints offset-1 <= z[head]-z[tail] <= offset via shortest-path
// relaxation.  Throws NotLocal with a witness cycle if infeasible.
Localization localize(const QuotientNetwork& net);

// Apply a relabel without recomputing the local form.
QuotientNetwork relabel_network(const QuotientNetwork& net,
                                const LiftRelabel& relabel);

// Requires planar_declared; returns an empty vector if every simple cycle
// has total offset 1, else a violating cycle (vertex indices).
std::vector<int> planar_sanity(const QuotientNetwork& net);

}  // namespace cylnet
