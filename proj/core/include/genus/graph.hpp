#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genus/errors.hpp"

namespace genus {

using DartId = std::uint32_t;

// A connected multigraph stored as a dart system: edge e owns darts 2e and
// 2e+1 (one per endpoint), and the twin involution is `id ^ 1`. Loops and
// parallel edges are allowed. `darts_at(v)` lists v's darts in the reference
// rotation: ascending neighbor order, ties between parallel edges broken by
// edge insertion order (and for the two darts of a loop, by dart id).
class Graph {
 public:
  // Builds and validates a graph. Throws validation_error for out-of-range
  // endpoints or an empty vertex set, disconnected_error if the edge set does
  // not connect all vertices.
  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  DartId twin(DartId d) const { return d ^ 1u; }
  int dart_vertex(DartId d) const { return dart_vertex_[d]; }
  // Vertex at the far end of the dart's edge.
  int dart_head(DartId d) const { return dart_vertex_[d ^ 1u]; }
  int dart_edge(DartId d) const { return static_cast<int>(d >> 1); }

  int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
  const std::vector<DartId>& darts_at(int v) const { return vertex_darts_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_regular(int k) const;
  int max_degree() const;
  // Simple = no loops, no parallel edges.
  bool is_simple() const;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> dart_vertex_;
  std::vector<std::vector<DartId>> vertex_darts_;
};

// Generalized Petersen graph GP(n, k): outer cycle u_0..u_{n-1}, spokes
// u_i - v_i, inner edges v_i - v_{i+k mod n}. Vertices are numbered with the
// outer cycle first (u_i = i, v_i = n + i). Requires n >= 3 and 1 <= k < n/2.
Graph generalized_petersen(int n, int k);

// Fixed catalog of named cubic graphs used by the survey of non-real-rooted
// genus polynomials: G18/G20/G22 (orders 18, 20, 22) plus two smaller
// catalog entries FIG1A (order 10, the pentagonal prism) and FIG1B (order 16,
// the octagonal prism). Unknown names throw validation_error.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

}  // namespace genus
