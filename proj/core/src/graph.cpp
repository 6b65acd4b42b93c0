#include "genus/graph.hpp"

#include <algorithm>
#include <numeric>

namespace genus {

namespace {

// Union-find over vertex ids, for the connectivity check.
struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 1) throw validation_error("graph needs at least one vertex");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw validation_error("edge " + std::to_string(e) + " endpoint out of range");
    }
  }

  Dsu dsu(vertex_count);
  for (auto [u, v] : edges) dsu.unite(u, v);
  int root = dsu.find(0);
  for (int v = 1; v < vertex_count; ++v) {
    if (dsu.find(v) != root) throw disconnected_error("graph is disconnected");
  }

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.dart_vertex_.resize(2 * g.edges_.size());
  g.vertex_darts_.assign(vertex_count, {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    DartId du = static_cast<DartId>(2 * e);
    DartId dv = du + 1;
    g.dart_vertex_[du] = u;
    g.dart_vertex_[dv] = v;
    g.vertex_darts_[u].push_back(du);
    g.vertex_darts_[v].push_back(dv);
  }
  // Reference rotation: ascending neighbor, then edge insertion order (which
  // for the two darts of a loop also orders them by dart id).
  for (auto& darts : g.vertex_darts_) {
    std::sort(darts.begin(), darts.end(), [&g](DartId a, DartId b) {
      int ha = g.dart_head(a), hb = g.dart_head(b);
      if (ha != hb) return ha < hb;
      if ((a >> 1) != (b >> 1)) return (a >> 1) < (b >> 1);
      return a < b;
    });
  }
  return g;
}

bool Graph::is_regular(int k) const {
  for (int v = 0; v < n_; ++v) {
    if (degree(v) != k) return false;
  }
  return true;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges_.size());
  for (auto [u, v] : edges_) {
    if (u == v) return false;
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Graph generalized_petersen(int n, int k) {
  if (n < 3) throw validation_error("generalized Petersen graph needs n >= 3");
  if (k < 1 || 2 * k >= n) {
    throw validation_error("generalized Petersen graph needs 1 <= k < n/2");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(3 * n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);           // outer cycle
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);                 // spokes
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + k) % n);   // inner orbit
  return Graph::from_edges(2 * n, std::move(edges));
}

namespace {

struct NamedEntry {
  const char* name;
  int order;
  std::vector<std::pair<int, int>> edges;
};

// Edge lists of the named cubic survey graphs (all have genus polynomials
// with roots off the real axis). G18/G20/G22 are sporadic order-18/20/22
// graphs; FIG1A and FIG1B are the pentagonal and octagonal prisms, listed
// with the labeling they are usually drawn with (outer cycle 0..n-1, inner
// ring following).
const std::vector<NamedEntry>& named_table() {
  static const std::vector<NamedEntry> table = {
      {"G18",
       18,
       {{0, 1},   {1, 4},   {4, 3},   {3, 2},   {2, 0},   {4, 5},   {5, 6},
        {6, 7},   {7, 3},   {2, 8},   {8, 9},   {9, 7},   {6, 11},  {11, 10},
        {10, 9},  {8, 12},  {12, 10}, {14, 13}, {13, 1},  {0, 14},  {14, 17},
        {17, 12}, {17, 16}, {16, 11}, {16, 15}, {15, 5},  {15, 13}}},
      {"G20",
       20,
       {{0, 1},   {1, 3},   {3, 4},   {4, 2},   {2, 0},   {2, 5},   {5, 7},
        {7, 6},   {6, 4},   {3, 8},   {8, 9},   {9, 6},   {1, 10},  {10, 11},
        {11, 8},  {11, 12}, {12, 13}, {13, 9},  {10, 14}, {14, 12}, {15, 0},
        {5, 16},  {17, 14}, {17, 15}, {15, 16}, {7, 18},  {16, 18}, {17, 19},
        {19, 13}, {19, 18}}},
      {"G22",
       22,
       {{0, 1},   {1, 3},   {3, 4},   {4, 2},   {2, 0},   {2, 5},   {5, 7},
        {7, 6},   {6, 4},   {3, 8},   {8, 9},   {9, 6},   {1, 10},  {10, 11},
        {11, 8},  {11, 12}, {12, 13}, {13, 9},  {10, 14}, {14, 12}, {15, 0},
        {15, 16}, {16, 5},  {17, 15}, {16, 18}, {19, 14}, {19, 17}, {17, 18},
        {7, 20},  {18, 20}, {19, 21}, {21, 13}, {21, 20}}},
      {"FIG1A",
       10,
       {{1, 0}, {0, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 6}, {6, 5}, {5, 0},
        {5, 9}, {9, 4}, {9, 8}, {8, 3}, {8, 7}, {7, 2}, {7, 6}}},
      {"FIG1B",
       16,
       {{2, 0},   {0, 1},   {1, 7},   {7, 6},   {6, 5},   {5, 4},
        {4, 3},   {3, 2},   {0, 8},   {8, 15},  {15, 2},  {14, 15},
        {14, 3},  {14, 13}, {13, 4},  {12, 13}, {12, 5},  {12, 11},
        {11, 6},  {11, 10}, {10, 7},  {10, 9},  {9, 1},   {9, 8}}},
  };
  return table;
}

}  // namespace

Graph named_graph(const std::string& name) {
  for (const auto& entry : named_table()) {
    if (name == entry.name) {
      Graph g = Graph::from_edges(entry.order, entry.edges);
      if (g.vertex_count() != entry.order || !g.is_regular(3)) {
        throw internal_error(std::string("named graph table is corrupt: ") + entry.name);
      }
      return g;
    }
  }
  throw validation_error("unknown named graph: " + name);
}

std::vector<std::string> named_graph_names() {
  std::vector<std::string> names;
  for (const auto& entry : named_table()) names.emplace_back(entry.name);
  return names;
}

}  // namespace genus
