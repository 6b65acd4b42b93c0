#include "catgen.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "genus/errors.hpp"
#include "genus/graph.hpp"
#include "genus/graph6.hpp"

namespace catgen {

namespace {

constexpr int kMaxOrder = 24;

// Adjacency bitmask rows; bit j of adj[i] set iff edge {i, j}.
struct Mask {
  int n = 0;
  std::array<std::uint32_t, kMaxOrder> adj{};

  int degree(int v) const { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); }
};

// Upper-triangle code of column j under the permutation prefix perm[0..j-1],
// most significant bit first (row 0 outranks row 1, matching graph6 bit
// order). Columns compare lexicographically, so codes do too.
std::uint32_t column_bits(const Mask& g, const int* perm, int j, int vj) {
  std::uint32_t bits = 0;
  for (int i = 0; i < j; ++i) {
    bits = (bits << 1) | ((g.adj[static_cast<std::size_t>(perm[i])] >> vj) & 1u);
  }
  return bits;
}

// True iff the identity labeling attains the maximum code: no relabeling
// produces a lexicographically larger column sequence. Branch-and-bound over
// permutation prefixes; a prefix whose next column already compares low is
// abandoned, one comparing high proves non-canonicity outright.
bool is_canonical(const Mask& g) {
  const int n = g.n;
  std::array<std::uint32_t, kMaxOrder> ref{};
  std::array<int, kMaxOrder> identity{};
  for (int j = 0; j < n; ++j) identity[static_cast<std::size_t>(j)] = j;
  for (int j = 0; j < n; ++j) {
    ref[static_cast<std::size_t>(j)] = column_bits(g, identity.data(), j, j);
  }

  std::array<int, kMaxOrder> perm{};
  std::uint32_t used = 0;
  // Returns true if some completion beats the reference code.
  auto dfs = [&](auto&& self, int pos) -> bool {
    if (pos == n) return false;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint32_t bits = column_bits(g, perm.data(), pos, v);
      if (bits < ref[static_cast<std::size_t>(pos)]) continue;
      if (bits > ref[static_cast<std::size_t>(pos)]) return true;
      perm[static_cast<std::size_t>(pos)] = v;
      used |= 1u << v;
      bool beat = self(self, pos + 1);
      used &= ~(1u << v);
      if (beat) return true;
    }
    return false;
  };
  return !dfs(dfs, 0);
}

bool is_connected(const Mask& g) {
  if (g.n == 0) return false;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    int v = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    std::uint32_t fresh = g.adj[static_cast<std::size_t>(v)] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

// A component all of whose vertices already have degree 3 can never reach the
// vertices still to come, so with more vertices pending it dooms the graph to
// disconnection.
bool has_saturated_component(const Mask& g) {
  std::uint32_t remaining = (1u << g.n) - 1;
  while (remaining != 0) {
    int start = __builtin_ctz(remaining);
    std::uint32_t comp = 1u << start;
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = g.adj[static_cast<std::size_t>(v)] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    bool saturated = true;
    for (std::uint32_t rest = comp; rest != 0; rest &= rest - 1) {
      if (g.degree(__builtin_ctz(rest)) != 3) {
        saturated = false;
        break;
      }
    }
    if (saturated) return true;
    remaining &= ~comp;
  }
  return false;
}

// Sound feasibility bounds for growing g to a connected cubic graph of the
// given target order. Every prefix of a canonically labeled connected cubic
// graph passes these, so pruning on them never loses an isomorphism class.
bool feasible(const Mask& g, int target) {
  const int pending = target - g.n;
  int deficiency = 0;
  for (int v = 0; v < g.n; ++v) {
    int cap = 3 - g.degree(v);
    if (cap < 0) return false;
    // A future vertex can supply at most one edge to v (simple graph).
    if (cap > pending) return false;
    deficiency += cap;
  }
  // Future vertices supply at most 3 edge endpoints each into the present.
  if (deficiency > 3 * pending) return false;
  // Degree sum still to be added is 3*pending + deficiency, twice an integer.
  if ((deficiency + 3 * pending) % 2 != 0) return false;
  if (pending > 0 && has_saturated_component(g)) return false;
  return true;
}

std::string to_graph6(const Mask& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if ((g.adj[static_cast<std::size_t>(i)] >> j) & 1u) edges.emplace_back(i, j);
    }
  }
  return genus::write_graph6(genus::Graph::from_edges(g.n, std::move(edges)));
}

void extend(const Mask& g, int target, std::vector<std::string>& out) {
  if (g.n == target) {
    bool cubic = true;
    for (int v = 0; v < g.n; ++v) {
      if (g.degree(v) != 3) {
        cubic = false;
        break;
      }
    }
    if (cubic && is_connected(g)) out.push_back(to_graph6(g));
    return;
  }

  // Candidate neighbors for the next vertex: existing vertices with capacity.
  std::array<int, kMaxOrder> open{};
  int open_n = 0;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) < 3) open[static_cast<std::size_t>(open_n++)] = v;
  }

  // All neighbor sets of size 0..3, as index combinations into open[].
  std::array<int, 3> pick{};
  auto attach = [&](int count) {
    Mask h = g;
    int w = h.n++;
    for (int i = 0; i < count; ++i) {
      int v = open[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      h.adj[static_cast<std::size_t>(v)] |= 1u << w;
      h.adj[static_cast<std::size_t>(w)] |= 1u << v;
    }
    if (feasible(h, target) && is_canonical(h)) extend(h, target, out);
  };

  attach(0);
  for (int a = 0; a < open_n; ++a) {
    pick[0] = a;
    attach(1);
    for (int b = a + 1; b < open_n; ++b) {
      pick[1] = b;
      attach(2);
      for (int c = b + 1; c < open_n; ++c) {
        pick[2] = c;
        attach(3);
      }
    }
  }
}

}  // namespace

std::vector<std::string> connected_cubic_graph6(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw genus::validation_error("order must be between 1 and " + std::to_string(kMaxOrder));
  }
  std::vector<std::string> out;
  if (order < 4 || order % 2 != 0) return out;
  Mask start;
  start.n = 1;
  extend(start, order, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace catgen
