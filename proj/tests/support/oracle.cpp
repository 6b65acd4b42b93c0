#include "oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace oracle {
namespace {

// Darts of each vertex, derived from the edge list alone: edge e contributes
// dart 2e at its first endpoint and 2e+1 at its second.
std::vector<std::vector<int>> darts_by_vertex(const genus::Graph& g) {
  std::vector<std::vector<int>> at(g.vertex_count());
  const auto& edges = g.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    at[edges[e].first].push_back(2 * e);
    at[edges[e].second].push_back(2 * e + 1);
  }
  return at;
}

int other_end(const genus::Graph& g, int dart) {
  const auto& e = g.edges()[dart / 2];
  return (dart % 2 == 0) ? e.second : e.first;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

Rotation reference_rotation(const genus::Graph& g) {
  Rotation rot = darts_by_vertex(g);
  for (auto& darts : rot) {
    std::sort(darts.begin(), darts.end(), [&](int a, int b) {
      int na = other_end(g, a), nb = other_end(g, b);
      if (na != nb) return na < nb;
      if (a / 2 != b / 2) return a / 2 < b / 2;
      return a < b;
    });
  }
  return rot;
}

int face_count(const genus::Graph& g, const Rotation& rot) {
  const int darts = g.dart_count();
  // Successor of each dart within its vertex's cyclic order.
  std::vector<int> succ(darts, -1);
  for (const auto& cycle : rot) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      succ[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    int d = d0;
    do {
      seen[d] = 1;
      d = succ[d ^ 1];  // face permutation: rotate after crossing to the twin
    } while (d != d0);
  }
  return faces;
}

int genus_of(const genus::Graph& g, const Rotation& rot) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  const int f = (e == 0) ? 1 : face_count(g, rot);
  const int euler = v - e + f;
  if ((2 - euler) % 2 != 0) throw std::logic_error("odd Euler defect");
  return (2 - euler) / 2;
}

namespace {

// Rebuilds a rotation from the reference by permuting each vertex's tail
// (everything after the pinned first dart) according to `perm`, a vector of
// positions into the reference tail. Permuting positions, not dart values,
// keeps digit 0 = reference even where the reference tail's dart ids are not
// ascending.
Rotation apply_tails(const Rotation& ref, const std::vector<std::vector<int>>& perm) {
  Rotation rot = ref;
  for (std::size_t v = 0; v < ref.size(); ++v) {
    for (std::size_t i = 0; i < perm[v].size(); ++i) {
      rot[v][i + 1] = ref[v][perm[v][i] + 1];
    }
  }
  return rot;
}

}  // namespace

std::vector<std::uint64_t> genus_distribution(const genus::Graph& g) {
  const Rotation ref = reference_rotation(g);
  // Odometer over tail-position permutations; ascending = the reference, so
  // every digit starts at its wrap point and cycles through (deg-1)! states.
  std::vector<std::vector<int>> perm(ref.size());
  for (std::size_t v = 0; v < ref.size(); ++v) {
    if (ref[v].size() > 1) {
      perm[v].resize(ref[v].size() - 1);
      std::iota(perm[v].begin(), perm[v].end(), 0);
    }
  }
  std::vector<std::uint64_t> counts;
  while (true) {
    const int k = genus_of(g, apply_tails(ref, perm));
    if (static_cast<int>(counts.size()) <= k) counts.resize(k + 1, 0);
    ++counts[k];
    // Advance vertex 0 first (least significant digit).
    std::size_t v = 0;
    for (; v < perm.size(); ++v) {
      if (perm[v].size() < 2) continue;
      if (std::next_permutation(perm[v].begin(), perm[v].end())) break;
    }
    if (v == perm.size()) break;
  }
  return counts;
}

Rotation rotation_at_index(const genus::Graph& g, std::uint64_t index) {
  const Rotation ref = reference_rotation(g);
  std::vector<std::vector<int>> perm(ref.size());
  for (std::size_t v = 0; v < ref.size(); ++v) {
    const int deg = static_cast<int>(ref[v].size());
    const std::uint64_t radix = (deg == 0) ? 1 : factorial(deg - 1);
    std::uint64_t digit = index % radix;
    index /= radix;
    if (deg > 1) {
      perm[v].resize(deg - 1);
      std::iota(perm[v].begin(), perm[v].end(), 0);
      for (std::uint64_t i = 0; i < digit; ++i) {
        std::next_permutation(perm[v].begin(), perm[v].end());
      }
    }
  }
  if (index != 0) throw std::out_of_range("rotation index beyond rotation_count");
  return apply_tails(ref, perm);
}

std::vector<std::complex<double>> durand_kerner(const std::vector<double>& ascending) {
  std::vector<double> c = ascending;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  for (double& x : c) x /= ascending[deg];

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (int i = deg; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };

  std::vector<std::complex<double>> z(deg);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> p = 1.0;
  for (int i = 0; i < deg; ++i) {
    p *= seed;
    z[i] = p;
  }
  for (int sweep = 0; sweep < 500; ++sweep) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < deg; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == std::complex<double>(0.0, 0.0)) denom = 1e-30;
      const std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

}  // namespace oracle
