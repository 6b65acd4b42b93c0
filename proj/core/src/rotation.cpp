#include "genus/rotation.hpp"

#include <algorithm>

namespace genus {

namespace {

// Degrees above this would need digit radixes ((deg-1)!) beyond 64 bits.
constexpr int kMaxIndexedDegree = 21;

std::uint64_t factorial_u64(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// k-th lexicographic permutation of `items` (factorial number system).
std::vector<DartId> unrank_permutation(std::vector<DartId> items, std::uint64_t rank) {
  std::vector<DartId> out;
  out.reserve(items.size());
  while (!items.empty()) {
    std::uint64_t f = factorial_u64(static_cast<int>(items.size()) - 1);
    std::size_t pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::uint64_t rank_permutation(const std::vector<DartId>& reference,
                               const std::vector<DartId>& perm) {
  std::vector<DartId> items = reference;
  std::uint64_t rank = 0;
  for (DartId want : perm) {
    std::uint64_t f = factorial_u64(static_cast<int>(items.size()) - 1);
    auto it = std::find(items.begin(), items.end(), want);
    rank += f * static_cast<std::uint64_t>(it - items.begin());
    items.erase(it);
  }
  return rank;
}

}  // namespace

BigInt rotation_count(const Graph& g) {
  BigInt count = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 2; i < g.degree(v); ++i) count *= i;
  }
  return count;
}

RotationSystem decode_rotation(const Graph& g, std::uint64_t index) {
  if (BigInt(index) >= rotation_count(g)) {
    throw validation_error("rotation index out of range");
  }
  RotationSystem rot;
  rot.next.assign(g.dart_count(), 0);
  std::uint64_t rest = index;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& darts = g.darts_at(v);
    int m = static_cast<int>(darts.size());
    if (m == 0) continue;
    if (m > kMaxIndexedDegree) {
      throw validation_error("vertex degree too large for 64-bit rotation indexing");
    }
    std::uint64_t radix = factorial_u64(m - 1);
    std::uint64_t digit = rest % radix;
    rest /= radix;
    // Cyclic order: first reference dart stays in front; the digit picks the
    // permutation of the rest, with digit 0 = reference order.
    std::vector<DartId> order;
    order.push_back(darts[0]);
    if (m > 1) {
      std::vector<DartId> tail(darts.begin() + 1, darts.end());
      auto perm = unrank_permutation(std::move(tail), digit);
      order.insert(order.end(), perm.begin(), perm.end());
    }
    for (int i = 0; i < m; ++i) rot.next[order[i]] = order[(i + 1) % m];
  }
  if (rest != 0) throw internal_error("rotation index decode left a remainder");
  return rot;
}

bool is_valid_rotation(const Graph& g, const RotationSystem& rot) {
  if (rot.next.size() != static_cast<std::size_t>(g.dart_count())) return false;
  std::vector<char> seen(g.dart_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& darts = g.darts_at(v);
    if (darts.empty()) continue;
    // Follow the cycle from the first reference dart; it must return to the
    // start in exactly degree(v) steps, staying inside this vertex's darts.
    DartId d = darts[0];
    for (int step = 0; step < static_cast<int>(darts.size()); ++step) {
      if (d >= rot.next.size()) return false;
      if (g.dart_vertex(d) != v || seen[d]) return false;
      seen[d] = 1;
      d = rot.next[d];
    }
    if (d != darts[0]) return false;
  }
  for (char c : seen) {
    if (!c) return false;
  }
  return true;
}

std::uint64_t encode_rotation(const Graph& g, const RotationSystem& rot) {
  if (!is_valid_rotation(g, rot)) {
    throw validation_error("not a valid rotation system for this graph");
  }
  BigInt total = rotation_count(g);
  if (total > BigInt(std::uint64_t(1) << 63)) {
    throw validation_error("rotation index space exceeds 64 bits");
  }
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& darts = g.darts_at(v);
    int m = static_cast<int>(darts.size());
    if (m == 0) continue;
    std::vector<DartId> cycle;
    DartId d = rot.next[darts[0]];
    for (int i = 1; i < m; ++i) {
      cycle.push_back(d);
      d = rot.next[d];
    }
    std::vector<DartId> reference(darts.begin() + 1, darts.end());
    std::uint64_t digit = m > 1 ? rank_permutation(reference, cycle) : 0;
    index += digit * place;
    place *= factorial_u64(m - 1);
  }
  return index;
}

}  // namespace genus
