#pragma once

#include <cstdint>
#include <functional>

#include "genus/bigint.hpp"
#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

// Facial walks of the embedding determined by a rotation system. The face
// permutation is d -> next(twin(d)); each walk is one orbit. Walks are
// ordered by their smallest dart id and each walk starts at that dart, so
// the output is deterministic.
struct FaceCollection {
  std::vector<std::vector<DartId>> walks;

  int face_count() const { return static_cast<int>(walks.size()); }
};

FaceCollection trace_faces(const Graph& g, const RotationSystem& rot);

// Genus of the oriented embedding: V - E + F = 2 - 2k. Throws internal_error
// if the Euler computation yields an odd or negative value (that would be a
// bug, not bad input). The dartless single-vertex graph embeds in the sphere
// with one face.
int genus_of(const Graph& g, const RotationSystem& rot);

// Count of rotation systems per genus, exact. counts[k] = number of rotation
// systems of genus k; trailing zero entries are trimmed. The counts always
// sum to rotation_count(g).
struct GenusDistribution {
  std::vector<BigInt> counts;

  BigInt total() const;
  int max_genus() const { return static_cast<int>(counts.size()) - 1; }
  BigInt count(int k) const;

  GenusDistribution& operator+=(const GenusDistribution& other);
  friend GenusDistribution operator+(GenusDistribution a, const GenusDistribution& b) {
    a += b;
    return a;
  }
  bool operator==(const GenusDistribution&) const = default;
};

struct EnumerationOptions {
  // Refuse to enumerate more rotation systems than this unless force is set.
  std::uint64_t budget = std::uint64_t(1) << 26;
  bool force = false;
  // 0 = one worker per hardware thread.
  unsigned workers = 0;
  // Optional coarse progress hook: called with (indices done, total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Exhaustive enumeration of all rotation systems of g. Every rotation is
// retraced from scratch; parallel runs split the index range and merge the
// per-genus counts by vector addition, so the result does not depend on the
// worker count. Throws budget_error (carrying the exact required count) if
// rotation_count(g) exceeds the budget and force is not set.
GenusDistribution genus_distribution(const Graph& g, const EnumerationOptions& options = {});

// Distribution over the index subrange [lo, hi). Partials over a partition of
// [0, rotation_count) merge by addition to the full distribution.
GenusDistribution distribution_partial(const Graph& g, std::uint64_t lo, std::uint64_t hi);

}  // namespace genus
