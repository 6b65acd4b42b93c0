#pragma once

#include <cstdint>

#include "genus/bigint.hpp"
#include "genus/graph.hpp"

namespace genus {

// A rotation system: for every dart, its cyclic successor among the darts at
// the same vertex. One full cyclic order per vertex.
struct RotationSystem {
  std::vector<DartId> next;
};

// Number of rotation systems of g: the product over vertices of
// (degree(v) - 1)!. Exact.
BigInt rotation_count(const Graph& g);

// Rotation systems are indexed 0 .. rotation_count(g)-1 as a mixed-radix
// integer: vertex 0 is the least significant digit, the digit radix at v is
// (degree(v)-1)!, and digit 0 always selects the reference rotation (the
// darts_at order). Digit k selects the k-th lexicographic permutation of the
// darts after the first one, so for a cubic graph the index is an n-bit word
// whose v-th bit reverses vertex v. Only indices representable in 64 bits are
// supported (the enumeration budget caps far below that); vertices of degree
// > 21 would need wider digits and are rejected.
RotationSystem decode_rotation(const Graph& g, std::uint64_t index);

// Inverse of decode_rotation. Throws validation_error if rot is not a valid
// rotation system for g or if the index space of g exceeds 64 bits.
std::uint64_t encode_rotation(const Graph& g, const RotationSystem& rot);

// True iff rot.next restricts to a single cycle over the darts of every
// vertex of g.
bool is_valid_rotation(const Graph& g, const RotationSystem& rot);

}  // namespace genus
