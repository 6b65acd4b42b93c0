#pragma once

#include <string>
#include <vector>

namespace catgen {

// All connected cubic (3-regular) simple graphs of the given order, one per
// isomorphism class, as lexicographically sorted graph6 lines. Odd orders and
// orders < 4 have none. order must be between 1 and 24.
//
// Method: orderly generation. A labeled graph is canonical when its
// column-major upper-triangle bit code is the lexicographic maximum over all
// vertex relabelings; that code order makes canonicity hereditary under
// deleting the last vertex, so extending canonical graphs by one vertex (with
// edges only into the existing vertices) and keeping the canonical results
// walks every isomorphism class exactly once. Branches that cannot reach a
// connected cubic graph of the target order are cut by degree-capacity,
// parity, and saturated-component bounds.
std::vector<std::string> connected_cubic_graph6(int order);

}  // namespace catgen
