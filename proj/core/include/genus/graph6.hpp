#pragma once

#include <string>

#include "genus/graph.hpp"

namespace genus {

// Parses one line of graph6 (simple undirected graphs):
//   - vertex count N(n): chr(63+n) for n <= 62, or '~' followed by three
//     bytes for 63 <= n <= 258047 (the 8-byte '~~' form is rejected),
//   - then the upper triangle of the adjacency matrix in column-major order
//     x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
//     groups, each emitted as chr(63+group),
//   - an optional ">>graph6<<" header prefix is tolerated.
//
// Trailing whitespace/CR/LF is ignored. Malformed input (bad length, byte
// outside [63,126], nonzero padding bits) throws parse_error carrying the
// byte offset into `line`. A graph that parses but is disconnected throws
// disconnected_error.
Graph parse_graph6(const std::string& line);

// Inverse of parse_graph6 for simple graphs; loops or parallel edges throw
// validation_error. Emits the canonical minimal encoding without header or
// newline, so write_graph6(parse_graph6(s)) == s for canonical input lines.
std::string write_graph6(const Graph& g);

}  // namespace genus
