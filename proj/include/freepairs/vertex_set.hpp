#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace freepairs {

// Vertex sets are machine-word bitmasks; vertices are 0-based internally and
// 1-based in all I/O.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

inline VertexSet full_vertex_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline int set_size(VertexSet s) { return std::popcount(s); }

// Ascending-lex order on the vertex lists, e.g. {1} < {1,2} < {2}.  Canonical
// order for facets and for free-pair components.
bool vertex_set_less(VertexSet a, VertexSet b);

// 1-based vertices in ascending order.
std::vector<int> vertices_of(VertexSet s);

// Builds a mask from 1-based vertices; rejects vertices outside [1, n].
VertexSet vertex_set_of(const std::vector<int>& vertices, int n);

// "{1,3,4}"; the empty set prints as "{}".
std::string format_vertex_set(VertexSet s);

}  // namespace freepairs
