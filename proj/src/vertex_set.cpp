#include "freepairs/vertex_set.hpp"

#include "freepairs/errors.hpp"

namespace freepairs {

bool vertex_set_less(VertexSet a, VertexSet b) {
    while (a != 0 && b != 0) {
        const int i = std::countr_zero(a);
        const int j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s != 0) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

VertexSet vertex_set_of(const std::vector<int>& vertices, int n) {
    if (n < 0 || n > kMaxVertices)
        throw validation_error("vertex count must be between 0 and 32, got " + std::to_string(n));
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 1 || v > n)
            throw validation_error("vertex " + std::to_string(v) + " out of range [1, " +
                                   std::to_string(n) + "]");
        s |= VertexSet{1} << (v - 1);
    }
    return s;
}

std::string format_vertex_set(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace freepairs
