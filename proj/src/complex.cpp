#include "freepairs/complex.hpp"

#include <algorithm>
#include <cctype>

namespace freepairs {

namespace {

constexpr std::uint64_t kFaceEnumerationCap = std::uint64_t{1} << 24;
constexpr int kScanThreshold = 20;

void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw validation_error("vertex count must be between 0 and 32, got " + std::to_string(n));
}

void check_not_void(const SimplicialComplex& c) {
    if (c.is_void()) throw validation_error("operation undefined on the void complex");
}

// Antichain filter on masks: drop duplicates and supersets of another mask.
std::vector<VertexSet> minimal_masks(std::vector<VertexSet> masks) {
    std::sort(masks.begin(), masks.end(), [](VertexSet a, VertexSet b) {
        if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
        return a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<VertexSet> kept;
    for (VertexSet m : masks) {
        bool redundant = false;
        for (VertexSet k : kept) {
            if (is_subset(k, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_vertex_count(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_face_complex(int n) {
    check_vertex_count(n);
    return SimplicialComplex(n, {0});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    check_vertex_count(n);
    return SimplicialComplex(n, {full_vertex_set(n)});
}

bool SimplicialComplex::is_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](VertexSet h) { return is_subset(s, h); });
}

SimplicialComplex normalize_facets(int n, const std::vector<VertexSet>& raw) {
    check_vertex_count(n);
    const VertexSet full = full_vertex_set(n);
    for (VertexSet s : raw)
        if (!is_subset(s, full))
            throw validation_error("facet " + format_vertex_set(s) + " has vertices beyond n=" +
                                   std::to_string(n));

    std::vector<VertexSet> facets = raw;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> kept;
    for (VertexSet h : facets) {
        bool contained = false;
        for (VertexSet other : facets) {
            if (other != h && is_subset(h, other)) {
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(h);
    }
    std::sort(kept.begin(), kept.end(), vertex_set_less);
    return SimplicialComplex(n, std::move(kept));
}

bool pair_leq(const FreePair& a, const FreePair& b) {
    return is_subset(b.f, a.f) && is_subset(a.g, b.g);
}

bool pair_canonical_less(const FreePair& a, const FreePair& b) {
    if (a.f != b.f) return vertex_set_less(a.f, b.f);
    return vertex_set_less(a.g, b.g);
}

std::vector<VertexSet> all_faces(const SimplicialComplex& c) {
    std::vector<VertexSet> faces;
    if (c.is_void()) return faces;
    std::uint64_t steps = 0;
    for (VertexSet h : c.facets()) {
        steps += std::uint64_t{1} << set_size(h);
        if (steps > kFaceEnumerationCap)
            throw validation_error("face enumeration too large for this representation");
    }
    faces.reserve(static_cast<std::size_t>(steps));
    for (VertexSet h : c.facets()) {
        VertexSet s = h;
        while (true) {
            faces.push_back(s);
            if (s == 0) break;
            s = (s - 1) & h;
        }
    }
    std::sort(faces.begin(), faces.end(), vertex_set_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

VertexSet closed_star_intersection(const SimplicialComplex& c, VertexSet f) {
    check_not_void(c);
    if (f == 0) throw validation_error("closed star of the empty face is not defined here");
    VertexSet acc = full_vertex_set(c.vertex_count());
    bool found = false;
    for (VertexSet h : c.facets()) {
        if (is_subset(f, h)) {
            acc &= h;
            found = true;
        }
    }
    if (!found)
        throw validation_error(format_vertex_set(f) + " is not a face of the complex");
    return acc;
}

std::vector<FreePair> free_pairs(const SimplicialComplex& c) {
    std::vector<FreePair> out;
    if (c.is_void()) return out;
    for (VertexSet f : all_faces(c)) {
        if (f == 0) continue;
        const VertexSet closed = closed_star_intersection(c, f);
        const VertexSet g = closed & ~f;
        if (g != 0) out.push_back({f, g});
    }
    std::sort(out.begin(), out.end(), pair_canonical_less);
    return out;
}

std::vector<FreePair> maximal_free_pairs(const SimplicialComplex& c) {
    std::vector<FreePair> maxima;
    for (const FreePair& p : free_pairs(c)) {
        bool dominated = false;
        for (const FreePair& m : maxima) {
            if (pair_leq(p, m)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(maxima, [&](const FreePair& m) { return pair_leq(m, p); });
        maxima.push_back(p);
    }
    std::sort(maxima.begin(), maxima.end(), pair_canonical_less);
    return maxima;
}

bool in_link(const SimplicialComplex& c, VertexSet s, VertexSet t) {
    return (s & t) == 0 && c.is_face(s | t);
}

namespace detail {

std::vector<VertexSet> minimal_transversals(int n, const std::vector<VertexSet>& edges) {
    check_vertex_count(n);
    std::vector<VertexSet> trans = {0};
    for (VertexSet e : edges) {
        if (e == 0) return {};  // an empty edge cannot be hit
        std::vector<VertexSet> next;
        for (VertexSet t : trans) {
            if ((t & e) != 0) {
                next.push_back(t);
            } else {
                VertexSet rest = e;
                while (rest != 0) {
                    const VertexSet bit = rest & (~rest + 1);
                    next.push_back(t | bit);
                    rest &= rest - 1;
                }
            }
        }
        trans = minimal_masks(std::move(next));
    }
    std::sort(trans.begin(), trans.end(), vertex_set_less);
    return trans;
}

MonomialIdeal stanley_ideal_scan(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    const std::size_t size = std::size_t{1} << n;
    std::vector<char> face(size, 0);
    for (VertexSet h : c.facets()) face[h] = 1;
    for (std::size_t mask = size; mask-- > 0;) {
        if (!face[mask]) continue;
        VertexSet rest = static_cast<VertexSet>(mask);
        while (rest != 0) {
            const VertexSet bit = rest & (~rest + 1);
            face[mask ^ bit] = 1;
            rest &= rest - 1;
        }
    }
    std::vector<Monomial> gens;
    for (std::size_t mask = 1; mask < size; ++mask) {
        if (face[mask]) continue;
        bool minimal = true;
        VertexSet rest = static_cast<VertexSet>(mask);
        while (rest != 0) {
            const VertexSet bit = rest & (~rest + 1);
            if (!face[mask ^ bit]) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if (minimal)
            gens.push_back(squarefree_monomial(static_cast<std::size_t>(n),
                                               static_cast<VertexSet>(mask)));
    }
    return MonomialIdeal::minimalize(static_cast<std::size_t>(n), std::move(gens));
}

MonomialIdeal stanley_ideal_dual(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    const VertexSet full = full_vertex_set(n);
    std::vector<VertexSet> edges;
    edges.reserve(c.facets().size());
    for (VertexSet h : c.facets()) edges.push_back(full & ~h);
    std::vector<Monomial> gens;
    for (VertexSet t : minimal_transversals(n, edges))
        gens.push_back(squarefree_monomial(static_cast<std::size_t>(n), t));
    return MonomialIdeal::minimalize(static_cast<std::size_t>(n), std::move(gens));
}

SimplicialComplex complex_of_ideal_scan(const MonomialIdeal& I) {
    const int n = static_cast<int>(I.arity());
    const std::size_t size = std::size_t{1} << n;
    std::vector<char> dependent(size, 0);
    for (const Monomial& g : I.generators()) dependent[support(g)] = 1;
    for (std::size_t mask = 0; mask < size; ++mask) {
        if (dependent[mask]) continue;
        VertexSet rest = static_cast<VertexSet>(mask);
        while (rest != 0) {
            const VertexSet bit = rest & (~rest + 1);
            if (dependent[mask ^ bit]) {
                dependent[mask] = 1;
                break;
            }
            rest &= rest - 1;
        }
    }
    const VertexSet full = full_vertex_set(n);
    std::vector<VertexSet> facets;
    for (std::size_t mask = 0; mask < size; ++mask) {
        if (dependent[mask]) continue;
        VertexSet outside = full & ~static_cast<VertexSet>(mask);
        bool maximal = true;
        while (outside != 0) {
            const VertexSet bit = outside & (~outside + 1);
            if (!dependent[mask | bit]) {
                maximal = false;
                break;
            }
            outside &= outside - 1;
        }
        if (maximal) facets.push_back(static_cast<VertexSet>(mask));
    }
    return normalize_facets(n, facets);
}

SimplicialComplex complex_of_ideal_dual(const MonomialIdeal& I) {
    const int n = static_cast<int>(I.arity());
    std::vector<VertexSet> edges;
    edges.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) edges.push_back(support(g));
    const VertexSet full = full_vertex_set(n);
    std::vector<VertexSet> facets;
    for (VertexSet t : minimal_transversals(n, edges)) facets.push_back(full & ~t);
    return normalize_facets(n, facets);
}

}  // namespace detail

MonomialIdeal stanley_ideal(const SimplicialComplex& c) {
    check_not_void(c);
    if (c.vertex_count() < 1)
        throw validation_error("Stanley ideal needs at least one vertex");
    return c.vertex_count() <= kScanThreshold ? detail::stanley_ideal_scan(c)
                                              : detail::stanley_ideal_dual(c);
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
    if (I.is_unit()) throw validation_error("the unit ideal has no associated complex");
    if (!I.is_squarefree())
        throw validation_error("complex_of_ideal needs a squarefree ideal, got " + to_text(I));
    return static_cast<int>(I.arity()) <= kScanThreshold ? detail::complex_of_ideal_scan(I)
                                                         : detail::complex_of_ideal_dual(I);
}

CoreDecomposition core_decomposition(const SimplicialComplex& c) {
    check_not_void(c);
    const int n = c.vertex_count();
    VertexSet cone = full_vertex_set(n);
    for (VertexSet h : c.facets()) cone &= h;

    std::vector<int> kept;
    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if ((cone >> v) & 1u) continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
        kept.push_back(v);
    }

    std::vector<VertexSet> core_facets;
    core_facets.reserve(c.facets().size());
    for (VertexSet h : c.facets()) {
        VertexSet rest = h & ~cone;
        VertexSet relabeled = 0;
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            relabeled |= VertexSet{1} << new_index[static_cast<std::size_t>(v)];
            rest &= rest - 1;
        }
        core_facets.push_back(relabeled);
    }
    SimplicialComplex core = normalize_facets(static_cast<int>(kept.size()), core_facets);
    return CoreDecomposition{cone, std::move(kept), std::move(core)};
}

std::string format_facets(const SimplicialComplex& c) {
    if (c.is_void()) return "(void)";
    std::string out;
    for (VertexSet h : c.facets()) {
        if (!out.empty()) out += "; ";
        if (h == 0) {
            out += "{}";
            continue;
        }
        bool first = true;
        for (int v : vertices_of(h)) {
            if (!first) out += " ";
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

SimplicialComplex parse_facets(const std::string& text, std::optional<int> n) {
    std::vector<std::vector<int>> segments;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string seg =
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        pos = semi == std::string::npos ? text.size() + 1 : semi + 1;

        std::vector<int> vertices;
        std::string tok;
        bool empty_face = false;
        std::size_t i = 0;
        while (i <= seg.size()) {
            const char ch = i < seg.size() ? seg[i] : ' ';
            if (std::isspace(static_cast<unsigned char>(ch))) {
                if (!tok.empty()) {
                    if (tok == "{}") {
                        empty_face = true;
                    } else if (std::all_of(tok.begin(), tok.end(), [](char c) {
                                   return std::isdigit(static_cast<unsigned char>(c));
                               })) {
                        const long v = std::stol(tok);
                        if (v < 1 || v > kMaxVertices)
                            throw parse_error("vertex " + tok + " out of range [1, 32]");
                        vertices.push_back(static_cast<int>(v));
                    } else {
                        throw parse_error("bad vertex token '" + tok + "' in facet list");
                    }
                    tok.clear();
                }
            } else {
                tok += ch;
            }
            ++i;
        }
        if (empty_face && !vertices.empty())
            throw parse_error("facet mixes '{}' with vertices");
        if (vertices.empty() && !empty_face)
            throw parse_error("empty facet entry; write '{}' for the empty face");
        segments.push_back(std::move(vertices));
    }

    int max_vertex = 0;
    for (const auto& seg : segments)
        for (int v : seg) max_vertex = std::max(max_vertex, v);
    int count;
    if (n) {
        count = *n;
        if (max_vertex > count)
            throw validation_error("vertex " + std::to_string(max_vertex) + " exceeds n=" +
                                   std::to_string(count));
    } else {
        if (max_vertex == 0)
            throw parse_error("cannot infer the vertex count; pass --n or JSON facets");
        count = max_vertex;
    }

    std::vector<VertexSet> raw;
    raw.reserve(segments.size());
    for (const auto& seg : segments) raw.push_back(vertex_set_of(seg, count));
    return normalize_facets(count, raw);
}

}  // namespace freepairs
