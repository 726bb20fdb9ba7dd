#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freepairs/ideal.hpp"
#include "freepairs/vertex_set.hpp"

namespace freepairs {

// A simplicial complex on vertices 1..n, held by its facet antichain under
// inclusion, canonically sorted.  The void complex (no facets) and the
// complex {∅} (a single empty facet) are distinct values.
class SimplicialComplex {
public:
    // The void complex on n vertices.
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_face_complex(int n);  // the complex {∅}
    static SimplicialComplex full_simplex(int n);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_face(VertexSet s) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VertexSet> facets)
        : n_(n), facets_(std::move(facets)) {}
    friend SimplicialComplex normalize_facets(int n, const std::vector<VertexSet>& raw);

    int n_ = 0;
    std::vector<VertexSet> facets_;
};

// Discards sets contained in another; result is a facet antichain.
SimplicialComplex normalize_facets(int n, const std::vector<VertexSet>& raw);

// An ordered pair of disjoint nonempty vertex sets (f, g) with f ∪ g a face
// equal to the intersection of all facets containing f.
struct FreePair {
    VertexSet f = 0;
    VertexSet g = 0;
    friend bool operator==(const FreePair&, const FreePair&) = default;
};

// (f1,g1) <= (f2,g2) iff f1 ⊇ f2 and g1 ⊆ g2.
bool pair_leq(const FreePair& a, const FreePair& b);

// Sort key: f ascending-lex, then g.
bool pair_canonical_less(const FreePair& a, const FreePair& b);

// Every face (including ∅ for non-void complexes), sorted ascending-lex.
// Rejects inputs whose facet-subset enumeration would exceed ~2^24 steps.
std::vector<VertexSet> all_faces(const SimplicialComplex& c);

// C(f) = ∩ { facet H : f ⊆ H }; f must be a nonempty face.
VertexSet closed_star_intersection(const SimplicialComplex& c, VertexSet f);

// All (f, g) with f, g nonempty, disjoint, f ∪ g ∈ Δ and f ∪ g = C(f).
// Returns ∅ for the void complex and for {∅} by convention.
std::vector<FreePair> free_pairs(const SimplicialComplex& c);

// Maximal elements of free_pairs under pair_leq, canonically sorted.
std::vector<FreePair> maximal_free_pairs(const SimplicialComplex& c);

// t ∈ link(s): t ∩ s = ∅ and t ∪ s a face.
bool in_link(const SimplicialComplex& c, VertexSet s, VertexSet t);

// Squarefree ideal generated by the minimal non-faces of Δ.
MonomialIdeal stanley_ideal(const SimplicialComplex& c);

// Inverse Stanley map: facets are the maximal vertex sets containing no
// generator support.  Requires a squarefree proper ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);

struct CoreDecomposition {
    VertexSet cone_points = 0;
    // Old 0-based vertex indices kept, ascending; new vertex i is
    // kept_vertices[i].
    std::vector<int> kept_vertices;
    SimplicialComplex core;
};

// cone points = ∩ facets; core = restriction to the remaining vertices,
// relabeled to 1..n-|CP|.
CoreDecomposition core_decomposition(const SimplicialComplex& c);

// "1 2; 3 4"; the empty facet prints as "{}", the void complex as "(void)".
std::string format_facets(const SimplicialComplex& c);

// Semicolon-separated 1-based vertex lists, e.g. "1 2; 3 4"; "{}" denotes
// the empty facet.  When n is not given it is the largest vertex mentioned.
SimplicialComplex parse_facets(const std::string& text, std::optional<int> n = {});

namespace detail {
// Berge dualization: all inclusion-minimal transversals of the hyperedges.
std::vector<VertexSet> minimal_transversals(int n, const std::vector<VertexSet>& edges);
// Subset-scan and dualization routes; the public entry points dispatch on n.
MonomialIdeal stanley_ideal_scan(const SimplicialComplex& c);
MonomialIdeal stanley_ideal_dual(const SimplicialComplex& c);
SimplicialComplex complex_of_ideal_scan(const MonomialIdeal& I);
SimplicialComplex complex_of_ideal_dual(const MonomialIdeal& I);
}  // namespace detail

}  // namespace freepairs
