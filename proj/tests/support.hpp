// Shared test helpers: deterministic random generators for monomials,
// ideals, and complexes.
#pragma once

#include <random>
#include <vector>

#include "freepairs/complex.hpp"
#include "freepairs/engine.hpp"

namespace freepairs::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Monomial random_monomial(Rng& rng, std::size_t n, Exponent max_exp) {
    std::vector<Exponent> exps(n);
    for (auto& e : exps)
        e = static_cast<Exponent>(rand_int(rng, 0, static_cast<int>(max_exp)));
    return Monomial(n, std::move(exps));
}

inline MonomialIdeal random_ideal(Rng& rng, std::size_t n, Exponent max_exp, int max_gens) {
    std::vector<Monomial> gens;
    const int k = rand_int(rng, 0, max_gens);
    for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, n, max_exp));
    return MonomialIdeal::minimalize(n, std::move(gens));
}

inline VertexSet random_nonempty_subset(Rng& rng, int n) {
    const VertexSet full = full_vertex_set(n);
    VertexSet s = 0;
    while (s == 0)
        s = static_cast<VertexSet>(rng()) & full;
    return s;
}

// Nonzero proper squarefree ideal on n variables.
inline MonomialIdeal random_squarefree_ideal(Rng& rng, int min_n, int max_n) {
    while (true) {
        const int n = rand_int(rng, min_n, max_n);
        std::vector<Monomial> gens;
        const int k = rand_int(rng, 1, 5);
        for (int i = 0; i < k; ++i) {
            VertexSet s = random_nonempty_subset(rng, n);
            gens.push_back(squarefree_monomial(static_cast<std::size_t>(n), s));
        }
        MonomialIdeal ideal = MonomialIdeal::minimalize(static_cast<std::size_t>(n), gens);
        if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
    }
}

// Non-void complex with antichain facets (possibly with cone points).
inline SimplicialComplex random_complex(Rng& rng, int min_n, int max_n) {
    const int n = rand_int(rng, min_n, max_n);
    std::vector<VertexSet> raw;
    const int k = rand_int(rng, 1, 5);
    for (int i = 0; i < k; ++i) raw.push_back(random_nonempty_subset(rng, n));
    return normalize_facets(n, raw);
}

// Non-void complex whose facets intersect trivially (no cone points), so the
// Stanley ideal is a valid engine input.
inline SimplicialComplex random_core_complex(Rng& rng, int min_n, int max_n) {
    while (true) {
        SimplicialComplex c = random_complex(rng, min_n, max_n);
        VertexSet cone = full_vertex_set(c.vertex_count());
        for (VertexSet h : c.facets()) cone &= h;
        if (cone == 0) return c;
    }
}

// Maximality filter straight from the order definition; used to cross-check
// maximal_free_pairs against the brute-force pair set.
inline std::vector<FreePair> brute_maximal(const std::vector<FreePair>& pairs) {
    std::vector<FreePair> out;
    for (const FreePair& p : pairs) {
        bool dominated = false;
        for (const FreePair& q : pairs) {
            if (!(p == q) && pair_leq(p, q)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), pair_canonical_less);
    return out;
}

// The six worked complexes used throughout the tests, with their Stanley
// ideals and expected maximal free pairs.
struct WorkedExample {
    const char* name;
    int n;
    const char* facets_text;
    const char* ideal_text;
    std::vector<FreePair> expected_pairs;
};

inline VertexSet vs(std::initializer_list<int> vertices) {
    VertexSet s = 0;
    for (int v : vertices) s |= VertexSet{1} << (v - 1);
    return s;
}

inline const std::vector<WorkedExample>& worked_examples() {
    static const std::vector<WorkedExample> cases = {
        {"two-disjoint-edges", 4, "1 2; 3 4", "x1*x3, x1*x4, x2*x3, x2*x4",
         {{vs({1}), vs({2})}, {vs({2}), vs({1})}, {vs({3}), vs({4})}, {vs({4}), vs({3})}}},
        {"three-edges", 4, "1 4; 2 3; 3 4", "x1*x2, x1*x3, x2*x4",
         {{vs({1}), vs({4})}, {vs({2}), vs({3})}}},
        {"tetrahedron-with-triangle", 6, "1 2 3 4; 4 5; 4 6; 5 6",
         "x1*x5, x1*x6, x2*x5, x2*x6, x3*x5, x3*x6, x4*x5*x6",
         {{vs({1}), vs({2, 3, 4})}, {vs({2}), vs({1, 3, 4})}, {vs({3}), vs({1, 2, 4})}}},
        {"triangle-with-legs", 5, "1 2 3; 2 4; 3 5",
         "x1*x4, x1*x5, x2*x5, x3*x4, x4*x5",
         {{vs({1}), vs({2, 3})},
          {vs({2, 3}), vs({1})},
          {vs({4}), vs({2})},
          {vs({5}), vs({3})}}},
        {"two-triangles-shared-edge", 6, "1 2 3; 1 2 6; 3 4 5",
         "x1*x4, x1*x5, x2*x4, x2*x5, x3*x6, x4*x6, x5*x6",
         {{vs({1}), vs({2})},
          {vs({2}), vs({1})},
          {vs({4}), vs({3, 5})},
          {vs({5}), vs({3, 4})},
          {vs({6}), vs({1, 2})}}},
        {"two-edges-and-a-point", 4, "1 3; 2 3; 4", "x1*x2, x1*x4, x2*x4, x3*x4",
         {{vs({1}), vs({3})}, {vs({2}), vs({3})}}},
    };
    return cases;
}

}  // namespace freepairs::testing
