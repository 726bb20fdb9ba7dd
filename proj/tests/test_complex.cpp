#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "freepairs/complex.hpp"
#include "freepairs/engine.hpp"
#include "support.hpp"

using namespace freepairs;
using freepairs::testing::Rng;
using freepairs::testing::vs;
using freepairs::testing::worked_examples;

namespace {

SimplicialComplex cx(int n, std::initializer_list<VertexSet> facets) {
    return normalize_facets(n, std::vector<VertexSet>(facets));
}

// All antichains of nonempty subsets of [n], visited once each.
void for_each_antichain(int n, const std::function<void(const std::vector<VertexSet>&)>& fn) {
    std::vector<VertexSet> chosen;
    const VertexSet full = full_vertex_set(n);
    std::function<void(VertexSet)> rec = [&](VertexSet next) {
        if (!chosen.empty()) fn(chosen);
        for (VertexSet m = next; m <= full && m != 0; ++m) {
            bool comparable = false;
            for (VertexSet c : chosen) {
                if (is_subset(c, m) || is_subset(m, c)) {
                    comparable = true;
                    break;
                }
            }
            if (comparable) continue;
            chosen.push_back(m);
            rec(m + 1);
            chosen.pop_back();
        }
    };
    rec(1);
}

}  // namespace

TEST_CASE("normalize_facets") {
    CHECK(cx(4, {vs({1, 2}), vs({3, 4})}).facets() ==
          std::vector<VertexSet>{vs({1, 2}), vs({3, 4})});
    CHECK(cx(4, {vs({1, 2}), vs({1})}).facets() == std::vector<VertexSet>{vs({1, 2})});
    CHECK(cx(2, {}).is_void());
    CHECK(SimplicialComplex::empty_face_complex(2) != SimplicialComplex::void_complex(2));
    CHECK_THROWS_AS(normalize_facets(2, {vs({3})}), validation_error);
    CHECK_THROWS_AS(normalize_facets(40, {}), validation_error);
}

TEST_CASE("stanley ideal of the worked examples") {
    for (const auto& ex : worked_examples()) {
        const SimplicialComplex c = parse_facets(ex.facets_text, ex.n);
        CHECK(stanley_ideal(c) == parse_ideal(ex.ideal_text, static_cast<std::size_t>(ex.n)));
    }
    CHECK(stanley_ideal(SimplicialComplex::full_simplex(3)).is_zero());
    CHECK(stanley_ideal(SimplicialComplex::empty_face_complex(2)) == parse_ideal("x1, x2"));
    CHECK_THROWS_AS(stanley_ideal(SimplicialComplex::void_complex(2)), validation_error);
}

TEST_CASE("complex_of_ideal on the worked examples") {
    CHECK(complex_of_ideal(parse_ideal("x1*x3, x1*x2, x2*x4", std::size_t{4})) ==
          cx(4, {vs({1, 4}), vs({2, 3}), vs({3, 4})}));
    CHECK(complex_of_ideal(parse_ideal("x1*x5, x1*x6, x2*x5, x2*x6, x3*x5, x3*x6, x4*x5*x6")) ==
          cx(6, {vs({1, 2, 3, 4}), vs({4, 5}), vs({4, 6}), vs({5, 6})}));
    CHECK(complex_of_ideal(MonomialIdeal::zero(3)) == SimplicialComplex::full_simplex(3));
    CHECK(complex_of_ideal(parse_ideal("x1, x2, x3")) ==
          SimplicialComplex::empty_face_complex(3));
    CHECK_THROWS_AS(complex_of_ideal(MonomialIdeal::unit_ideal(2)), validation_error);
    CHECK_THROWS_AS(complex_of_ideal(parse_ideal("x1^2", std::size_t{2})), validation_error);
}

TEST_CASE("stanley round trip, exhaustive for small n") {
    for (int n = 1; n <= 5; ++n) {
        for_each_antichain(n, [&](const std::vector<VertexSet>& facets) {
            const SimplicialComplex c = normalize_facets(n, facets);
            CHECK(complex_of_ideal(stanley_ideal(c)) == c);
        });
        CHECK(complex_of_ideal(stanley_ideal(SimplicialComplex::empty_face_complex(n))) ==
              SimplicialComplex::empty_face_complex(n));
    }
}

TEST_CASE("stanley round trip, randomized n in {6,7}") {
    Rng rng(301);
    for (int trial = 0; trial < 500; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 6, 7);
        CHECK(complex_of_ideal(stanley_ideal(c)) == c);
    }
}

TEST_CASE("scan and dualization routes agree") {
    Rng rng(302);
    for (int trial = 0; trial < 200; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 2, 9);
        CHECK(detail::stanley_ideal_scan(c) == detail::stanley_ideal_dual(c));
        const MonomialIdeal I = testing::random_squarefree_ideal(rng, 2, 9);
        CHECK(detail::complex_of_ideal_scan(I) == detail::complex_of_ideal_dual(I));
    }
}

TEST_CASE("core decomposition") {
    SUBCASE("already core") {
        const auto cd = core_decomposition(cx(4, {vs({1, 3}), vs({2, 3}), vs({4})}));
        CHECK(cd.cone_points == 0);
        CHECK(cd.core == cx(4, {vs({1, 3}), vs({2, 3}), vs({4})}));
        CHECK(cd.kept_vertices == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("one cone point") {
        const auto cd = core_decomposition(cx(3, {vs({1, 2}), vs({1, 3})}));
        CHECK(cd.cone_points == vs({1}));
        CHECK(cd.core == cx(2, {vs({1}), vs({2})}));
        CHECK(cd.kept_vertices == std::vector<int>{1, 2});
    }
    SUBCASE("full simplex collapses to the empty-face complex") {
        const auto cd = core_decomposition(SimplicialComplex::full_simplex(3));
        CHECK(cd.cone_points == full_vertex_set(3));
        CHECK(cd.core == SimplicialComplex::empty_face_complex(0));
    }
    CHECK_THROWS_AS(core_decomposition(SimplicialComplex::void_complex(2)), validation_error);
}

TEST_CASE("closed star intersection") {
    const SimplicialComplex oaxaca = cx(6, {vs({1, 2, 3}), vs({1, 2, 6}), vs({3, 4, 5})});
    CHECK(closed_star_intersection(oaxaca, vs({1})) == vs({1, 2}));
    const SimplicialComplex three_edges = cx(4, {vs({1, 4}), vs({2, 3}), vs({3, 4})});
    CHECK(closed_star_intersection(three_edges, vs({3})) == vs({3}));
    CHECK(closed_star_intersection(three_edges, vs({1, 4})) == vs({1, 4}));
    CHECK_THROWS_AS(closed_star_intersection(three_edges, vs({1, 2})), validation_error);
    CHECK_THROWS_AS(closed_star_intersection(three_edges, VertexSet{0}), validation_error);
}

TEST_CASE("free pairs of the tetrahedron-with-triangle complex") {
    const SimplicialComplex c = cx(6, {vs({1, 2, 3, 4}), vs({4, 5}), vs({4, 6}), vs({5, 6})});
    const auto pairs = free_pairs(c);
    const FreePair included{vs({1, 2}), vs({3, 4})};
    const FreePair excluded{vs({4}), vs({1, 2, 3})};
    CHECK(std::find(pairs.begin(), pairs.end(), included) != pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(), excluded) == pairs.end());
    CHECK(free_pairs(cx(1, {vs({1})})).empty());
    CHECK(free_pairs(SimplicialComplex::void_complex(3)).empty());
    CHECK(free_pairs(SimplicialComplex::empty_face_complex(3)).empty());
}

TEST_CASE("pair order") {
    CHECK(pair_leq({vs({1, 2}), vs({3, 4})}, {vs({1}), vs({2, 3, 4})}));
    const FreePair a{vs({1}), vs({2})};
    CHECK(pair_leq(a, a));
    const FreePair b{vs({2}), vs({1})};
    CHECK_FALSE(pair_leq(a, b));
    CHECK_FALSE(pair_leq(b, a));
}

TEST_CASE("maximal free pairs of the worked examples") {
    for (const auto& ex : worked_examples()) {
        const SimplicialComplex c = parse_facets(ex.facets_text, ex.n);
        CHECK(maximal_free_pairs(c) == ex.expected_pairs);
    }
}

TEST_CASE("divisibility order law") {
    Rng rng(303);
    const PrimePower pp = PrimePower::make(2, 1);
    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 2, 7);
        const auto pairs = free_pairs(c);
        for (const FreePair& a : pairs) {
            for (const FreePair& b : pairs) {
                const Monomial ma = a_map(a, c.vertex_count(), pp);
                const Monomial mb = a_map(b, c.vertex_count(), pp);
                CHECK(pair_leq(a, b) == divides(mb, ma));
            }
        }
    }
}

TEST_CASE("free faces embed as free pairs") {
    Rng rng(304);
    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 2, 7);
        const auto pairs = free_pairs(c);
        for (VertexSet face : all_faces(c)) {
            if (face == 0) continue;
            // a free face lies in exactly one facet, which exceeds it by one
            VertexSet containing = 0;
            int count = 0;
            for (VertexSet h : c.facets()) {
                if (is_subset(face, h)) {
                    containing = h;
                    ++count;
                }
            }
            if (count != 1 || set_size(containing) != set_size(face) + 1) continue;
            const FreePair expected{face, containing & ~face};
            CHECK(std::find(pairs.begin(), pairs.end(), expected) != pairs.end());
        }
    }
}

TEST_CASE("free pairs sit inside links") {
    Rng rng(305);
    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 2, 7);
        for (const FreePair& p : free_pairs(c)) {
            CHECK(in_link(c, p.g, p.f));
            CHECK(in_link(c, p.f, p.g));
        }
    }
}

TEST_CASE("facet text round trip") {
    const SimplicialComplex c = parse_facets("1 2; 3 4");
    CHECK(c.vertex_count() == 4);
    CHECK(format_facets(c) == "1 2; 3 4");
    CHECK(parse_facets("3 4 ;1 2", 5).vertex_count() == 5);
    CHECK(parse_facets("{}", 2) == SimplicialComplex::empty_face_complex(2));
    CHECK(format_facets(SimplicialComplex::empty_face_complex(2)) == "{}");
    CHECK_THROWS_AS(parse_facets("1 2;; 3"), parse_error);
    CHECK_THROWS_AS(parse_facets("1 x; 3"), parse_error);
    CHECK_THROWS_AS(parse_facets("1 2", 1), validation_error);
    CHECK_THROWS_AS(parse_facets("{}"), parse_error);

    Rng rng(306);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplicialComplex random = testing::random_complex(rng, 1, 8);
        CHECK(parse_facets(format_facets(random), random.vertex_count()) == random);
    }
}
