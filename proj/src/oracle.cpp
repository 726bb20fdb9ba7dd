#include "freepairs/oracle.hpp"

#include <algorithm>
#include <map>

namespace freepairs::oracle {

std::vector<FreePair> brute_free_pairs(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    if (n > 14)
        throw validation_error("brute_free_pairs is capped at n <= 14, got " + std::to_string(n));
    std::vector<FreePair> out;
    if (c.is_void()) return out;

    const VertexSet full = full_vertex_set(n);
    const std::vector<VertexSet>& facets = c.facets();
    for (VertexSet f = 1; f != 0 && f <= full; ++f) {
        VertexSet star = full;
        bool f_in_some_facet = false;
        for (VertexSet h : facets) {
            if ((f & ~h) == 0) {
                star &= h;
                f_in_some_facet = true;
            }
        }
        if (!f_in_some_facet) continue;

        const VertexSet rest = full & ~f;
        for (VertexSet g = rest; g != 0; g = (g - 1) & rest) {
            const VertexSet u = f | g;
            bool u_is_face = false;
            for (VertexSet h : facets) {
                if ((u & ~h) == 0) {
                    u_is_face = true;
                    break;
                }
            }
            if (u_is_face && u == star) out.push_back({f, g});
        }
    }
    std::sort(out.begin(), out.end(), pair_canonical_less);
    return out;
}

std::vector<Monomial> brute_minimal_generators(
    std::size_t n, Exponent bound, const std::function<bool(const Monomial&)>& member) {
    if (n < 1 || n > 5)
        throw validation_error("brute_minimal_generators is capped at n <= 5, got " +
                               std::to_string(n));
    if (bound > 9)
        throw validation_error("brute_minimal_generators is capped at bound <= 9, got " +
                               std::to_string(bound));

    const std::size_t side = static_cast<std::size_t>(bound) + 1;
    std::size_t total = 1;
    std::vector<std::size_t> stride(n);
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = total;
        total *= side;
    }

    // satisfied_below[idx] : some divisor (possibly the monomial itself)
    // satisfies member.  Ascending index order visits divisors first.
    std::vector<char> satisfied_below(total, 0);
    std::vector<Monomial> out;
    std::vector<Exponent> exps(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const Monomial m(n, exps);
        const bool is_member = member(m);
        bool below = false;
        bool divisor_satisfies = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (exps[i] == 0) continue;
            if (satisfied_below[idx - stride[i]]) {
                below = true;
                divisor_satisfies = true;
                break;
            }
        }
        satisfied_below[idx] = static_cast<char>(is_member || below);
        if (is_member && !divisor_satisfies) out.push_back(m);

        for (std::size_t i = 0; i < n; ++i) {
            if (++exps[i] <= bound) break;
            exps[i] = 0;
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

MonomialIdeal product_chain(const MonomialIdeal& I, const Composition& c, int p) {
    std::map<int, MonomialIdeal> je_by_part;
    MonomialIdeal acc = MonomialIdeal::unit_ideal(I.arity());
    Exponent shift = 1;
    bool first = true;
    for (int b : c.parts()) {
        auto it = je_by_part.find(b);
        if (it == je_by_part.end())
            it = je_by_part.emplace(b, colon_decomposition(I, PrimePower::make(p, b)).je).first;
        const MonomialIdeal factor = frobenius_power(it->second, shift);
        acc = first ? factor : combine(acc, factor, CombineMode::product);
        first = false;
        shift = checked_mul(shift, checked_pow(static_cast<Exponent>(p), b));
    }
    return acc;
}

}  // namespace freepairs::oracle
