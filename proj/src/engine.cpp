#include "freepairs/engine.hpp"

#include <algorithm>
#include <map>

namespace freepairs {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

non_core_error make_non_core_error_for_complex(const SimplicialComplex& c, VertexSet cone) {
    CoreDecomposition cd = core_decomposition(c);
    std::optional<MonomialIdeal> core_ideal;
    if (cd.core.vertex_count() >= 1 && !cd.core.is_void())
        core_ideal = stanley_ideal(cd.core);
    std::string msg = "input is not core: cone points " + format_vertex_set(cone) +
                      " lie in every facet; restrict to the core first (CLI: --core)";
    return non_core_error(std::move(msg), cone, std::move(cd), std::move(core_ideal));
}

// Shared body for the truncation sum; colons (I^[p^b] : I) are computed once
// per part value b and reused across compositions.
MonomialIdeal s_term_cached(const MonomialIdeal& I, const Composition& c, int p,
                            std::map<int, MonomialIdeal>& colon_cache) {
    MonomialIdeal term = MonomialIdeal::unit_ideal(I.arity());
    Exponent shift = 1;
    bool first = true;
    for (int b : c.parts()) {
        auto it = colon_cache.find(b);
        if (it == colon_cache.end()) {
            const Exponent qb = checked_pow(static_cast<Exponent>(p), b);
            it = colon_cache.emplace(b, colon(frobenius_power(I, qb), I)).first;
        }
        const MonomialIdeal factor = frobenius_power(it->second, shift);
        term = first ? factor : combine(term, factor, CombineMode::product);
        first = false;
        shift = checked_mul(shift, checked_pow(static_cast<Exponent>(p), b));
    }
    return term;
}

}  // namespace

PrimePower PrimePower::make(int p, int e) {
    if (!is_prime(p)) throw validation_error("p must be prime, got " + std::to_string(p));
    if (e < 1) throw validation_error("e must be >= 1, got " + std::to_string(e));
    PrimePower pp;
    pp.p = p;
    pp.e = e;
    pp.q = checked_pow(static_cast<Exponent>(p), e);
    return pp;
}

Composition Composition::of(std::vector<int> parts) {
    if (parts.size() < 2)
        throw validation_error("a composition needs at least two parts");
    int total = 0;
    for (int b : parts) {
        if (b < 1) throw validation_error("composition parts must be >= 1");
        total += b;
    }
    for (int b : parts)
        if (b > total - 1)
            throw validation_error("composition part " + std::to_string(b) +
                                   " exceeds the cap " + std::to_string(total - 1));
    return Composition(std::move(parts), total);
}

std::vector<Composition> compositions_of(int e) {
    std::vector<Composition> out;
    if (e < 2) return out;
    // Cut masks over the e-1 gaps; the empty mask is the one-part composition
    // (e), which is excluded.
    for (unsigned cuts = 1; cuts < (1u << (e - 1)); ++cuts) {
        std::vector<int> parts;
        int prev = 0;
        for (int gap = 1; gap < e; ++gap) {
            if ((cuts >> (gap - 1)) & 1u) {
                parts.push_back(gap - prev);
                prev = gap;
            }
        }
        parts.push_back(e - prev);
        out.push_back(Composition::of(std::move(parts)));
    }
    return out;
}

VertexSet missing_variables(const MonomialIdeal& I) {
    VertexSet used = 0;
    for (const Monomial& g : I.generators()) used |= support(g);
    return full_vertex_set(static_cast<int>(I.arity())) & ~used;
}

void require_core_input(const MonomialIdeal& I) {
    if (I.is_zero())
        throw validation_error("this operation needs a nonzero ideal");
    if (I.is_unit())
        throw validation_error("this operation needs a proper ideal, got the unit ideal");
    if (!I.is_squarefree())
        throw validation_error("this operation needs a squarefree ideal, got " + to_text(I));
    const VertexSet cone = missing_variables(I);
    if (cone != 0) throw make_non_core_error_for_complex(complex_of_ideal(I), cone);
}

ColonDecomposition colon_decomposition(const MonomialIdeal& I, const PrimePower& pp) {
    require_core_input(I);
    const std::size_t n = I.arity();
    const MonomialIdeal iq = frobenius_power(I, pp.q);
    const MonomialIdeal full = colon(iq, I);
    const MonomialIdeal base =
        combine(iq, MonomialIdeal::principal(uniform_monomial(n, pp.q - 1)), CombineMode::sum);

    std::vector<Monomial> je_gens;
    for (const Monomial& g : full.generators())
        if (!base.contains(g)) je_gens.push_back(g);
    MonomialIdeal je = MonomialIdeal::minimalize(n, std::move(je_gens));

    if (combine(base, je, CombineMode::sum) != full)
        throw assumption_error("colon decomposition identity failed for " + to_text(I) +
                               " at p=" + std::to_string(pp.p) + ", e=" + std::to_string(pp.e));
    return ColonDecomposition{full, std::move(je)};
}

Monomial a_map(const FreePair& fp, int n, const PrimePower& pp) {
    const VertexSet full = full_vertex_set(n);
    if (fp.f == 0 || fp.g == 0 || (fp.f & fp.g) != 0 || !is_subset(fp.f | fp.g, full))
        throw validation_error("free pair (" + format_vertex_set(fp.f) + ", " +
                               format_vertex_set(fp.g) + ") is not valid on " +
                               std::to_string(n) + " vertices");
    std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if ((fp.f >> v) & 1u)
            exps[static_cast<std::size_t>(v)] = pp.q;
        else if (((fp.g >> v) & 1u) == 0)
            exps[static_cast<std::size_t>(v)] = pp.q - 1;
    }
    return Monomial(static_cast<std::size_t>(n), std::move(exps));
}

FreePair y_map(const Monomial& m, const PrimePower& pp) {
    for (Exponent e : m.exponents())
        if (e != 0 && e != pp.q - 1 && e != pp.q)
            throw validation_error("monomial " + to_text(m) +
                                   " violates the exponent shape {0, q-1, q} at q=" +
                                   std::to_string(pp.q));
    const int n = static_cast<int>(m.arity());
    const VertexSet f = supp_k(m, pp.q);
    const VertexSet g = full_vertex_set(n) & ~support(m);
    const VertexSet middle = supp_k(m, pp.q - 1) & ~f;
    if (f == 0 || g == 0 || middle == 0)
        throw validation_error("monomial " + to_text(m) +
                               " violates the exponent shape: the classes q, q-1, 0 must all "
                               "be nonempty");
    return FreePair{f, g};
}

MonomialIdeal s_term(const MonomialIdeal& I, const Composition& c, int p) {
    require_core_input(I);
    if (!is_prime(p)) throw validation_error("p must be prime, got " + std::to_string(p));
    std::map<int, MonomialIdeal> cache;
    return s_term_cached(I, c, p, cache);
}

MonomialIdeal l_truncation(const MonomialIdeal& I, const PrimePower& pp, int e_cap) {
    require_core_input(I);
    if (pp.e > e_cap)
        throw validation_error("e=" + std::to_string(pp.e) + " exceeds the truncation cap " +
                               std::to_string(e_cap));
    if (pp.e == 1) return MonomialIdeal::zero(I.arity());
    std::map<int, MonomialIdeal> cache;
    MonomialIdeal acc = MonomialIdeal::zero(I.arity());
    for (const Composition& c : compositions_of(pp.e))
        acc = combine(acc, s_term_cached(I, c, pp.p, cache), CombineMode::sum);
    return acc;
}

GrowthProfile growth_profile(const MonomialIdeal& I, int p, int max_e, int e_cap) {
    require_core_input(I);
    if (max_e < 1) throw validation_error("max_e must be >= 1");
    GrowthProfile profile;
    profile.p = p;
    profile.max_e = max_e;
    profile.max_free_pair_bound = maximal_free_pairs(complex_of_ideal(I)).size();
    for (int e = 1; e <= max_e; ++e) {
        const PrimePower pp = PrimePower::make(p, e);
        const ColonDecomposition cd = colon_decomposition(I, pp);
        const MonomialIdeal le = l_truncation(I, pp, e_cap);
        std::size_t fresh = 0;
        for (const Monomial& g : cd.je.generators())
            if (!le.contains(g)) ++fresh;
        profile.records.push_back(GrowthRecord{e, pp.q, cd.je.generators().size(), fresh});
    }
    return profile;
}

Classification classify(const MonomialIdeal& I, int p) {
    const PrimePower pp = PrimePower::make(p, 1);
    const ColonDecomposition cd = colon_decomposition(I, pp);
    std::vector<FreePair> pairs = maximal_free_pairs(complex_of_ideal(I));

    const bool principal_by_ideal = cd.je.is_zero();
    const bool principal_by_pairs = pairs.empty();
    if (principal_by_ideal != principal_by_pairs)
        throw assumption_error(
            "classification criteria disagree on " + to_text(I) + ": J_1 " +
            (principal_by_ideal ? "is zero" : "has generators") + " but the complex has " +
            std::to_string(pairs.size()) + " maximal free pairs");

    return Classification{principal_by_ideal ? Generation::principally_generated
                                             : Generation::infinitely_generated,
                          cd.je, std::move(pairs)};
}

CorrespondenceReport verify_correspondence(const SimplicialComplex& complex,
                                           const PrimePower& pp) {
    if (complex.is_void())
        throw validation_error("correspondence is not defined on the void complex");
    if (complex.vertex_count() < 1)
        throw validation_error("correspondence needs at least one vertex");

    VertexSet cone = full_vertex_set(complex.vertex_count());
    for (VertexSet h : complex.facets()) cone &= h;
    if (cone != 0) throw make_non_core_error_for_complex(complex, cone);

    const int n = complex.vertex_count();
    const std::vector<FreePair> pairs = maximal_free_pairs(complex);
    const ColonDecomposition cd = colon_decomposition(stanley_ideal(complex), pp);
    const std::vector<Monomial>& gens = cd.je.generators();

    CorrespondenceReport report;
    report.pair_count = pairs.size();
    report.generator_count = gens.size();

    std::vector<char> used(gens.size(), 0);
    for (const FreePair& fp : pairs) {
        const Monomial m = a_map(fp, n, pp);
        bool matched = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (used[i] || !(gens[i] == m)) continue;
            bool round_trip = false;
            try {
                round_trip = y_map(gens[i], pp) == fp;
            } catch (const validation_error&) {
                round_trip = false;
            }
            if (round_trip) {
                used[i] = 1;
                report.matched.emplace_back(fp, m);
                matched = true;
            }
            break;
        }
        if (!matched) report.leftover_pairs.push_back(fp);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!used[i]) report.leftover_generators.push_back(gens[i]);

    report.ok = report.leftover_pairs.empty() && report.leftover_generators.empty() &&
                report.pair_count == report.generator_count;
    return report;
}

}  // namespace freepairs
