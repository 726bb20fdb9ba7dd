#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "freepairs/complex.hpp"

namespace freepairs {

struct PrimePower {
    int p = 2;
    int e = 1;
    Exponent q = 2;  // p^e, cached

    // Validates primality (trial division) and the 2^62 cap on p^e.
    static PrimePower make(int p, int e);
};

// (b_1,...,b_s) with s >= 2, b_i >= 1; the partial sums B_k are strictly
// increasing and each part is at most total()-1.
class Composition {
public:
    static Composition of(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }

private:
    Composition(std::vector<int> parts, int total)
        : parts_(std::move(parts)), total_(total) {}
    std::vector<int> parts_;
    int total_ = 0;
};

// All 2^{e-1} - 1 compositions of e with at least two parts, in cut-mask
// order (deterministic).
std::vector<Composition> compositions_of(int e);

inline constexpr int kDefaultTruncationCap = 12;

// Thrown when an engine operation receives input whose complex has cone
// points; carries the relabeled core for recovery.
struct non_core_error : assumption_error {
    non_core_error(std::string message, VertexSet cone_points_, CoreDecomposition suggestion_,
                   std::optional<MonomialIdeal> core_ideal_)
        : assumption_error(std::move(message)),
          cone_points(cone_points_),
          suggestion(std::move(suggestion_)),
          core_ideal(std::move(core_ideal_)) {}

    VertexSet cone_points;
    CoreDecomposition suggestion;
    std::optional<MonomialIdeal> core_ideal;  // absent when the core has no vertices
};

// Variables dividing no generator; equals the cone-point set of the
// associated complex for squarefree proper nonzero ideals.
VertexSet missing_variables(const MonomialIdeal& I);

// Validates the standing assumptions: squarefree, proper, nonzero, core.
void require_core_input(const MonomialIdeal& I);

struct ColonDecomposition {
    MonomialIdeal full;  // (I^[q] : I)
    MonomialIdeal je;    // generators of full outside I^[q] + (x1...xn)^{q-1}
};

// Computes (I^[q] : I) and extracts J_e; asserts the decomposition
// full = I^[q] + J_e + (x1...xn)^{q-1} and fails loudly if it breaks.
ColonDecomposition colon_decomposition(const MonomialIdeal& I, const PrimePower& pp);

// Exponent q on f, q-1 off f ∪ g, 0 on g.
Monomial a_map(const FreePair& fp, int n, const PrimePower& pp);

// (supp_q(m), [n] \ supp(m)); m must have exponents in {0, q-1, q} with all
// three classes nonempty.
FreePair y_map(const Monomial& m, const PrimePower& pp);

// S_{(b_1,...,b_s)} in the Frobenius-shifted form:
// prod_k frobenius_power(colon(I^[p^{b_k}], I), p^{B_{k-1}}).
MonomialIdeal s_term(const MonomialIdeal& I, const Composition& c, int p);

// L_e: zero for e = 1, else the sum of s_term over all compositions of e.
MonomialIdeal l_truncation(const MonomialIdeal& I, const PrimePower& pp,
                           int e_cap = kDefaultTruncationCap);

struct GrowthRecord {
    int e = 0;
    Exponent q = 0;
    std::size_t je_generators = 0;
    std::size_t new_generators = 0;  // minimal generators of J_e outside L_e
};

struct GrowthProfile {
    int p = 2;
    int max_e = 0;
    std::size_t max_free_pair_bound = 0;
    std::vector<GrowthRecord> records;
};

GrowthProfile growth_profile(const MonomialIdeal& I, int p, int max_e,
                             int e_cap = kDefaultTruncationCap);

enum class Generation { principally_generated, infinitely_generated };

struct Classification {
    Generation verdict;
    MonomialIdeal je1;
    std::vector<FreePair> maximal_pairs;
};

// Principally generated iff J_1 = 0; cross-checked against the free-pair
// criterion, disagreement is surfaced as an error.
Classification classify(const MonomialIdeal& I, int p);

struct CorrespondenceReport {
    std::vector<std::pair<FreePair, Monomial>> matched;
    std::vector<FreePair> leftover_pairs;
    std::vector<Monomial> leftover_generators;
    std::size_t pair_count = 0;
    std::size_t generator_count = 0;
    bool ok = false;
};

// Matches maximal free pairs against the minimal generators of J_e via the
// two maps; ok iff the matching is a bijection with identity round trips and
// equal counts.
CorrespondenceReport verify_correspondence(const SimplicialComplex& complex,
                                           const PrimePower& pp);

}  // namespace freepairs
