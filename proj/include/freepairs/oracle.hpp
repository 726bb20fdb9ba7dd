#pragma once

#include <functional>
#include <vector>

#include "freepairs/engine.hpp"

namespace freepairs::oracle {

// Brute-force free-pair enumeration straight from the definition: every
// disjoint nonempty (f, g) is tested with inline facet scans, sharing no
// shortcut with free_pairs.  Capped at n <= 14.
std::vector<FreePair> brute_free_pairs(const SimplicialComplex& c);

// Exhaustive minimal-element search: all monomials with exponents <= bound
// satisfying member such that no proper divisor satisfies it.  Capped at
// n <= 5, bound <= 9.
std::vector<Monomial> brute_minimal_generators(
    std::size_t n, Exponent bound, const std::function<bool(const Monomial&)>& member);

// J_{b_1} * J_{b_2}^[p^{b_1}] * ... * J_{b_s}^[p^{b_1+...+b_{s-1}}]; a zero
// factor yields the zero ideal.
MonomialIdeal product_chain(const MonomialIdeal& I, const Composition& c, int p);

}  // namespace freepairs::oracle
