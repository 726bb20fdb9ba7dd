#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freepairs/monomial.hpp"

namespace freepairs {

enum class CombineMode { sum, product, intersection };

// A monomial ideal held by its canonical minimal generating set: an antichain
// under divisibility, sorted in the canonical monomial order, no duplicates.
// The empty list is the zero ideal; the singleton {1} is the unit ideal.
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t arity);
    static MonomialIdeal unit_ideal(std::size_t arity);
    static MonomialIdeal principal(Monomial m);

    // Retains exactly the monomials not strictly divisible by another listed
    // monomial, deduplicated and canonically sorted.
    static MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> generators);

    std::size_t arity() const { return arity_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_squarefree() const;

    // Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const;
    // Ideal containment: other is a subideal of this.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(std::size_t arity, std::vector<Monomial> gens)
        : arity_(arity), gens_(std::move(gens)) {}

    std::size_t arity_;
    std::vector<Monomial> gens_;
};

// I+J (union of generators), I*J (pairwise products), or I∩J (pairwise lcms),
// each minimalized.
MonomialIdeal combine(const MonomialIdeal& a, const MonomialIdeal& b, CombineMode mode);

// Ideal generated by g^q for each generator g.
MonomialIdeal frobenius_power(const MonomialIdeal& I, Exponent q);

// (J : I) = ∩_{g in gens(I)} ideal{ lcm(h,g)/g : h in gens(J) }.  Colon by
// the zero ideal is rejected.
MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I);

// "x1*x3, x1*x4"; the zero ideal prints as "0", the unit ideal as "1".
std::string to_text(const MonomialIdeal& I);

// Comma-separated monomials; `0` is the zero ideal.  When arity is not given
// it is inferred as the largest variable index mentioned.
MonomialIdeal parse_ideal(const std::string& text, std::optional<std::size_t> arity = {});

}  // namespace freepairs
