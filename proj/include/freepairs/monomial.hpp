#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freepairs/errors.hpp"
#include "freepairs/vertex_set.hpp"

namespace freepairs {

using Exponent = std::uint64_t;

// Checked 64-bit arithmetic; throws validation_error on overflow.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
// base^exp, rejected when the result would exceed 2^62.
Exponent checked_pow(Exponent base, int exp);

// A monomial in x1..xn with exact nonnegative 64-bit exponents.  Immutable;
// the all-zero tuple is the unit monomial.
class Monomial {
public:
    // The unit monomial of the given arity.
    explicit Monomial(std::size_t arity);
    Monomial(std::size_t arity, std::vector<Exponent> exponents);

    std::size_t arity() const { return exponents_.size(); }
    Exponent exponent(std::size_t var) const { return exponents_[var]; }
    const std::vector<Exponent>& exponents() const { return exponents_; }

    bool is_unit() const;
    Exponent max_exponent() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exponents_;
};

// Componentwise comparison: true iff a | b.
bool divides(const Monomial& a, const Monomial& b);

// Componentwise maximum.
Monomial lcm(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& m, Exponent q);

// lcm(h, g) / g, i.e. h / gcd(h, g): exponentwise max(h_i - g_i, 0).
Monomial colon_quotient(const Monomial& h, const Monomial& g);

// {i : exponent_i(m) >= k}; supp_0 = [n], supp_1 = support.
VertexSet supp_k(const Monomial& m, Exponent k);
VertexSet support(const Monomial& m);

// prod_{i in s} x_i
Monomial squarefree_monomial(std::size_t arity, VertexSet s);
// (x1...xn)^k
Monomial uniform_monomial(std::size_t arity, Exponent k);

// Canonical order: lexicographic on exponent tuples, descending.
bool canonical_less(const Monomial& a, const Monomial& b);

// "x1^2*x3*x4"; the unit monomial prints as "1".
std::string to_text(const Monomial& m);

// Parses the factor syntax `x<i>[^<k>]` joined by `*`; `1` is the unit
// monomial; whitespace is ignored; repeated variables accumulate.
Monomial parse_monomial(const std::string& text, std::size_t arity);

namespace detail {
// 0-based variable -> accumulated exponent; shared with the ideal parser for
// arity inference.
std::map<std::size_t, Exponent> parse_monomial_factors(const std::string& text);
}  // namespace detail

}  // namespace freepairs
