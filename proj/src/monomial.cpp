#include "freepairs/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace freepairs {

namespace {

constexpr Exponent kPowCap = Exponent{1} << 62;

void check_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity())
        throw validation_error("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                               std::to_string(b.arity()));
}

}  // namespace

Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r)) throw validation_error("exponent overflow in addition");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw validation_error("exponent overflow in multiplication");
    return r;
}

Exponent checked_pow(Exponent base, int exp) {
    if (exp < 0) throw validation_error("negative exponent");
    Exponent r = 1;
    for (int i = 0; i < exp; ++i) {
        r = checked_mul(r, base);
        if (r > kPowCap)
            throw validation_error("power " + std::to_string(base) + "^" + std::to_string(exp) +
                                   " exceeds the 2^62 cap");
    }
    return r;
}

Monomial::Monomial(std::size_t arity) : exponents_(arity, 0) {
    if (arity < 1 || arity > static_cast<std::size_t>(kMaxVertices))
        throw validation_error("monomial arity must be between 1 and 32, got " +
                               std::to_string(arity));
}

Monomial::Monomial(std::size_t arity, std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)) {
    if (arity < 1 || arity > static_cast<std::size_t>(kMaxVertices))
        throw validation_error("monomial arity must be between 1 and 32, got " +
                               std::to_string(arity));
    if (exponents_.size() != arity)
        throw validation_error("exponent tuple length " + std::to_string(exponents_.size()) +
                               " does not match arity " + std::to_string(arity));
}

bool Monomial::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

Exponent Monomial::max_exponent() const {
    return *std::max_element(exponents_.begin(), exponents_.end());
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    std::vector<Exponent> exps(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        exps[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(a.arity(), std::move(exps));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    std::vector<Exponent> exps(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        exps[i] = checked_add(a.exponent(i), b.exponent(i));
    return Monomial(a.arity(), std::move(exps));
}

Monomial power(const Monomial& m, Exponent q) {
    std::vector<Exponent> exps(m.arity());
    for (std::size_t i = 0; i < m.arity(); ++i) exps[i] = checked_mul(m.exponent(i), q);
    return Monomial(m.arity(), std::move(exps));
}

Monomial colon_quotient(const Monomial& h, const Monomial& g) {
    check_same_arity(h, g);
    std::vector<Exponent> exps(h.arity());
    for (std::size_t i = 0; i < h.arity(); ++i)
        exps[i] = h.exponent(i) > g.exponent(i) ? h.exponent(i) - g.exponent(i) : 0;
    return Monomial(h.arity(), std::move(exps));
}

VertexSet supp_k(const Monomial& m, Exponent k) {
    if (k == 0) return full_vertex_set(static_cast<int>(m.arity()));
    VertexSet s = 0;
    for (std::size_t i = 0; i < m.arity(); ++i)
        if (m.exponent(i) >= k) s |= VertexSet{1} << i;
    return s;
}

VertexSet support(const Monomial& m) { return supp_k(m, 1); }

Monomial squarefree_monomial(std::size_t arity, VertexSet s) {
    std::vector<Exponent> exps(arity, 0);
    for (std::size_t i = 0; i < arity; ++i)
        if (s & (VertexSet{1} << i)) exps[i] = 1;
    return Monomial(arity, std::move(exps));
}

Monomial uniform_monomial(std::size_t arity, Exponent k) {
    return Monomial(arity, std::vector<Exponent>(arity, k));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

std::string to_text(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        const Exponent e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

namespace detail {

std::map<std::size_t, Exponent> parse_monomial_factors(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty monomial");

    std::map<std::size_t, Exponent> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t star = s.find('*', pos);
        std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = star == std::string::npos ? s.size() : star + 1;
        if (tok.empty()) throw parse_error("empty factor in monomial '" + text + "'");
        if (tok == "1") continue;
        if (tok[0] != 'x') throw parse_error("bad factor '" + tok + "', expected x<i>[^<k>]");

        std::size_t caret = tok.find('^');
        std::string var_digits = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (var_digits.empty() ||
            !std::all_of(var_digits.begin(), var_digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw parse_error("bad variable index in '" + tok + "'");
        unsigned long long var = std::stoull(var_digits);
        if (var < 1 || var > static_cast<unsigned long long>(kMaxVertices))
            throw parse_error("variable index " + var_digits + " out of range [1, 32]");

        Exponent exp = 1;
        if (caret != std::string::npos) {
            std::string exp_digits = tok.substr(caret + 1);
            if (exp_digits.empty() ||
                !std::all_of(exp_digits.begin(), exp_digits.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw parse_error("bad exponent in '" + tok + "'");
            try {
                exp = std::stoull(exp_digits);
            } catch (const std::out_of_range&) {
                throw parse_error("exponent out of range in '" + tok + "'");
            }
        }
        const std::size_t var0 = static_cast<std::size_t>(var - 1);
        factors[var0] = checked_add(factors.count(var0) ? factors[var0] : 0, exp);
    }
    return factors;
}

}  // namespace detail

Monomial parse_monomial(const std::string& text, std::size_t arity) {
    auto factors = detail::parse_monomial_factors(text);
    std::vector<Exponent> exps(arity, 0);
    for (const auto& [var, exp] : factors) {
        if (var >= arity)
            throw validation_error("variable x" + std::to_string(var + 1) + " exceeds arity " +
                                   std::to_string(arity));
        exps[var] = exp;
    }
    return Monomial(arity, std::move(exps));
}

}  // namespace freepairs
