#include "freepairs/ideal.hpp"

#include <algorithm>
#include <limits>

namespace freepairs {

namespace {

void check_arity(std::size_t arity) {
    if (arity < 1 || arity > static_cast<std::size_t>(kMaxVertices))
        throw validation_error("ideal arity must be between 1 and 32, got " +
                               std::to_string(arity));
}

void check_same_arity(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.arity() != b.arity())
        throw validation_error("ideal arity mismatch: " + std::to_string(a.arity()) + " vs " +
                               std::to_string(b.arity()));
}

Exponent saturating_degree(const Monomial& m) {
    Exponent d = 0;
    for (Exponent e : m.exponents()) {
        if (d > std::numeric_limits<Exponent>::max() - e)
            return std::numeric_limits<Exponent>::max();
        d += e;
    }
    return d;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(std::size_t arity) {
    check_arity(arity);
    return MonomialIdeal(arity, {});
}

MonomialIdeal MonomialIdeal::unit_ideal(std::size_t arity) {
    check_arity(arity);
    return MonomialIdeal(arity, {Monomial(arity)});
}

MonomialIdeal MonomialIdeal::principal(Monomial m) {
    const std::size_t arity = m.arity();
    return MonomialIdeal(arity, {std::move(m)});
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t arity, std::vector<Monomial> generators) {
    check_arity(arity);
    for (const Monomial& g : generators)
        if (g.arity() != arity)
            throw validation_error("generator arity " + std::to_string(g.arity()) +
                                   " does not match ideal arity " + std::to_string(arity));

    // Divisors have strictly smaller total degree, so a degree-ordered single
    // pass against the kept antichain suffices.
    std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
        const Exponent da = saturating_degree(a), db = saturating_degree(b);
        if (da != db) return da < db;
        return canonical_less(a, b);
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<Monomial> kept;
    for (const Monomial& m : generators) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (divides(k, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return MonomialIdeal(arity, std::move(kept));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.max_exponent() <= 1; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.arity() != arity_)
        throw validation_error("monomial arity " + std::to_string(m.arity()) +
                               " does not match ideal arity " + std::to_string(arity_));
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_arity(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal combine(const MonomialIdeal& a, const MonomialIdeal& b, CombineMode mode) {
    check_same_arity(a, b);
    std::vector<Monomial> gens;
    switch (mode) {
        case CombineMode::sum:
            gens = a.generators();
            gens.insert(gens.end(), b.generators().begin(), b.generators().end());
            break;
        case CombineMode::product:
            gens.reserve(a.generators().size() * b.generators().size());
            for (const Monomial& g : a.generators())
                for (const Monomial& h : b.generators()) gens.push_back(g * h);
            break;
        case CombineMode::intersection:
            gens.reserve(a.generators().size() * b.generators().size());
            for (const Monomial& g : a.generators())
                for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
            break;
    }
    return MonomialIdeal::minimalize(a.arity(), std::move(gens));
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, Exponent q) {
    if (q < 1) throw validation_error("Frobenius power exponent must be >= 1");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) gens.push_back(power(g, q));
    return MonomialIdeal::minimalize(I.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I) {
    check_same_arity(J, I);
    if (I.is_zero()) throw validation_error("colon by the zero ideal");
    MonomialIdeal result = MonomialIdeal::unit_ideal(J.arity());
    for (const Monomial& g : I.generators()) {
        std::vector<Monomial> quotients;
        quotients.reserve(J.generators().size());
        for (const Monomial& h : J.generators()) quotients.push_back(colon_quotient(h, g));
        result = combine(result, MonomialIdeal::minimalize(J.arity(), std::move(quotients)),
                         CombineMode::intersection);
    }
    return result;
}

std::string to_text(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += to_text(g);
    }
    return out;
}

MonomialIdeal parse_ideal(const std::string& text, std::optional<std::size_t> arity) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) throw parse_error("empty ideal");

    if (arity) check_arity(*arity);

    if (stripped == "0") {
        if (!arity) throw parse_error("the zero ideal needs an explicit variable count (--n)");
        return MonomialIdeal::zero(*arity);
    }

    std::vector<std::map<std::size_t, Exponent>> factor_maps;
    std::size_t max_var = 0;
    bool any_var = false;
    std::size_t pos = 0;
    while (pos <= stripped.size()) {
        std::size_t comma = stripped.find(',', pos);
        std::string tok =
            stripped.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? stripped.size() + 1 : comma + 1;
        factor_maps.push_back(detail::parse_monomial_factors(tok));
        for (const auto& [var, exp] : factor_maps.back()) {
            (void)exp;
            max_var = std::max(max_var, var + 1);
            any_var = true;
        }
    }

    std::size_t n;
    if (arity) {
        n = *arity;
        if (any_var && max_var > n)
            throw validation_error("variable x" + std::to_string(max_var) + " exceeds arity " +
                                   std::to_string(n));
    } else {
        if (!any_var)
            throw parse_error("cannot infer the variable count of '" + text + "'; pass --n");
        n = max_var;
    }

    std::vector<Monomial> gens;
    gens.reserve(factor_maps.size());
    for (const auto& fm : factor_maps) {
        std::vector<Exponent> exps(n, 0);
        for (const auto& [var, exp] : fm) exps[var] = exp;
        gens.emplace_back(n, std::move(exps));
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace freepairs
