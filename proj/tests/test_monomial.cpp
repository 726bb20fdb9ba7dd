#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freepairs/monomial.hpp"
#include "support.hpp"

using namespace freepairs;
using freepairs::testing::Rng;
using freepairs::testing::random_monomial;

namespace {
Monomial mono(std::initializer_list<Exponent> exps) {
    return Monomial(exps.size(), std::vector<Exponent>(exps));
}
}  // namespace

TEST_CASE("divides is componentwise") {
    CHECK(divides(mono({1, 1, 0}), mono({2, 1, 0})));
    CHECK(divides(Monomial(3), mono({5, 0, 7})));  // unit divides everything
    // the two generator shapes from the four-vertex worked example
    CHECK_FALSE(divides(mono({2, 0, 1, 1}), mono({1, 1, 2, 0})));
    CHECK_THROWS_AS(divides(Monomial(2), Monomial(3)), validation_error);
}

TEST_CASE("lcm is componentwise max") {
    CHECK(lcm(mono({2, 1}), mono({0, 3})) == mono({2, 3}));
    const Monomial m = mono({1, 0, 2});
    CHECK(lcm(m, m) == m);
    CHECK(lcm(mono({1, 0, 1, 0}), mono({1, 0, 0, 1})) == mono({1, 0, 1, 1}));
}

TEST_CASE("supp_k thresholds") {
    const Monomial m = mono({2, 0, 1, 1});  // x1^2*x3*x4
    CHECK(supp_k(m, 2) == testing::vs({1}));
    CHECK(supp_k(m, 1) == testing::vs({1, 3, 4}));
    CHECK(supp_k(m, 0) == full_vertex_set(4));
    CHECK(support(mono({0, 0})) == 0);
}

TEST_CASE("divisibility antisymmetry and lcm bounds") {
    Rng rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 6));
        const Monomial a = random_monomial(rng, n, 4);
        const Monomial b = random_monomial(rng, n, 4);
        if (divides(a, b) && divides(b, a)) CHECK(a == b);
        const Monomial l = lcm(a, b);
        CHECK(divides(a, l));
        CHECK(divides(b, l));
        // l divides any common multiple
        const Monomial common = lcm(l, random_monomial(rng, n, 4));
        if (divides(a, common) && divides(b, common)) CHECK(divides(l, common));
    }
}

TEST_CASE("supp_k is monotone in k") {
    Rng rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 8));
        const Monomial m = random_monomial(rng, n, 5);
        for (Exponent k = 1; k <= 5; ++k)
            CHECK(is_subset(supp_k(m, k), supp_k(m, k - 1)));
    }
}

TEST_CASE("checked arithmetic rejects overflow") {
    CHECK(checked_pow(2, 10) == 1024);
    CHECK_THROWS_AS(checked_pow(2, 63), validation_error);
    CHECK_THROWS_AS(checked_mul(Exponent{1} << 62, 4), validation_error);
    CHECK_THROWS_AS(checked_add(~Exponent{0}, 1), validation_error);
    CHECK_THROWS_AS(power(mono({Exponent{1} << 40}), Exponent{1} << 40), validation_error);
}

TEST_CASE("canonical order is descending lex") {
    std::vector<Monomial> ms = {mono({1, 1, 2, 0}), mono({2, 0, 2, 0}), mono({2, 0, 1, 1})};
    std::sort(ms.begin(), ms.end(), canonical_less);
    CHECK(ms[0] == mono({2, 0, 2, 0}));
    CHECK(ms[1] == mono({2, 0, 1, 1}));
    CHECK(ms[2] == mono({1, 1, 2, 0}));
}

TEST_CASE("text round trip") {
    CHECK(to_text(mono({2, 0, 1, 1})) == "x1^2*x3*x4");
    CHECK(to_text(Monomial(3)) == "1");
    CHECK(parse_monomial("x1^2*x3*x4", 4) == mono({2, 0, 1, 1}));
    CHECK(parse_monomial("  x2 * x2 ^ 2 ", 3) == mono({0, 3, 0}));
    CHECK(parse_monomial("1", 2) == Monomial(2));

    Rng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::rand_int(rng, 1, 7));
        const Monomial m = random_monomial(rng, n, 6);
        CHECK(parse_monomial(to_text(m), n) == m);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_monomial("", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x0", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("y2", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1^", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1**x2", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x4", 3), validation_error);
    CHECK_THROWS_AS(parse_monomial("x1^99999999999999999999", 3), parse_error);
}

TEST_CASE("arity validation") {
    CHECK_THROWS_AS(Monomial(0), validation_error);
    CHECK_THROWS_AS(Monomial(33), validation_error);
    CHECK_THROWS_AS(Monomial(3, {1, 2}), validation_error);
}
