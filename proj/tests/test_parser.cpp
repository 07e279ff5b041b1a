#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperalg/checks.hpp"
#include "hyperalg/parser.hpp"

using namespace halg;

TEST_CASE("atoms") {
    CHECK(parse_element("1", 3) == Element::unit(3));
    CHECK(parse_element("0", 3) == Element::zero(3));
    CHECK(parse_element("X(2)", 3) == Element::x_dp(2, 3));
    CHECK(parse_element("Y(1)", 5) == Element::y_dp(1, 5));
    CHECK(parse_element("H(4)", 5) == Element::h_binom(4, 5));
    CHECK(parse_element("mu(0)", 2) == mu(0, 1, 2));
    CHECK(parse_element("mu(2,2)", 3) == mu(2, 2, 3));
    CHECK(parse_element("E(1:0)", 3) == e_idempotent({make_pair(1, 0, 3)}, 3));
    CHECK(parse_element("B(01;0:0,1:2)", 3) ==
          b_element({0, 1}, {make_pair(0, 0, 3), make_pair(1, 2, 3)}, 3));
}

TEST_CASE("expressions") {
    CHECK(parse_element("2*X(1)", 5) == Element::x_dp(1, 5).scaled(2));
    CHECK(parse_element("X(1)*Y(1)", 3) ==
          Element::monomial({1, 0, 1}, 1, 3) + Element::h_binom(1, 3));
    CHECK(parse_element("X(1) + Y(1)", 3) ==
          Element::x_dp(1, 3) + Element::y_dp(1, 3));
    CHECK(parse_element("(X(1) + Y(1)) * H(1)", 3) ==
          (Element::x_dp(1, 3) + Element::y_dp(1, 3)) * Element::h_binom(1, 3));
    CHECK(parse_element("mu(1)*Y(1)*X(1)", 2) == b1(0, make_pair(1, 0, 2), 2));
    CHECK(parse_element("  3 * H( 2 ) ", 5) == Element::h_binom(2, 5).scaled(3));
}

TEST_CASE("round-trips the canonical form") {
    std::mt19937_64 rng(31);
    for (uint32_t p : {2u, 3u, 5u})
        for (int i = 0; i < 40; ++i) {
            Element e = random_ur_element(p, 2, 5, rng);
            CHECK(parse_element(e.to_string(), p) == e);
        }
    CHECK(parse_element(Element::zero(3).to_string(), 3) == Element::zero(3));
}

TEST_CASE("errors carry a position") {
    CHECK_THROWS_AS(parse_element("X(", 3), ParseError);
    CHECK_THROWS_AS(parse_element("Q(1)", 3), ParseError);
    CHECK_THROWS_AS(parse_element("X(1) +", 3), ParseError);
    CHECK_THROWS_AS(parse_element("X(1) X(2)", 3), ParseError);
    CHECK_THROWS_AS(parse_element("E(0:1)", 3), ParseError);  // pair not in P at p=3
    CHECK_THROWS_AS(parse_element("B(0;0:0,1:2)", 3), ParseError);  // length mismatch
    try {
        parse_element("X(1) + Q(2)", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 7);
    }
}
