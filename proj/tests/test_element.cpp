#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperalg/checks.hpp"
#include "hyperalg/element.hpp"

using namespace halg;

TEST_CASE("unity and zero") {
    Element one = Element::unit(3);
    Element z = Element::zero(3);
    CHECK(z.is_zero());
    CHECK(one * one == one);
    Element e = Element::monomial({2, 1, 0}, 2, 3);
    CHECK(one * e == e);
    CHECK(e * one == e);
    CHECK(e + z == e);
    CHECK(e - e == z);
    CHECK_THROWS_AS(Element(4), std::invalid_argument);
}

TEST_CASE("straightening examples") {
    // [X, Y] = H: X^(1) Y^(1) = Y^(1) X^(1) + binom(H,1)
    for (uint32_t p : {2u, 3u, 5u}) {
        Element lhs = Element::x_dp(1, p) * Element::y_dp(1, p);
        Element rhs = Element::monomial({1, 0, 1}, 1, p) + Element::h_binom(1, p);
        CHECK(lhs == rhs);
    }
    // X^(1) X^(1) = binom(2,1) X^(2) = 2 X^(2)
    CHECK((Element::x_dp(1, 2) * Element::x_dp(1, 2)).is_zero());
    CHECK(Element::x_dp(1, 3) * Element::x_dp(1, 3) ==
          Element::monomial({0, 0, 2}, 2, 3));
    // X^(1) binom(H,1) = binom(H-2, 1) X^(1) = (binom(H,1) - 2) X^(1)
    Element lhs = Element::x_dp(1, 5) * Element::h_binom(1, 5);
    Element rhs = Element::monomial({0, 1, 1}, 1, 5) + Element::monomial({0, 0, 1}, 3, 5);
    CHECK(lhs == rhs);
    // binom(H,1) X^(1) is already in PBW order
    CHECK(Element::h_binom(1, 5) * Element::x_dp(1, 5) ==
          Element::monomial({0, 1, 1}, 1, 5));
}

TEST_CASE("ordinary powers") {
    // X^2 = 2 X^(2)
    CHECK(Element::x_pow(2, 5) == Element::monomial({0, 0, 2}, 2, 5));
    CHECK(Element::x_pow(0, 3) == Element::unit(3));
    Element x = Element::x_dp(1, 7);
    CHECK(Element::x_pow(3, 7) == x * x * x);
    CHECK_THROWS(Element::x_pow(5, 5));
}

TEST_CASE("h_shifted_binom matches integer evaluation") {
    // binom(H+c, n) mu_a-eigenvalue check is downstream; here compare
    // against direct Vandermonde on binom(H,1) at p=5, c=2, n=2:
    // binom(H+2,2) = binom(2,2) + binom(2,1)binom(H,1) + binom(H,2)
    Element e = Element::h_shifted_binom(2, 2, 5);
    Element want = Element::unit(5) + Element::h_binom(1, 5).scaled(2) +
                   Element::h_binom(2, 5);
    CHECK(e == want);
    CHECK(Element::h_shifted_binom(0, 3, 5) == Element::h_binom(3, 5));
}

TEST_CASE("degree components") {
    Element e = Element::monomial({2, 1, 2}, 1, 3);
    auto comps = e.degree_components();
    CHECK(comps.size() == 1);
    CHECK(comps.count(0) == 1);
    Element x3 = Element::x_dp(3, 5);
    auto cx = x3.degree_components();
    CHECK(cx.size() == 1);
    CHECK(cx.count(3) == 1);
    Element mix = e + Element::x_dp(1, 3);
    auto cm = Element(mix).degree_components();
    Element sum = Element::zero(3);
    for (auto& [d, c] : cm) sum = sum + c;
    CHECK(sum == mix);
}

TEST_CASE("fr and fr_prime") {
    for (uint32_t p : {2u, 3u, 5u}) {
        CHECK(Element::x_dp(p, p).fr() == Element::x_dp(1, p));
        CHECK(Element::x_dp(1, p).fr().is_zero());
        CHECK(Element::h_binom(p, p).fr() == Element::h_binom(1, p));
        CHECK(Element::monomial({1, 1, 1}, 1, p).fr_prime() ==
              Element::monomial({p, p, p}, 1, p));
        CHECK(Element::unit(p).fr_prime() == Element::unit(p));
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Element e = random_ur_element(3, 2, 5, rng);
        CHECK(e.fr_prime().fr() == e);
    }
}

TEST_CASE("membership predicates") {
    Element e = Element::monomial({1, 2, 1}, 1, 3);
    CHECK(e.in_ur(1));
    CHECK(e.in_ar(1));
    CHECK(!e.in_ur0(1));
    CHECK(Element::h_binom(2, 3).in_ur0(1));
    CHECK(!Element::h_binom(3, 3).in_ur(1));
    CHECK(Element::h_binom(3, 3).in_ur(2));
    CHECK(!Element::monomial({0, 0, 1}, 1, 3).in_ar(1));
}

TEST_CASE("closure of U_r under multiplication") {
    std::mt19937_64 rng(41);
    for (uint32_t p : {2u, 3u})
        for (uint32_t r : {1u, 2u})
            for (int i = 0; i < 50; ++i) {
                Element a = random_ur_element(p, r, 4, rng);
                Element b = random_ur_element(p, r, 4, rng);
                CHECK((a * b).in_ur(r));
            }
}

TEST_CASE("A_r commutativity, exhaustive basis pairs") {
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}, {3, 1}}) {
        uint32_t q = uint32_t(pow_u64(p, r));
        std::vector<Element> basis;
        for (uint32_t m = 0; m < q; ++m)
            for (uint32_t n = 0; n < q; ++n)
                basis.push_back(Element::monomial({m, n, m}, 1, p));
        for (const Element& a : basis)
            for (const Element& b : basis) CHECK(a * b == b * a);
    }
}

TEST_CASE("canonical text form") {
    CHECK(Element::zero(3).to_string() == "0");
    CHECK(Element::unit(3).to_string() == "1");
    CHECK(Element::x_dp(2, 3).to_string() == "X(2)");
    CHECK(Element::monomial({1, 0, 1}, 2, 3).to_string() == "2*Y(1)*X(1)");
    Element e = Element::monomial({1, 0, 1}, 1, 3) + Element::h_binom(1, 3);
    CHECK(e.to_string() == "H(1) + Y(1)*X(1)");
}
