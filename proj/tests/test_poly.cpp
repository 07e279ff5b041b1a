#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperalg/poly.hpp"

using namespace halg;

TEST_CASE("construction and normalization") {
    Poly z = Poly::zero(5);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    Poly a(5, {3, 0, 5, 10});  // 3 + 0x + 0x^2 + 0x^3
    CHECK(a.degree() == 0);
    CHECK(a.coeff(0) == 3);
    CHECK(Poly::constant(-1, 5) == Poly(5, {4}));
}

TEST_CASE("ring operations") {
    Poly a(7, {1, 2});      // 1 + 2x
    Poly b(7, {3, 0, 1});   // 3 + x^2
    CHECK((a + b) == Poly(7, {4, 2, 1}));
    CHECK((b - a) == Poly(7, {2, 5, 1}));
    CHECK((a * b) == Poly(7, {3, 6, 1, 2}));
    CHECK(a.scaled(0).is_zero());
    CHECK(a.scaled(3) == Poly(7, {3, 6}));
    CHECK((a - a).is_zero());
}

TEST_CASE("divmod and divisibility") {
    Poly num(5, {1, 0, 1, 1});  // x^3 + x^2 + 1
    Poly den(5, {1, 1});        // x + 1
    auto [q, rem] = num.divmod(den);
    CHECK(q * den + rem == num);
    CHECK(rem.degree() < den.degree());
    Poly prod = den * Poly(5, {2, 0, 3});
    CHECK(prod.divisible_by(den));
    CHECK(!num.divisible_by(den));
    CHECK(Poly::zero(5).divisible_by(den));
}

TEST_CASE("eval and shift") {
    Poly f(7, {2, 3, 1});  // x^2 + 3x + 2 = (x+1)(x+2)
    CHECK(f.eval(-1) == 0);
    CHECK(f.eval(-2) == 0);
    CHECK(f.eval(1) == 6);
    Poly g = f.shifted(3);  // f(x+3)
    for (int64_t x = -3; x < 4; ++x) CHECK(g.eval(x) == f.eval(x + 3));
    CHECK(f.shifted(0) == f);
}

TEST_CASE("linear_root") {
    Poly l = Poly::linear_root(4, 7);
    CHECK(l.eval(4) == 0);
    CHECK(l.degree() == 1);
    // product over all roots of F_p gives x^p - x
    Poly prod = Poly::constant(1, 5);
    for (int64_t i = 0; i < 5; ++i) prod = prod * Poly::linear_root(i, 5);
    CHECK(prod == Poly(5, {0, 4, 0, 0, 0, 1}));
}

TEST_CASE("to_string") {
    CHECK(Poly::zero(3).to_string() == "0");
    CHECK(Poly(5, {2, 0, 1}).to_string() == "x^2 + 2");
    CHECK(Poly(5, {0, 3}).to_string() == "3*x");
}
