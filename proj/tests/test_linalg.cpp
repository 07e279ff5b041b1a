#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperalg/idempotents.hpp"
#include "hyperalg/linalg.hpp"

using namespace halg;

namespace {

FpMat make(uint32_t p, size_t nr, size_t nc, std::initializer_list<uint32_t> vals) {
    FpMat m(nr, nc, p);
    size_t i = 0;
    for (uint32_t v : vals) m.d[i++] = v;
    return m;
}

}  // namespace

TEST_CASE("matrix product") {
    FpMat a = make(5, 2, 2, {1, 2, 3, 4});
    FpMat b = make(5, 2, 2, {0, 1, 1, 0});
    CHECK(a * b == make(5, 2, 2, {2, 1, 4, 3}));
}

TEST_CASE("rref and rank") {
    FpMat m = make(3, 3, 3, {1, 2, 0, 2, 1, 0, 0, 0, 1});
    // row2 = 2*row1 mod 3
    std::vector<size_t> piv;
    CHECK(rref_in_place(m, &piv) == 2);
    CHECK(piv == std::vector<size_t>{0, 2});
    CHECK(rank_of(make(5, 2, 2, {0, 0, 0, 0})) == 0);
    CHECK(rank_of(make(5, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 3);
}

TEST_CASE("null space") {
    // x + 2y = 0 mod 5 -> kernel spanned by (3, 1)
    FpMat m = make(5, 1, 2, {1, 2});
    auto ns = null_space(m);
    REQUIRE(ns.size() == 1);
    CHECK(add_mod(ns[0][0], mul_mod(2, ns[0][1], 5), 5) == 0);
    CHECK(null_space(make(3, 2, 2, {1, 0, 0, 1})).empty());
}

TEST_CASE("row span canonicalization") {
    FpMat a = make(7, 2, 3, {1, 2, 3, 0, 1, 1});
    FpMat b = make(7, 3, 3, {2, 4, 6, 1, 3, 4, 0, 0, 0});  // same span, scaled + summed
    CHECK(same_row_span(a, b));
    FpMat c = make(7, 1, 3, {1, 2, 3});
    CHECK(!same_row_span(a, c));
    CHECK(row_span_canonical(b).nr == 2);
}

TEST_CASE("solve_in_span examples") {
    // mu_0 at p=2 in span {1, H(1)} has coefficients (1, 1)
    std::vector<Element> targets{Element::unit(2), Element::h_binom(1, 2)};
    SpanSolve s = solve_in_span(targets, mu(0, 1, 2));
    REQUIRE(s.status == SpanStatus::Ok);
    CHECK(s.coeffs == std::vector<uint32_t>{1, 1});

    SpanSolve z = solve_in_span(targets, Element::zero(2));
    REQUIRE(z.status == SpanStatus::Ok);
    CHECK(z.coeffs == std::vector<uint32_t>{0, 0});

    SpanSolve out = solve_in_span({Element::unit(2)}, Element::x_dp(1, 2));
    CHECK(out.status == SpanStatus::NotInSpan);
}

TEST_CASE("solve_in_span flags dependent targets") {
    Element h = Element::h_binom(1, 3);
    SpanSolve s = solve_in_span({h, h.scaled(2)}, h);
    CHECK(s.status == SpanStatus::Dependent);
}

TEST_CASE("solve_in_span reconstructs") {
    std::vector<Element> targets{Element::unit(5), Element::h_binom(1, 5),
                                 Element::monomial({1, 0, 1}, 1, 5)};
    Element e = targets[0].scaled(2) + targets[1].scaled(3) + targets[2].scaled(4);
    SpanSolve s = solve_in_span(targets, e);
    REQUIRE(s.status == SpanStatus::Ok);
    CHECK(s.coeffs == std::vector<uint32_t>{2, 3, 4});
}
