#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperalg/element.hpp"
#include "hyperalg/fp.hpp"

using namespace halg;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
    CHECK(!is_prime(0));
}

TEST_CASE("field arithmetic") {
    Fp a(5, 7), b(4, 7);
    CHECK((a + b).v == 2);
    CHECK((a - b).v == 1);
    CHECK((a * b).v == 6);
    CHECK((-a).v == 2);
    CHECK((a / b).v == 3);  // 5 * 2 = 10 = 3
    CHECK(Fp(-1, 7).v == 6);
    for (uint32_t x = 1; x < 7; ++x) CHECK(mul_mod(x, inv_mod(x, 7), 7) == 1);
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), std::logic_error);
}

TEST_CASE("pow and factorial") {
    CHECK(pow_mod(2, 10, 7) == 2);  // 1024 = 146*7 + 2
    CHECK(pow_mod(3, 0, 5) == 1);
    CHECK(factorial_mod(4, 5) == 4);  // 24
    CHECK(factorial_mod(0, 3) == 1);
}

TEST_CASE("binom_mod_p examples") {
    CHECK(binom_mod_p(-1, 1, 2) == 1);
    CHECK(binom_mod_p(2, 1, 2) == 0);
    for (int64_t c : {-7, -1, 0, 3, 12}) CHECK(binom_mod_p(c, 0, 5) == 1);
    CHECK(binom_mod_p(4, 2, 7) == 6);
    CHECK(binom_mod_p(-3, 2, 5) == 1);  // binom(-3,2) = 6
    CHECK(binom_mod_p(3, 5, 7) == 0);   // bottom > top >= 0
}

TEST_CASE("lucas examples") {
    CHECK(lucas_check(5, 2, 2) == 0);
    CHECK(lucas_check(4, 4, 3) == 1);
    CHECK(lucas_check(7, 3, 5) == 0);  // 35
}

TEST_CASE("lucas agrees with binom_mod_p on sampled non-negative tops") {
    std::mt19937_64 rng(12345);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        uint64_t lim = pow_u64(p, 6);
        std::uniform_int_distribution<uint64_t> d(0, lim - 1);
        for (int i = 0; i < 500; ++i) {
            uint64_t top = d(rng);
            uint64_t bottom = d(rng) % (top + 1);
            CHECK(lucas_check(top, bottom, p) ==
                  binom_mod_p(int64_t(top), int64_t(bottom), p));
        }
    }
}

TEST_CASE("Pascal identity for signed tops") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int64_t> top(-50, 50);
    std::uniform_int_distribution<int64_t> bot(1, 20);
    for (uint32_t p : {2u, 3u, 5u, 7u})
        for (int i = 0; i < 300; ++i) {
            int64_t c = top(rng), m = bot(rng);
            CHECK(binom_mod_p(c, m, p) ==
                  add_mod(binom_mod_p(c - 1, m, p), binom_mod_p(c - 1, m - 1, p), p));
        }
}

TEST_CASE("Kummer vanishing: carries force binom(a+b,a) = 0 mod p") {
    for (uint32_t p : {2u, 3u, 5u})
        for (uint32_t r : {1u, 2u}) {
            int64_t q = int64_t(pow_u64(p, r));
            for (int64_t a = 0; a < q; ++a)
                for (int64_t b = 0; b < q; ++b)
                    if (a + b >= q) CHECK(binom_mod_p(a + b, a, p) == 0);
        }
}
