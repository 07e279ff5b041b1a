#include "hyperalg/fp.hpp"

namespace halg {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b % p) % p; }
uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(uint64_t(a) * b % p);
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inv_mod: zero");
    return pow_mod(a, p - 2, p);  // p prime
}

Fp Fp::inv() const { return Fp(inv_mod(v, p), p); }

uint32_t factorial_mod(uint32_t n, uint32_t p) {
    uint32_t r = 1 % p;
    for (uint32_t i = 2; i <= n; ++i) r = mul_mod(r, i, p);
    return r;
}

uint32_t lucas_check(uint64_t top, uint64_t bottom, uint32_t p) {
    uint32_t r = 1 % p;
    while (top || bottom) {
        uint32_t dt = top % p, db = bottom % p;
        if (db > dt) return 0;
        // binom(dt, db) with dt, db < p: the denominator is a unit mod p
        uint32_t num = 1, den = 1;
        for (uint32_t i = 1; i <= db; ++i) {
            num = mul_mod(num, dt + 1 - i, p);
            den = mul_mod(den, i, p);
        }
        r = mul_mod(r, mul_mod(num, inv_mod(den, p), p), p);
        top /= p;
        bottom /= p;
    }
    return r;
}

uint32_t binom_mod_p(int64_t top, int64_t bottom, uint32_t p) {
    if (bottom < 0) return 0;
    if (bottom == 0) return 1 % p;
    if (top >= 0) {
        if (bottom > top) return 0;
        return lucas_check(uint64_t(top), uint64_t(bottom), p);
    }
    // binom(top, k) = (-1)^k binom(k - top - 1, k)
    uint32_t r = lucas_check(uint64_t(bottom - top - 1), uint64_t(bottom), p);
    return (bottom & 1) ? sub_mod(0, r, p) : r;
}

}  // namespace halg
