#ifndef HYPERALG_FP_HPP
#define HYPERALG_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace halg {

bool is_prime(uint32_t n);

// Residue in [0, p) carrying its modulus.  Mixing moduli is a programming
// error and throws std::logic_error.
struct Fp {
    uint32_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(int64_t value, uint32_t prime) : p(prime) {
        int64_t r = value % static_cast<int64_t>(prime);
        if (r < 0) r += prime;
        v = static_cast<uint32_t>(r);
    }

    bool operator==(const Fp&) const = default;

    Fp operator+(const Fp& o) const { check(o); return Fp(int64_t(v) + o.v, p); }
    Fp operator-(const Fp& o) const { check(o); return Fp(int64_t(v) - o.v, p); }
    Fp operator*(const Fp& o) const { check(o); return Fp(int64_t(v) * o.v, p); }
    Fp operator-() const { return Fp(-int64_t(v), p); }
    Fp inv() const;
    Fp operator/(const Fp& o) const { check(o); return *this * o.inv(); }

    bool is_zero() const { return v == 0; }

private:
    void check(const Fp& o) const {
        if (p != o.p) throw std::logic_error("Fp: mixed moduli");
    }
};

uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p);
uint32_t inv_mod(uint32_t a, uint32_t p);
uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p);
uint32_t factorial_mod(uint32_t n, uint32_t p);

// binom(top, bottom) mod p for signed top, using
// binom(-a-1, k) = (-1)^k binom(a+k, k) when top < 0.
uint32_t binom_mod_p(int64_t top, int64_t bottom, uint32_t p);

// Base-p digit product (Lucas); independent cross-check for non-negative tops.
uint32_t lucas_check(uint64_t top, uint64_t bottom, uint32_t p);

}  // namespace halg

#endif
