#ifndef HYPERALG_POLY_HPP
#define HYPERALG_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperalg/fp.hpp"

namespace halg {

// Dense univariate polynomial over F_p; coeffs[i] is the coefficient of x^i.
class Poly {
public:
    explicit Poly(uint32_t p) : p_(p) {}
    Poly(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(uint32_t p) { return Poly(p); }
    static Poly constant(int64_t v, uint32_t p) { return Poly(p, {Fp(v, p).v}); }
    // x - root
    static Poly linear_root(int64_t root, uint32_t p) {
        return Poly(p, {Fp(-root, p).v, 1 % p});
    }

    uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool operator==(const Poly&) const = default;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t s) const;

    // Quotient/remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;

    uint32_t eval(int64_t x) const;
    Poly shifted(int64_t c) const;  // P(x + c)

    std::string to_string() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() % p_ == 0) c_.pop_back();
        for (auto& x : c_) x %= p_;
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    uint32_t p_;
    std::vector<uint32_t> c_;
};

}  // namespace halg

#endif
