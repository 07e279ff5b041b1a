#ifndef HYPERALG_ELEMENT_HPP
#define HYPERALG_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "hyperalg/fp.hpp"

namespace halg {

// PBW basis element Y^(ym) * binom(H, hn) * X^(xm); (0,0,0) is the unity.
struct Mono {
    uint32_t ym = 0;
    uint32_t hn = 0;
    uint32_t xm = 0;

    auto operator<=>(const Mono&) const = default;
    int degree() const { return int(xm) - int(ym); }
};

// Sparse element of the hyperalgebra U in the PBW basis, coefficients in F_p.
// Zero coefficients are never stored; equality is map equality.
class Element {
public:
    explicit Element(uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("Element: p must be prime");
    }

    static Element zero(uint32_t p) { return Element(p); }
    static Element unit(uint32_t p);
    static Element monomial(Mono m, int64_t coeff, uint32_t p);
    static Element x_dp(uint32_t m, uint32_t p) { return monomial({0, 0, m}, 1, p); }
    static Element y_dp(uint32_t m, uint32_t p) { return monomial({m, 0, 0}, 1, p); }
    static Element h_binom(uint32_t n, uint32_t p) { return monomial({0, n, 0}, 1, p); }
    // Ordinary powers X^s = s! * X^(s), valid for s <= p-1.
    static Element x_pow(uint32_t s, uint32_t p);
    static Element y_pow(uint32_t s, uint32_t p);
    // binom(H + c, n) expanded in the binom(H, i) basis (Vandermonde).
    static Element h_shifted_binom(int64_t c, uint32_t n, uint32_t p);

    uint32_t modulus() const { return p_; }
    const std::map<Mono, uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    uint32_t coeff(Mono m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    bool operator==(const Element&) const = default;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;  // straightened PBW product
    Element scaled(int64_t s) const;
    void add_term(Mono m, int64_t coeff);

    std::map<int, Element> degree_components() const;

    Element fr() const;        // divided-power indices divided by p, else term drops
    Element fr_prime() const;  // indices stretched by p (linear section of fr)

    uint32_t max_index() const;
    bool in_ur(uint32_t r) const;   // all indices <= p^r - 1
    bool in_ur0(uint32_t r) const;  // additionally ym = xm = 0
    bool in_ar(uint32_t r) const;   // ym = xm, indices <= p^r - 1

    // Canonical text form: `c*Y(m)*H(n)*X(m')` terms in lexicographic
    // monomial order joined by " + "; zero indices and unit coefficients
    // are omitted; "0" and "1" for zero and unity.
    std::string to_string() const;

private:
    uint32_t p_;
    std::map<Mono, uint32_t> terms_;
};

uint64_t pow_u64(uint64_t b, uint32_t e);

}  // namespace halg

#endif
