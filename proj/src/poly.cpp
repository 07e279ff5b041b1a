#include "hyperalg/poly.hpp"

#include <sstream>

namespace halg {

Poly Poly::operator+(const Poly& o) const {
    if (p_ != o.p_) throw std::logic_error("Poly: mixed moduli");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = add_mod(coeff(i), o.coeff(i), p_);
    return Poly(p_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    if (p_ != o.p_) throw std::logic_error("Poly: mixed moduli");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = sub_mod(coeff(i), o.coeff(i), p_);
    return Poly(p_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (p_ != o.p_) throw std::logic_error("Poly: mixed moduli");
    if (is_zero() || o.is_zero()) return Poly(p_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(c_[i], o.c_[j], p_), p_);
    return Poly(p_, std::move(r));
}

Poly Poly::scaled(uint32_t s) const {
    std::vector<uint32_t> r = c_;
    for (auto& x : r) x = mul_mod(x, s, p_);
    return Poly(p_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (p_ != divisor.p_) throw std::logic_error("Poly: mixed moduli");
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
    std::vector<uint32_t> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {Poly(p_), *this};
    std::vector<uint32_t> quot(c_.size() - dd, 0);
    uint32_t lead_inv = inv_mod(divisor.c_.back(), p_);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        uint32_t q = mul_mod(rem[i], lead_inv, p_);
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = sub_mod(rem[i - dd + j], mul_mod(q, divisor.c_[j], p_), p_);
    }
    return {Poly(p_, std::move(quot)), Poly(p_, std::move(rem))};
}

bool Poly::divisible_by(const Poly& divisor) const {
    return divmod(divisor).second.is_zero();
}

uint32_t Poly::eval(int64_t x) const {
    uint32_t xr = Fp(x, p_).v, r = 0;
    for (size_t i = c_.size(); i-- > 0;)
        r = add_mod(mul_mod(r, xr, p_), c_[i], p_);
    return r;
}

Poly Poly::shifted(int64_t c) const {
    // P(x+c) = sum_k c_k sum_{i<=k} binom(k,i) c^{k-i} x^i
    Poly out(p_);
    uint32_t cr = Fp(c, p_).v;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::vector<uint32_t> term(k + 1, 0);
        uint32_t cpow = 1 % p_;
        for (size_t i = k + 1; i-- > 0;) {
            term[i] = mul_mod(c_[k], mul_mod(binom_mod_p(int64_t(k), int64_t(i), p_), cpow, p_), p_);
            cpow = mul_mod(cpow, cr, p_);
        }
        out = out + Poly(p_, std::move(term));
    }
    return out;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0 && c_[i] != 1) os << "*";
        if (i == 1) os << "x";
        else if (i > 1) os << "x^" << i;
    }
    return os.str();
}

}  // namespace halg
