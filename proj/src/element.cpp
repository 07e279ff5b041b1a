#include "hyperalg/element.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace halg {

uint64_t pow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Element Element::unit(uint32_t p) { return monomial({0, 0, 0}, 1, p); }

Element Element::monomial(Mono m, int64_t coeff, uint32_t p) {
    Element e(p);
    e.add_term(m, coeff);
    return e;
}

Element Element::x_pow(uint32_t s, uint32_t p) {
    if (s >= p) throw std::invalid_argument("x_pow: s must be < p");
    return monomial({0, 0, s}, factorial_mod(s, p), p);
}

Element Element::y_pow(uint32_t s, uint32_t p) {
    if (s >= p) throw std::invalid_argument("y_pow: s must be < p");
    return monomial({s, 0, 0}, factorial_mod(s, p), p);
}

Element Element::h_shifted_binom(int64_t c, uint32_t n, uint32_t p) {
    Element e(p);
    for (uint32_t i = 0; i <= n; ++i)
        e.add_term({0, i, 0}, binom_mod_p(c, int64_t(n) - i, p));
    return e;
}

void Element::add_term(Mono m, int64_t coeff) {
    uint32_t c = Fp(coeff, p_).v;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = add_mod(it->second, c, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

Element Element::operator+(const Element& o) const {
    if (p_ != o.p_) throw std::logic_error("Element: mixed moduli");
    Element r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    if (p_ != o.p_) throw std::logic_error("Element: mixed moduli");
    Element r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, int64_t(p_) - c);
    return r;
}

Element Element::scaled(int64_t s) const {
    Element r(p_);
    uint32_t sr = Fp(s, p_).v;
    for (auto& [m, c] : terms_) r.add_term(m, mul_mod(c, sr, p_));
    return r;
}

namespace {

// Elements of U^0 in the binom(H, i) basis: h[i] is the coefficient.
using HPoly = std::vector<uint32_t>;

// binom(H + c, n) = sum_i binom(c, n-i) binom(H, i)
HPoly h_shifted(int64_t c, uint32_t n, uint32_t p) {
    HPoly h(n + 1, 0);
    for (uint32_t i = 0; i <= n; ++i) h[i] = binom_mod_p(c, int64_t(n) - i, p);
    return h;
}

// binom(H, m) * binom(H, n) expanded in the binom(H, j) basis by forward
// substitution against the unitriangular evaluation matrix binom(x, j) at
// integer points x = 0..m+n.
HPoly h_pair_product_uncached(uint32_t m, uint32_t n, uint32_t p) {
    uint32_t N = m + n;
    HPoly c(N + 1, 0);
    for (uint32_t x = 0; x <= N; ++x) {
        uint32_t v = mul_mod(binom_mod_p(x, m, p), binom_mod_p(x, n, p), p);
        for (uint32_t i = 0; i < x; ++i)
            v = sub_mod(v, mul_mod(binom_mod_p(x, i, p), c[i], p), p);
        c[x] = v;
    }
    return c;
}

const HPoly& h_pair_product(uint32_t m, uint32_t n, uint32_t p) {
    static std::unordered_map<uint64_t, HPoly> cache;
    static std::mutex mtx;
    if (m > n) std::swap(m, n);
    uint64_t key = (uint64_t(p) << 40) | (uint64_t(m) << 20) | n;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, h_pair_product_uncached(m, n, p)).first;
    return it->second;
}

HPoly h_mul(const HPoly& a, const HPoly& b, uint32_t p) {
    HPoly r(a.size() + b.size() - 1, 0);
    for (uint32_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            uint32_t s = mul_mod(a[i], b[j], p);
            const HPoly& pp = h_pair_product(i, j, p);
            for (uint32_t k = 0; k < pp.size(); ++k)
                if (pp[k]) r[k] = add_mod(r[k], mul_mod(s, pp[k], p), p);
        }
    }
    return r;
}

// Product of two PBW monomials via the Kostant Z-form straightening rules.
Element mono_product_uncached(Mono A, Mono B, uint32_t p) {
    Element out(p);
    uint32_t jmax = std::min(A.xm, B.ym);
    for (uint32_t j = 0; j <= jmax; ++j) {
        uint32_t b = B.ym - j, a = A.xm - j;
        uint32_t yc = binom_mod_p(int64_t(A.ym) + b, A.ym, p);
        uint32_t xc = binom_mod_p(int64_t(a) + B.xm, a, p);
        if (yc == 0 || xc == 0) continue;
        // X^(A.xm) Y^(B.ym) -> Y^(b) binom(H - A.xm - B.ym + 2j, j) X^(a)
        HPoly mid = h_shifted(-int64_t(A.xm) - B.ym + 2 * int64_t(j), j, p);
        // binom(H, n1) Y^(b) = Y^(b) binom(H - 2b, n1)
        HPoly left = h_shifted(-2 * int64_t(b), A.hn, p);
        // X^(a) binom(H, n2) = binom(H - 2a, n2) X^(a)
        HPoly right = h_shifted(-2 * int64_t(a), B.hn, p);
        HPoly h = h_mul(h_mul(left, mid, p), right, p);
        uint32_t c = mul_mod(yc, xc, p);
        for (uint32_t i = 0; i < h.size(); ++i)
            if (h[i]) out.add_term({A.ym + b, i, a + B.xm}, mul_mod(c, h[i], p));
    }
    return out;
}

const Element& mono_product(Mono A, Mono B, uint32_t p) {
    static std::unordered_map<uint64_t, Element> cache;
    static std::mutex mtx;
    static const uint32_t kCap = 512;  // cacheable index bound (9-bit fields)
    if (A.ym >= kCap || A.hn >= kCap || A.xm >= kCap || B.ym >= kCap ||
        B.hn >= kCap || B.xm >= kCap) {
        static thread_local Element scratch(2);
        scratch = mono_product_uncached(A, B, p);
        return scratch;
    }
    uint64_t key = uint64_t(p);
    for (uint32_t f : {A.ym, A.hn, A.xm, B.ym, B.hn, B.xm}) key = (key << 9) | f;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, mono_product_uncached(A, B, p)).first;
    return it->second;
}

}  // namespace

Element Element::operator*(const Element& o) const {
    if (p_ != o.p_) throw std::logic_error("Element: mixed moduli");
    Element out(p_);
    for (auto& [m1, c1] : terms_) {
        for (auto& [m2, c2] : o.terms_) {
            uint32_t c = mul_mod(c1, c2, p_);
            const Element& prod = mono_product(m1, m2, p_);
            for (auto& [m, pc] : prod.terms())
                out.add_term(m, mul_mod(c, pc, p_));
        }
    }
    // Closure in U_r: with both factors inside U_r, every surviving
    // coefficient outside U_r must have vanished mod p (Kummer carries).
    uint32_t mi = std::max(max_index(), o.max_index());
    uint64_t bound = 1;
    while (bound - 1 < mi) bound *= p_;
    if (out.max_index() > bound - 1)
        throw std::logic_error("Element: product escaped U_r (straightening bug)");
    return out;
}

std::map<int, Element> Element::degree_components() const {
    std::map<int, Element> out;
    for (auto& [m, c] : terms_) {
        auto it = out.try_emplace(m.degree(), Element(p_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

Element Element::fr() const {
    Element r(p_);
    for (auto& [m, c] : terms_)
        if (m.ym % p_ == 0 && m.hn % p_ == 0 && m.xm % p_ == 0)
            r.add_term({m.ym / p_, m.hn / p_, m.xm / p_}, c);
    return r;
}

Element Element::fr_prime() const {
    Element r(p_);
    for (auto& [m, c] : terms_)
        r.add_term({m.ym * p_, m.hn * p_, m.xm * p_}, c);
    return r;
}

uint32_t Element::max_index() const {
    uint32_t mi = 0;
    for (auto& [m, c] : terms_)
        mi = std::max({mi, m.ym, m.hn, m.xm});
    return mi;
}

bool Element::in_ur(uint32_t r) const {
    return max_index() <= pow_u64(p_, r) - 1;
}

bool Element::in_ur0(uint32_t r) const {
    if (!in_ur(r)) return false;
    for (auto& [m, c] : terms_)
        if (m.ym != 0 || m.xm != 0) return false;
    return true;
}

bool Element::in_ar(uint32_t r) const {
    if (!in_ur(r)) return false;
    for (auto& [m, c] : terms_)
        if (m.ym != m.xm) return false;
    return true;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        if (c != 1 || (m.ym == 0 && m.hn == 0 && m.xm == 0)) {
            os << c;
            any = true;
        }
        auto put = [&](const char* sym, uint32_t idx) {
            if (idx == 0) return;
            if (any) os << "*";
            os << sym << "(" << idx << ")";
            any = true;
        };
        put("Y", m.ym);
        put("H", m.hn);
        put("X", m.xm);
    }
    return os.str();
}

}  // namespace halg
