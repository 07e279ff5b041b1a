#include "hyperalg/idempotents.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hyperalg/linalg.hpp"

namespace halg {

char case_letter(CaseAJ c) {
    switch (c) {
        case CaseAJ::A: return 'A';
        case CaseAJ::B: return 'B';
        case CaseAJ::C: return 'C';
        case CaseAJ::D: return 'D';
    }
    return '?';
}

bool pair_in_p(uint32_t a, uint32_t two_j, uint32_t p) {
    if (p == 2)
        return (a == 0 && two_j == 1) || (a == 1 && two_j == 0) || (a == 1 && two_j == 2);
    return a < p && two_j % 2 == 0 && two_j / 2 <= (p - 1) / 2;
}

CaseAJ classify(uint32_t a, uint32_t two_j, uint32_t p) {
    if (!pair_in_p(a, two_j, p)) throw std::invalid_argument("classify: pair not in P");
    if (p == 2) {
        if (a == 0) return CaseAJ::B;
        return two_j == 0 ? CaseAJ::C : CaseAJ::D;
    }
    uint32_t j = two_j / 2;
    if (a % 2 == 0) return j >= (p - a + 1) / 2 ? CaseAJ::A : CaseAJ::B;
    return j <= (a - 1) / 2 ? CaseAJ::C : CaseAJ::D;
}

PairAJ make_pair(uint32_t a, uint32_t two_j, uint32_t p) {
    return {a, two_j, classify(a, two_j, p)};
}

std::vector<PairAJ> pair_set(uint32_t p) {
    std::vector<PairAJ> out;
    if (p == 2) {
        out = {make_pair(0, 1, 2), make_pair(1, 0, 2), make_pair(1, 2, 2)};
        return out;
    }
    for (uint32_t a = 0; a < p; ++a)
        for (uint32_t j = 0; j <= (p - 1) / 2; ++j) out.push_back(make_pair(a, 2 * j, p));
    return out;
}

bool is_free_position(const PairAJ& pr, uint32_t p) {
    return p == 2 ? pr.a == 1 : pr.two_j == 0;
}

uint32_t alpha_of(const PairAJ& pr, uint32_t p) {
    int64_t num = int64_t(pr.two_j) * pr.two_j - int64_t(pr.a + 1) * (pr.a + 1);
    if (p == 2) return Fp(num / 4, 2).v;  // divisible by 4 for every legal pair
    return mul_mod(Fp(num, p).v, inv_mod(4 % p, p), p);
}

uint32_t beta_of(const PairAJ& pr, uint32_t p) {
    return Fp(int64_t(pr.two_j) * pr.two_j, p).v;
}

uint32_t n_eps(int eps, const PairAJ& pr, uint32_t p) {
    if (p == 2) {
        if (pr.a == 0) return eps ? 1 : 0;
        return pr.two_j == 0 ? 1 : 0;
    }
    int a = int(pr.a), j = int(pr.two_j / 2), q = int(p);
    switch (pr.cse) {
        case CaseAJ::A: return eps ? (3 * q - a - 1) / 2 - j : (q - a - 1) / 2 + j;
        case CaseAJ::B: return eps ? (q - a - 1) / 2 + j : (q - a - 1) / 2 - j;
        case CaseAJ::C: return eps ? (2 * q - a - 1) / 2 + j : (2 * q - a - 1) / 2 - j;
        case CaseAJ::D: return eps ? (2 * q - a - 1) / 2 - j : j - (a + 1) / 2;
    }
    throw std::logic_error("n_eps: bad case");
}

uint32_t n_tilde(int eps, const PairAJ& pr, uint32_t p) {
    if (p == 2) {
        if (pr.a == 0) return eps ? 1 : 0;
        return pr.two_j == 0 ? 0 : 1;
    }
    int a = int(pr.a), j = int(pr.two_j / 2), q = int(p);
    switch (pr.cse) {
        case CaseAJ::A: return eps ? (q + a - 1) / 2 - j : (a - q - 1) / 2 + j;
        case CaseAJ::B: return eps ? (q + a - 1) / 2 + j : (q + a - 1) / 2 - j;
        case CaseAJ::C: return eps ? (a - 1) / 2 + j : (a - 1) / 2 - j;
        case CaseAJ::D: return eps ? (2 * q + a - 1) / 2 - j : (a - 1) / 2 + j;
    }
    throw std::logic_error("n_tilde: bad case");
}

Poly phi_poly(int64_t a, uint32_t m, uint32_t p) {
    Poly r = Poly::constant(1, p);
    for (uint32_t i = 0; i < m; ++i)
        r = r * Poly::linear_root(int64_t(i) * (int64_t(i) + a + 1), p);
    return r;
}

Poly psi_poly(uint32_t p) {
    if (p == 2) throw std::invalid_argument("psi_poly: p must be odd");
    Poly r = Poly::constant(1, p);
    for (uint32_t i = 0; i < p; ++i)
        r = r * Poly::linear_root(int64_t(i) * i, p);
    return r;
}

Poly psi_eps_poly(int eps, uint32_t j, uint32_t p) {
    if (p == 2) throw std::invalid_argument("psi_eps_poly: p must be odd");
    if (j > (p - 1) / 2) throw std::invalid_argument("psi_eps_poly: j not in S");
    if (eps == 1) {
        auto [q, rem] = psi_poly(p).divmod(Poly::linear_root(int64_t(j) * j, p));
        if (!rem.is_zero()) throw std::logic_error("psi_eps_poly: psi not divisible");
        return q;
    }
    if (j == 0) {
        Poly r = Poly::constant(1, p);
        for (uint32_t i = 1; i <= (p - 1) / 2; ++i) {
            Poly f = Poly::linear_root(int64_t(i) * i, p);
            r = r * f * f;
        }
        return r;
    }
    Poly r = Poly(p, {0, 2 % p});  // 2x
    r = r * Poly(p, {Fp(int64_t(j) * j, p).v, 1});  // x + j^2
    for (uint32_t i = 1; i <= (p - 1) / 2; ++i) {
        if (i == j) continue;
        Poly f = Poly::linear_root(int64_t(i) * i, p);
        r = r * f * f;
    }
    return r;
}

Poly psi_shifted(int eps, const PairAJ& pr, uint32_t p) {
    uint32_t half = mul_mod(Fp(int64_t(pr.a) + 1, p).v, inv_mod(2 % p, p), p);
    return psi_eps_poly(eps, pr.two_j / 2, p).shifted(mul_mod(half, half, p));
}

uint32_t n_eps_by_division(int eps, int64_t a, uint32_t j, uint32_t p) {
    if (p == 2) throw std::invalid_argument("n_eps_by_division: p must be odd");
    uint32_t half = mul_mod(Fp(a + 1, p).v, inv_mod(2 % p, p), p);
    Poly target = psi_eps_poly(eps, j, p).shifted(mul_mod(half, half, p));
    uint32_t n = 0;
    while (int(n) < target.degree() && target.divisible_by(phi_poly(a, n + 1, p)))
        ++n;
    return n;
}

uint32_t s_shift(const PairAJ& pr, uint32_t p) {
    if (pr.cse != CaseAJ::A && pr.cse != CaseAJ::C)
        throw std::invalid_argument("s_shift: defined only in cases A and C");
    if (p == 2) return 1;
    return pr.a % 2 == 0 ? (p - pr.a + 1) / 2 : (p - pr.a) / 2;
}

Element mu(int64_t a, uint32_t r, uint32_t p) {
    return Element::h_shifted_binom(-a - 1, uint32_t(pow_u64(p, r) - 1), p);
}

Element b1(int eps, const PairAJ& pr, uint32_t p) {
    Element Y = Element::y_dp(1, p), X = Element::x_dp(1, p);
    if (p == 2) {
        Element m = mu(pr.a, 1, 2);
        Element myx = m * Y * X;
        if (pr.a == 0) return eps ? myx : m;
        if (pr.two_j == 0) return myx;
        return myx + m;  // = mu_1 XY
    }
    Element m = mu(pr.a, 1, p);
    Element u = m * Y * X;
    Poly q = psi_shifted(eps, pr, p);
    Element acc = Element::zero(p);
    for (int k = q.degree(); k >= 0; --k)
        acc = acc * u + Element::unit(p).scaled(q.coeff(size_t(k)));
    return acc * m;
}

PowerCoeffs extract_power_coeffs(const Element& e, uint32_t a, uint32_t p) {
    Element m = mu(a, 1, p);
    std::vector<Element> yx, xy;
    for (uint32_t i = 0; i < p; ++i) {
        yx.push_back(m * Element::y_pow(i, p) * Element::x_pow(i, p));
        xy.push_back(m * Element::x_pow(i, p) * Element::y_pow(i, p));
    }
    auto s1 = solve_in_span(yx, e);
    auto s2 = solve_in_span(xy, e);
    if (s1.status != SpanStatus::Ok || s2.status != SpanStatus::Ok)
        throw std::logic_error(
            "extract_power_coeffs: element is not mu_a times a polynomial in YX");
    return {std::move(s1.coeffs), std::move(s2.coeffs)};
}

Element z_map(int eps, const Element& z, const PairAJ& pr, uint32_t p) {
    if (z.modulus() != p) throw std::logic_error("z_map: mixed moduli");
    Element B = b1(eps, pr, p);
    if (pr.cse == CaseAJ::B || pr.cse == CaseAJ::D) return z.fr_prime() * B;
    uint32_t s = s_shift(pr, p);
    auto coeffs = extract_power_coeffs(B, pr.a, p).yx;
    Element m = mu(pr.a, 1, p), frz = z.fr_prime();
    Element out = Element::zero(p);
    for (uint32_t i = 0; i < p; ++i) {
        if (coeffs[i] == 0) continue;
        if (i < s) throw std::logic_error("z_map: coefficient below s(a,j)");
        Element t = m * Element::y_pow(i, p) * Element::x_pow(i - s, p) * frz *
                    Element::x_pow(s, p);
        out = out + t.scaled(coeffs[i]);
    }
    return out;
}

namespace {

std::string b_key(const EpsVec& eps, const Tuple& tuple, uint32_t p) {
    std::ostringstream os;
    os << p << "|" << eps_to_string(eps) << "|" << tuple_to_string(tuple);
    return os.str();
}

}  // namespace

Element b_element(const EpsVec& eps, const Tuple& tuple, uint32_t p) {
    if (eps.size() != tuple.size() || tuple.empty())
        throw std::invalid_argument("b_element: length mismatch");
    if (tuple.size() == 1) return b1(eps[0], tuple[0], p);

    // Distinct eps-vectors share suffixes; cache sub-elements.
    static std::unordered_map<std::string, Element> cache;
    static std::mutex mtx;
    std::string key = b_key(eps, tuple, p);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EpsVec eps_rest(eps.begin() + 1, eps.end());
    Tuple tuple_rest(tuple.begin() + 1, tuple.end());
    Element inner = b_element(eps_rest, tuple_rest, p);
    Element out = z_map(eps[0], inner, tuple[0], p);
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(std::move(key), out);
    return out;
}

Element e_idempotent(const Tuple& tuple, uint32_t p) {
    return b_element(EpsVec(tuple.size(), 0), tuple, p);
}

uint32_t weight_index(const Tuple& tuple, uint32_t p) {
    int64_t w = 0, pw = 1;
    for (const PairAJ& pr : tuple) {
        int64_t b = (pr.cse == CaseAJ::A || pr.cse == CaseAJ::C) ? int64_t(pr.a) - p
                                                                 : int64_t(pr.a);
        w += b * pw;
        pw *= p;
    }
    int64_t mod = int64_t(pow_u64(p, uint32_t(tuple.size())));
    return uint32_t(((w % mod) + mod) % mod);
}

uint32_t tuple_w(const Tuple& tuple, uint32_t p) {
    uint32_t w = 0;
    for (const PairAJ& pr : tuple)
        if (!is_free_position(pr, p)) ++w;
    return w;
}

std::string pair_to_string(const PairAJ& pr) {
    return std::to_string(pr.a) + ":" + std::to_string(pr.two_j);
}

std::string tuple_to_string(const Tuple& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += pair_to_string(t[i]);
    }
    return s;
}

std::string eps_to_string(const EpsVec& e) {
    std::string s;
    for (uint8_t b : e) s += char('0' + b);
    return s;
}

}  // namespace halg
