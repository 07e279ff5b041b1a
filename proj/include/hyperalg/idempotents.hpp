#ifndef HYPERALG_IDEMPOTENTS_HPP
#define HYPERALG_IDEMPOTENTS_HPP

#include <vector>

#include "hyperalg/element.hpp"
#include "hyperalg/poly.hpp"

namespace halg {

enum class CaseAJ { A, B, C, D };
char case_letter(CaseAJ c);

// A pair (a, j) in the index set P.  j is stored doubled so the p = 2
// label j = 1/2 stays integral: for p odd two_j = 2j with j in
// {0..(p-1)/2}; for p = 2 the legal pairs are (0,1), (1,0), (1,2),
// encoding (0,1/2), (1,0), (1,1).
struct PairAJ {
    uint32_t a = 0;
    uint32_t two_j = 0;
    CaseAJ cse = CaseAJ::B;

    bool operator==(const PairAJ&) const = default;
    auto operator<=>(const PairAJ&) const = default;
};

bool pair_in_p(uint32_t a, uint32_t two_j, uint32_t p);
CaseAJ classify(uint32_t a, uint32_t two_j, uint32_t p);  // throws if not in P
PairAJ make_pair(uint32_t a, uint32_t two_j, uint32_t p);
std::vector<PairAJ> pair_set(uint32_t p);  // all of P, lex by (a, two_j)

// Position contributes no epsilon freedom: j = 0 (p odd) / a = 1 (p = 2).
bool is_free_position(const PairAJ& pr, uint32_t p);

// alpha = j^2 - ((a+1)/2)^2 and beta = 4 j^2, as residues mod p.  For
// p = 2 the numerator (2j)^2 - (a+1)^2 is divided by 4 in the integers.
uint32_t alpha_of(const PairAJ& pr, uint32_t p);
uint32_t beta_of(const PairAJ& pr, uint32_t p);

// Closed forms per case; n1 >= n0 and ntilde1 >= ntilde0 always.
uint32_t n_eps(int eps, const PairAJ& pr, uint32_t p);
uint32_t n_tilde(int eps, const PairAJ& pr, uint32_t p);
// Divisibility definition (p odd): largest n with
// phi_{a,n}(x) | psi_j^{(eps)}(x + ((a+1)/2)^2); the oracle for n_eps.
uint32_t n_eps_by_division(int eps, int64_t a, uint32_t j, uint32_t p);

uint32_t s_shift(const PairAJ& pr, uint32_t p);  // cases A/C only

// mu_a^{(r)} = binom(H - a - 1, p^r - 1) expanded in the binom(H,i) basis.
Element mu(int64_t a, uint32_t r, uint32_t p);

Poly phi_poly(int64_t a, uint32_t m, uint32_t p);
Poly psi_poly(uint32_t p);                             // p odd
Poly psi_eps_poly(int eps, uint32_t j, uint32_t p);    // psi_j^{(eps)}, p odd
Poly psi_shifted(int eps, const PairAJ& pr, uint32_t p);  // psi_j^{(eps)}(x+((a+1)/2)^2)

// B^{(eps)}(a, j) in A_1.
Element b1(int eps, const PairAJ& pr, uint32_t p);

// Power-form coefficients: e = mu_a sum c_m Y^m X^m = mu_a sum ct_m X^m Y^m
// with ordinary powers, m = 0..p-1.  Throws if e is not of that shape.
struct PowerCoeffs {
    std::vector<uint32_t> yx;  // c_m
    std::vector<uint32_t> xy;  // ct_m
};
PowerCoeffs extract_power_coeffs(const Element& e, uint32_t a, uint32_t p);

// Z^{(eps)}(z; (a,j)); linear in z.
Element z_map(int eps, const Element& z, const PairAJ& pr, uint32_t p);

using Tuple = std::vector<PairAJ>;
using EpsVec = std::vector<uint8_t>;

// Recursive B^{(eps_0..eps_{r-1})}((a_0..),(j_0..)).
Element b_element(const EpsVec& eps, const Tuple& tuple, uint32_t p);
Element e_idempotent(const Tuple& tuple, uint32_t p);  // eps = (0..0)

// Sum of b_i p^i mod p^r with b_i = a_i - p in cases A/C, a_i otherwise.
uint32_t weight_index(const Tuple& tuple, uint32_t p);
uint32_t tuple_w(const Tuple& tuple, uint32_t p);  // count of non-free positions

std::string pair_to_string(const PairAJ& pr);    // "a:2j"
std::string tuple_to_string(const Tuple& t);     // comma-joined pairs
std::string eps_to_string(const EpsVec& e);      // bits, eps_0 first

}  // namespace halg

#endif
