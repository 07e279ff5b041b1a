#ifndef HYPERALG_CHECKS_HPP
#define HYPERALG_CHECKS_HPP

#include <random>
#include <string>

#include "hyperalg/blocks.hpp"

namespace halg {

std::vector<Tuple> all_tuples(uint32_t p, uint32_t r);  // lexicographic

struct CheckResult {
    std::string name;
    std::string grid;  // "p=..,r=.." point
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

// E(a,j) over P^r: idempotent, pairwise orthogonal, sum to 1 in U_r.
CheckResult check_idempotent_system(uint32_t p, uint32_t r);
// sum over blocks of 2^w equals p^{2r}.
CheckResult check_dimension_audit(uint32_t p, uint32_t r);
// Closed-form n/ntilde tables vs the polynomial-divisibility definition (p odd).
CheckResult check_n_tables(uint32_t p);
// Extracted power-form coefficient lists start at n^(eps) / ntilde^(eps).
CheckResult check_power_form(uint32_t p);
// PBW multiply vs operator-matrix composition on generator pairs and
// seeded random pairs; degree bound D defaults to 2 p^r when 0.
CheckResult check_mult_oracle(uint32_t p, uint32_t r, uint64_t seed, uint32_t D = 0);
// The p^{3r} basis monomials act by linearly independent matrices on the
// S^{p^r-1} (x) S^d family (see steinberg_tensor_flatten).
CheckResult check_operator_faithfulness(uint32_t p, uint32_t r, uint32_t D = 0);
// Duplicate rule: eps-vectors agreeing off the free positions give equal elements.
CheckResult check_duplicate_rule(uint32_t p, uint32_t r, uint64_t seed);
// Weight fixation over every tuple and every theta.
CheckResult check_weight_fixation(uint32_t p, uint32_t r);

// Named block-level checks folded over precomputed oracle reports.
CheckResult check_block_structure(const std::vector<BlockReport>& reports);
CheckResult check_loewy(const std::vector<BlockReport>& reports);
CheckResult check_symmetry(const std::vector<BlockReport>& reports);

// quick: combinatorial path only (no oracle); full: everything.
// oracle_degree 0 means the 2 p^r default.
std::vector<CheckResult> verify_suite(uint32_t p, uint32_t r, bool full, uint64_t seed,
                                      uint64_t dim_cap, uint32_t oracle_degree = 0);

Element random_ur_element(uint32_t p, uint32_t r, uint32_t max_terms,
                          std::mt19937_64& rng);
Element random_ar_element(uint32_t p, uint32_t r, uint32_t max_terms,
                          std::mt19937_64& rng);

}  // namespace halg

#endif
