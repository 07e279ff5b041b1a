#ifndef HYPERALG_BLOCKS_HPP
#define HYPERALG_BLOCKS_HPP

#include <map>
#include <optional>

#include "hyperalg/idempotents.hpp"
#include "hyperalg/linalg.hpp"

namespace halg {

uint32_t hamming_weight(const EpsVec& e);
uint32_t hamming_dist(const EpsVec& a, const EpsVec& b);
bool eps_leq(const EpsVec& a, const EpsVec& b);  // componentwise

// X_r(a,j): eps with eps_i = 0 at every free position.  tau is the unique
// member of largest weight w.
struct XSet {
    Tuple tuple;
    std::vector<EpsVec> members;  // lexicographic, eps_0 most significant
    EpsVec tau;
    uint32_t w = 0;
};
XSet x_set(const Tuple& tuple, uint32_t p);

// Action of Y^(p^s) X^(p^s) on B^(eps): alpha*B^(eps) + beta*B^(eps+e_{s+1})
// when eps_s = 0, alpha*B^(eps) when eps_s = 1.
std::map<EpsVec, uint32_t> yx_action(uint32_t s, const EpsVec& eps, const Tuple& tuple,
                                     uint32_t p);

// Basis product rule: nullopt when some position has eps_s = epst_s = 1,
// otherwise the join eps + epst.
std::optional<EpsVec> eps_product(const EpsVec& eps, const EpsVec& epst);

std::vector<EpsVec> pim_basis(const EpsVec& eps, const XSet& xs);  // theta >= eps
std::vector<EpsVec> radical_power(uint32_t i, const XSet& xs);     // W(theta) >= i

struct LoewySeries {
    uint32_t length = 0;
    std::vector<uint32_t> layer_dims;
    std::vector<std::vector<EpsVec>> rad_spans;  // rad^i spanning sets, i = 0..length
};
LoewySeries loewy_series(const EpsVec& eps, const XSet& xs);

// The block A_r * E(a,j) with its real basis elements and structure
// constants extracted from actual PBW products (the oracle path).
class BlockAlgebra {
public:
    BlockAlgebra(const Tuple& tuple, uint32_t p);

    uint32_t modulus() const { return p_; }
    uint32_t r() const { return uint32_t(xs_.tuple.size()); }
    const XSet& xset() const { return xs_; }
    const Element& basis_element(size_t idx) const { return basis_[idx]; }
    size_t dim() const { return basis_.size(); }
    size_t index_of(const EpsVec& eps) const;

    // Coordinates of an element in the B-basis; throws if not in the block.
    std::vector<uint32_t> coords(const Element& e) const;
    // Multiplication-by-basis-element matrix, from real products.
    const FpMat& mult_matrix(size_t idx) const { return mult_[idx]; }

    // Combinatorial rule vs extracted structure constants.
    bool structure_constants_match() const;
    bool yx_action_matches() const;
    bool basis_independent() const { return basis_independent_; }

private:
    uint32_t p_;
    XSet xs_;
    std::vector<Element> basis_;
    std::vector<FpMat> mult_;  // mult_[i]: coords(B_i * x) = mult_[i] * coords(x)
    bool basis_independent_ = false;
};

// Nilradical of the (commutative) block as the kernel of the iterated
// p-th-power map; the independent oracle for the weight-count radical span.
std::vector<std::vector<uint32_t>> brute_radical(const BlockAlgebra& block);

// rad^i of the block computed from brute_radical and real products;
// coordinate row-space per i = 0..w+1.
std::vector<FpMat> brute_radical_powers(const BlockAlgebra& block);

// Brute-force radical series of the PIM generated by eps (coordinates in
// the block basis), i = 0.. until zero.
std::vector<FpMat> brute_pim_radical_series(const BlockAlgebra& block, const EpsVec& eps);
// Brute-force socle series: soc^i = annihilator of rad^i inside the PIM.
std::vector<FpMat> brute_pim_socle_series(const BlockAlgebra& block, const EpsVec& eps);

// Span of a list of eps-vectors as block coordinates (0/1 rows).
FpMat eps_span(const BlockAlgebra& block, const std::vector<EpsVec>& vecs);

struct GramResult {
    FpMat gram;
    bool antidiagonal_permutation = false;  // pairs theta with tau - theta
    bool nondegenerate = false;
};
GramResult symmetric_form(const BlockAlgebra& block);

struct PimReport {
    EpsVec eps;
    uint32_t dim = 0;
    std::vector<uint32_t> loewy;  // layer dimensions
    bool rigid = false;
};

struct BlockReport {
    uint32_t p = 2, r = 1;
    Tuple tuple;
    uint32_t w = 0;
    uint32_t dim = 0;
    uint32_t weight = 0;
    std::vector<PimReport> pims;
    bool symmetric = false;
    std::map<std::string, bool> checks;

    bool all_checks_pass() const;
};

BlockReport block_report(const Tuple& tuple, uint32_t p, bool with_oracle = true);

struct CapExceeded : std::runtime_error {
    uint64_t required;
    CapExceeded(uint64_t req, uint64_t cap)
        : std::runtime_error("dimension cap exceeded: p^{2r} = " + std::to_string(req) +
                             " > " + std::to_string(cap)),
          required(req) {}
};

// All |P|^r blocks in lexicographic tuple order; refuses if p^{2r} > dim_cap.
std::vector<BlockReport> block_decomposition(uint32_t p, uint32_t r,
                                             uint64_t dim_cap = 65536,
                                             bool with_oracle = true);

}  // namespace halg

#endif
