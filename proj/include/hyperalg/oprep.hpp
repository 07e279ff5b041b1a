#ifndef HYPERALG_OPREP_HPP
#define HYPERALG_OPREP_HPP

#include "hyperalg/linalg.hpp"

namespace halg {

// Independent multiplication oracle: U acts on k[x,y] by
//   X^(m):       x^a y^b -> binom(b, m) x^{a+m} y^{b-m}
//   Y^(m):       x^a y^b -> binom(a, m) x^{a-m} y^{b+m}
//   binom(H,n):  x^a y^b -> binom(a-b, n) x^a y^b
// preserving total degree.  One matrix block per degree d <= D on the
// basis {x^a y^{d-a} : a = 0..d}.
class OperatorRep {
public:
    static OperatorRep of(const Element& e, uint32_t degree_bound);

    uint32_t modulus() const { return p_; }
    uint32_t degree_bound() const { return D_; }
    const FpMat& block(uint32_t d) const { return blocks_[d]; }

    OperatorRep compose(const OperatorRep& o) const;  // this, then o: rep(e1*e2)
    bool operator==(const OperatorRep&) const = default;

    std::vector<uint32_t> flatten() const;  // all block entries concatenated

private:
    OperatorRep() = default;
    uint32_t p_ = 2, D_ = 0;
    std::vector<FpMat> blocks_;
};

// Matrix entries of e acting on the direct sum of S^{q-1} (x) S^d over
// d = 0..d_max, concatenated blockwise.  The single-pair symmetric powers
// alone are not a faithful U_r-module family (e.g. Y(1)X(1) + Y(1)H(1)X(1)
// kills every S^d at p = 2); tensoring with the top power S^{q-1} makes
// each summand projective over U_r, so for q = p^r and d_max = p^r - 1 the
// family separates all of U_r.  Used by the faithfulness rank check.
std::vector<uint32_t> steinberg_tensor_flatten(const Element& e, uint32_t q,
                                               uint32_t d_max);

}  // namespace halg

#endif
