#include "hyperalg/oprep.hpp"

namespace halg {

OperatorRep OperatorRep::of(const Element& e, uint32_t D) {
    OperatorRep rep;
    rep.p_ = e.modulus();
    rep.D_ = D;
    rep.blocks_.reserve(D + 1);
    uint32_t p = rep.p_;
    for (uint32_t d = 0; d <= D; ++d) {
        FpMat m(d + 1, d + 1, p);
        for (uint32_t a = 0; a <= d; ++a) {
            uint32_t b = d - a;
            for (auto& [mono, c] : e.terms()) {
                // left action: X first, then binom(H,.), then Y
                if (mono.xm > b) continue;
                uint32_t a1 = a + mono.xm, b1 = b - mono.xm;
                uint32_t cx = binom_mod_p(b, mono.xm, p);
                uint32_t ch = binom_mod_p(int64_t(a1) - b1, mono.hn, p);
                if (mono.ym > a1) continue;
                uint32_t a2 = a1 - mono.ym;
                uint32_t cy = binom_mod_p(a1, mono.ym, p);
                uint32_t w = mul_mod(mul_mod(cx, ch, p), mul_mod(cy, c, p), p);
                m.at(a2, a) = add_mod(m.at(a2, a), w, p);
            }
        }
        rep.blocks_.push_back(std::move(m));
    }
    return rep;
}

OperatorRep OperatorRep::compose(const OperatorRep& o) const {
    if (p_ != o.p_ || D_ != o.D_) throw std::logic_error("OperatorRep: mismatch");
    OperatorRep r;
    r.p_ = p_;
    r.D_ = D_;
    for (uint32_t d = 0; d <= D_; ++d) r.blocks_.push_back(blocks_[d] * o.blocks_[d]);
    return r;
}

std::vector<uint32_t> OperatorRep::flatten() const {
    std::vector<uint32_t> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.d.begin(), b.d.end());
    return out;
}

std::vector<uint32_t> steinberg_tensor_flatten(const Element& e, uint32_t q,
                                               uint32_t d_max) {
    const uint32_t p = e.modulus();
    std::vector<uint32_t> out;
    for (uint32_t d = 0; d <= d_max; ++d) {
        // basis of S^{q-1} (x) S^d: (a1, a2) with a1 < q, a2 <= d; the
        // divided powers act through the comultiplication on each factor
        const size_t n = size_t(q) * (d + 1);
        FpMat m(n, n, p);
        auto idx = [&](uint32_t a1, uint32_t a2) { return size_t(a1) * (d + 1) + a2; };
        for (uint32_t a1 = 0; a1 < q; ++a1)
            for (uint32_t a2 = 0; a2 <= d; ++a2) {
                uint32_t b1 = q - 1 - a1, b2 = d - a2;
                for (auto& [mono, c] : e.terms()) {
                    for (uint32_t m1 = 0; m1 <= mono.xm; ++m1) {
                        uint32_t m2 = mono.xm - m1;
                        if (m1 > b1 || m2 > b2) continue;
                        uint32_t cx = mul_mod(binom_mod_p(b1, m1, p),
                                              binom_mod_p(b2, m2, p), p);
                        if (cx == 0) continue;
                        uint32_t a1x = a1 + m1, a2x = a2 + m2;
                        int64_t w = int64_t(a1x) - (q - 1 - a1x) + int64_t(a2x) - (d - a2x);
                        uint32_t ch = binom_mod_p(w, mono.hn, p);
                        if (ch == 0) continue;
                        for (uint32_t n1 = 0; n1 <= mono.ym; ++n1) {
                            uint32_t n2 = mono.ym - n1;
                            if (n1 > a1x || n2 > a2x) continue;
                            uint32_t cy = mul_mod(binom_mod_p(a1x, n1, p),
                                                  binom_mod_p(a2x, n2, p), p);
                            uint32_t v = mul_mod(mul_mod(cx, ch, p), mul_mod(cy, c, p), p);
                            size_t row = idx(a1x - n1, a2x - n2);
                            m.at(row, idx(a1, a2)) = add_mod(m.at(row, idx(a1, a2)), v, p);
                        }
                    }
                }
            }
        out.insert(out.end(), m.d.begin(), m.d.end());
    }
    return out;
}

}  // namespace halg
