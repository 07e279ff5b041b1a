#include "hyperalg/blocks.hpp"

#include <algorithm>

namespace halg {

uint32_t hamming_weight(const EpsVec& e) {
    uint32_t w = 0;
    for (uint8_t b : e) w += b;
    return w;
}

uint32_t hamming_dist(const EpsVec& a, const EpsVec& b) {
    uint32_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

bool eps_leq(const EpsVec& a, const EpsVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

XSet x_set(const Tuple& tuple, uint32_t p) {
    XSet xs;
    xs.tuple = tuple;
    const size_t r = tuple.size();
    std::vector<uint8_t> free_pos(r);
    for (size_t i = 0; i < r; ++i) free_pos[i] = is_free_position(tuple[i], p);
    xs.tau.assign(r, 0);
    for (size_t i = 0; i < r; ++i) xs.tau[i] = free_pos[i] ? 0 : 1;
    xs.w = hamming_weight(xs.tau);
    // lexicographic with eps_0 most significant
    for (uint64_t mask = 0; mask < (uint64_t(1) << r); ++mask) {
        EpsVec e(r, 0);
        bool ok = true;
        for (size_t i = 0; i < r; ++i) {
            e[i] = (mask >> (r - 1 - i)) & 1;
            if (e[i] && free_pos[i]) { ok = false; break; }
        }
        if (ok) xs.members.push_back(std::move(e));
    }
    return xs;
}

std::map<EpsVec, uint32_t> yx_action(uint32_t s, const EpsVec& eps, const Tuple& tuple,
                                     uint32_t p) {
    const PairAJ& pr = tuple[s];
    uint32_t alpha = alpha_of(pr, p), beta = beta_of(pr, p);
    std::map<EpsVec, uint32_t> out;
    if (alpha) out[eps] = alpha;
    if (eps[s] == 0 && beta) {
        EpsVec up = eps;
        up[s] = 1;
        out[up] = add_mod(out.count(up) ? out[up] : 0, beta, p);
    }
    return out;
}

std::optional<EpsVec> eps_product(const EpsVec& eps, const EpsVec& epst) {
    EpsVec join(eps.size());
    for (size_t i = 0; i < eps.size(); ++i) {
        if (eps[i] && epst[i]) return std::nullopt;
        join[i] = eps[i] | epst[i];
    }
    return join;
}

std::vector<EpsVec> pim_basis(const EpsVec& eps, const XSet& xs) {
    std::vector<EpsVec> out;
    for (const EpsVec& t : xs.members)
        if (eps_leq(eps, t)) out.push_back(t);
    return out;
}

std::vector<EpsVec> radical_power(uint32_t i, const XSet& xs) {
    std::vector<EpsVec> out;
    for (const EpsVec& t : xs.members)
        if (hamming_weight(t) >= i) out.push_back(t);
    return out;
}

LoewySeries loewy_series(const EpsVec& eps, const XSet& xs) {
    LoewySeries ls;
    ls.length = xs.w + 1 - hamming_weight(eps);
    for (uint32_t i = 0; i <= ls.length; ++i) {
        std::vector<EpsVec> span;
        for (const EpsVec& t : xs.members)
            if (eps_leq(eps, t) && hamming_dist(t, eps) >= i) span.push_back(t);
        ls.rad_spans.push_back(std::move(span));
    }
    for (uint32_t i = 0; i < ls.length; ++i)
        ls.layer_dims.push_back(
            uint32_t(ls.rad_spans[i].size() - ls.rad_spans[i + 1].size()));
    return ls;
}

BlockAlgebra::BlockAlgebra(const Tuple& tuple, uint32_t p)
    : p_(p), xs_(x_set(tuple, p)) {
    for (const EpsVec& e : xs_.members) basis_.push_back(b_element(e, tuple, p));
    // independence in A_r, and unique coordinates for everything below
    auto probe = solve_in_span(basis_, Element::zero(p));
    basis_independent_ = probe.status == SpanStatus::Ok;
    for (size_t i = 0; i < basis_.size(); ++i) {
        FpMat m(basis_.size(), basis_.size(), p);
        for (size_t j = 0; j < basis_.size(); ++j) {
            auto col = coords(basis_[i] * basis_[j]);
            for (size_t k = 0; k < col.size(); ++k) m.at(k, j) = col[k];
        }
        mult_.push_back(std::move(m));
    }
}

size_t BlockAlgebra::index_of(const EpsVec& eps) const {
    auto it = std::find(xs_.members.begin(), xs_.members.end(), eps);
    if (it == xs_.members.end()) throw std::invalid_argument("eps not in X_r");
    return size_t(it - xs_.members.begin());
}

std::vector<uint32_t> BlockAlgebra::coords(const Element& e) const {
    auto s = solve_in_span(basis_, e);
    if (s.status != SpanStatus::Ok)
        throw std::logic_error("BlockAlgebra: element not in block span");
    return s.coeffs;
}

bool BlockAlgebra::structure_constants_match() const {
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j) {
            auto rule = eps_product(xs_.members[i], xs_.members[j]);
            for (size_t k = 0; k < dim(); ++k) {
                uint32_t expect =
                    (rule && index_of(*rule) == k) ? 1 : 0;
                if (mult_[i].at(k, j) != expect) return false;
            }
        }
    return true;
}

bool BlockAlgebra::yx_action_matches() const {
    const uint32_t r = uint32_t(xs_.tuple.size());
    for (uint32_t s = 0; s < r; ++s) {
        Element yx = Element::monomial({uint32_t(pow_u64(p_, s)), 0,
                                        uint32_t(pow_u64(p_, s))}, 1, p_);
        for (size_t i = 0; i < dim(); ++i) {
            auto real = coords(yx * basis_[i]);
            auto rule = yx_action(s, xs_.members[i], xs_.tuple, p_);
            std::vector<uint32_t> expect(dim(), 0);
            for (auto& [e, c] : rule) expect[index_of(e)] = c;
            if (real != expect) return false;
        }
    }
    return true;
}

std::vector<std::vector<uint32_t>> brute_radical(const BlockAlgebra& block) {
    const uint32_t p = block.modulus();
    const size_t n = block.dim();
    // x -> x^p is F_p-linear in a commutative algebra of characteristic p
    FpMat frob(n, n, p);
    for (size_t i = 0; i < n; ++i) {
        Element pw = block.basis_element(i);
        for (uint32_t k = 1; k < p; ++k) pw = pw * block.basis_element(i);
        auto col = block.coords(pw);
        for (size_t k = 0; k < n; ++k) frob.at(k, i) = col[k];
    }
    uint64_t reach = p;
    FpMat m = frob;
    while (reach < n) {
        m = frob * m;
        reach *= p;
    }
    return null_space(m);
}

FpMat eps_span(const BlockAlgebra& block, const std::vector<EpsVec>& vecs) {
    FpMat m(vecs.size(), block.dim(), block.modulus());
    for (size_t i = 0; i < vecs.size(); ++i) m.at(i, block.index_of(vecs[i])) = 1;
    return m;
}

namespace {

// coordinate product u * v via the multiplication matrices
std::vector<uint32_t> coord_product(const BlockAlgebra& block,
                                    const std::vector<uint32_t>& u,
                                    const std::vector<uint32_t>& v) {
    const uint32_t p = block.modulus();
    std::vector<uint32_t> out(block.dim(), 0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        const FpMat& m = block.mult_matrix(i);
        for (size_t k = 0; k < block.dim(); ++k) {
            uint32_t acc = 0;
            for (size_t j = 0; j < block.dim(); ++j)
                acc = add_mod(acc, mul_mod(m.at(k, j), v[j], p), p);
            out[k] = add_mod(out[k], mul_mod(u[i], acc, p), p);
        }
    }
    return out;
}

std::vector<std::vector<uint32_t>> mat_rows(const FpMat& m) {
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < m.nr; ++i) {
        std::vector<uint32_t> r(m.nc);
        for (size_t j = 0; j < m.nc; ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    return rows;
}

FpMat rows_mat(const std::vector<std::vector<uint32_t>>& rows, size_t nc, uint32_t p) {
    FpMat m(rows.size(), nc, p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

std::vector<FpMat> brute_radical_powers(const BlockAlgebra& block) {
    const uint32_t p = block.modulus();
    const size_t n = block.dim();
    std::vector<FpMat> out;
    FpMat full(n, n, p);
    for (size_t i = 0; i < n; ++i) full.at(i, i) = 1;
    out.push_back(std::move(full));
    auto rad = brute_radical(block);
    FpMat cur = row_span_canonical(rows_mat(rad, n, p));
    while (true) {
        out.push_back(cur);
        if (cur.nr == 0) break;
        std::vector<std::vector<uint32_t>> next;
        for (const auto& a : rad)
            for (const auto& b : mat_rows(cur)) next.push_back(coord_product(block, a, b));
        cur = row_span_canonical(rows_mat(next, n, p));
    }
    return out;
}

std::vector<FpMat> brute_pim_radical_series(const BlockAlgebra& block, const EpsVec& eps) {
    const uint32_t p = block.modulus();
    const size_t n = block.dim();
    std::vector<uint32_t> gen(n, 0);
    gen[block.index_of(eps)] = 1;
    auto powers = brute_radical_powers(block);
    std::vector<FpMat> out;
    for (const FpMat& pw : powers) {
        std::vector<std::vector<uint32_t>> rows;
        for (const auto& v : mat_rows(pw)) rows.push_back(coord_product(block, v, gen));
        out.push_back(row_span_canonical(rows_mat(rows, n, p)));
        if (out.back().nr == 0) break;
    }
    return out;
}

std::vector<FpMat> brute_pim_socle_series(const BlockAlgebra& block, const EpsVec& eps) {
    const uint32_t p = block.modulus();
    const size_t n = block.dim();
    auto pim = pim_basis(eps, block.xset());
    const size_t m = pim.size();
    std::vector<std::vector<uint32_t>> pim_coords;
    for (const EpsVec& t : pim) {
        std::vector<uint32_t> v(n, 0);
        v[block.index_of(t)] = 1;
        pim_coords.push_back(std::move(v));
    }
    auto powers = brute_radical_powers(block);
    std::vector<FpMat> out;
    for (const FpMat& pw : powers) {
        // joint kernel of multiplication by each spanning vector of rad^i
        auto rows = mat_rows(pw);
        FpMat constraints(rows.size() * n, m, p);
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t t = 0; t < m; ++t) {
                auto prod = coord_product(block, rows[a], pim_coords[t]);
                for (size_t k = 0; k < n; ++k) constraints.at(a * n + k, t) = prod[k];
            }
        auto kern = null_space(constraints);
        std::vector<std::vector<uint32_t>> span;
        for (const auto& coeff : kern) {
            std::vector<uint32_t> v(n, 0);
            for (size_t t = 0; t < m; ++t)
                for (size_t k = 0; k < n; ++k)
                    v[k] = add_mod(v[k], mul_mod(coeff[t], pim_coords[t][k], p), p);
            span.push_back(std::move(v));
        }
        out.push_back(row_span_canonical(rows_mat(span, n, p)));
    }
    // out[i] = annihilator of rad^i = soc^i (soc^0 = 0 since rad^0 = algebra
    // acts with unity)
    return out;
}

GramResult symmetric_form(const BlockAlgebra& block) {
    const size_t n = block.dim();
    const size_t tau_idx = block.index_of(block.xset().tau);
    GramResult g;
    g.gram = FpMat(n, n, block.modulus());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            g.gram.at(i, j) = block.mult_matrix(i).at(tau_idx, j);
    g.antidiagonal_permutation = true;
    for (size_t i = 0; i < n; ++i) {
        EpsVec complement = block.xset().tau;
        const EpsVec& theta = block.xset().members[i];
        for (size_t k = 0; k < complement.size(); ++k) complement[k] -= theta[k];
        size_t ci = block.index_of(complement);
        for (size_t j = 0; j < n; ++j)
            if (g.gram.at(i, j) != (j == ci ? 1u : 0u)) g.antidiagonal_permutation = false;
    }
    g.nondegenerate = rank_of(g.gram) == n;
    return g;
}

bool BlockReport::all_checks_pass() const {
    for (auto& [k, v] : checks)
        if (!v) return false;
    return true;
}

BlockReport block_report(const Tuple& tuple, uint32_t p, bool with_oracle) {
    BlockReport rep;
    rep.p = p;
    rep.r = uint32_t(tuple.size());
    rep.tuple = tuple;
    XSet xs = x_set(tuple, p);
    rep.w = xs.w;
    rep.dim = uint32_t(xs.members.size());
    rep.weight = weight_index(tuple, p);

    if (!with_oracle) {
        for (const EpsVec& e : xs.members) {
            PimReport pr;
            pr.eps = e;
            pr.dim = uint32_t(pim_basis(e, xs).size());
            pr.loewy = loewy_series(e, xs).layer_dims;
            pr.rigid = true;  // combinatorial identity, not independently verified here
            rep.pims.push_back(std::move(pr));
        }
        rep.symmetric = true;
        rep.checks["dim_is_2_pow_w"] = rep.dim == (1u << rep.w);
        return rep;
    }

    BlockAlgebra block(tuple, p);
    rep.checks["basis_independent"] = block.basis_independent();
    rep.checks["structure_constants"] = block.structure_constants_match();
    rep.checks["yx_action"] = block.yx_action_matches();

    // radical oracle vs the weight-count spans
    auto rad_pows = brute_radical_powers(block);
    bool rad_ok = rad_pows.size() == size_t(xs.w + 2);  // last one empty at i = w+1
    for (uint32_t i = 0; i < rad_pows.size() && rad_ok; ++i)
        rad_ok = same_row_span(rad_pows[i], eps_span(block, radical_power(i, xs)));
    rep.checks["radical_powers"] = rad_ok;

    bool loewy_ok = true, rigid_ok = true;
    for (const EpsVec& e : xs.members) {
        PimReport pr;
        pr.eps = e;
        pr.dim = uint32_t(pim_basis(e, xs).size());
        LoewySeries ls = loewy_series(e, xs);
        pr.loewy = ls.layer_dims;

        auto brute_rad = brute_pim_radical_series(block, e);
        bool ok = brute_rad.size() == size_t(ls.length + 1);
        for (size_t i = 0; i < brute_rad.size() && ok; ++i)
            ok = same_row_span(brute_rad[i], eps_span(block, ls.rad_spans[i]));
        loewy_ok = loewy_ok && ok;

        auto brute_soc = brute_pim_socle_series(block, e);
        bool rg = brute_soc.size() >= size_t(ls.length + 1);
        // rigidity: soc^i = rad^{L-i}
        for (uint32_t i = 0; i <= ls.length && rg; ++i)
            rg = same_row_span(brute_soc[ls.length - i],
                               eps_span(block, ls.rad_spans[i]));
        rigid_ok = rigid_ok && rg;
        pr.rigid = rg;
        rep.pims.push_back(std::move(pr));
    }
    rep.checks["loewy_series"] = loewy_ok;
    rep.checks["rigidity"] = rigid_ok;

    GramResult g = symmetric_form(block);
    rep.symmetric = g.antidiagonal_permutation && g.nondegenerate;
    rep.checks["symmetric_gram"] = rep.symmetric;

    Element muw = mu(rep.weight, rep.r, p);
    bool wfix = true;
    for (size_t i = 0; i < block.dim(); ++i)
        wfix = wfix && (muw * block.basis_element(i) == block.basis_element(i));
    rep.checks["weight_fixation"] = wfix;
    return rep;
}

std::vector<BlockReport> block_decomposition(uint32_t p, uint32_t r, uint64_t dim_cap,
                                             bool with_oracle) {
    uint64_t dim_ar = pow_u64(p, 2 * r);
    if (dim_ar > dim_cap) throw CapExceeded(dim_ar, dim_cap);
    auto pairs = pair_set(p);
    std::vector<BlockReport> out;
    std::vector<size_t> idx(r, 0);
    while (true) {
        Tuple t;
        for (size_t i = 0; i < r; ++i) t.push_back(pairs[idx[i]]);
        out.push_back(block_report(t, p, with_oracle));
        // advance odometer, index 0 most significant
        size_t i = r;
        while (i-- > 0) {
            if (++idx[i] < pairs.size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace halg
