#include "hyperalg/linalg.hpp"

#include <set>

namespace halg {

FpMat FpMat::operator*(const FpMat& o) const {
    if (nc != o.nr || p != o.p) throw std::logic_error("FpMat: shape/modulus mismatch");
    FpMat r(nr, o.nc, p);
    for (size_t i = 0; i < nr; ++i)
        for (size_t k = 0; k < nc; ++k) {
            uint32_t a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.nc; ++j)
                r.at(i, j) = add_mod(r.at(i, j), mul_mod(a, o.at(k, j), p), p);
        }
    return r;
}

size_t rref_in_place(FpMat& m, std::vector<size_t>* pivots) {
    size_t row = 0;
    for (size_t col = 0; col < m.nc && row < m.nr; ++col) {
        size_t pr = row;
        while (pr < m.nr && m.at(pr, col) == 0) ++pr;
        if (pr == m.nr) continue;
        if (pr != row)
            for (size_t j = 0; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(row, j));
        uint32_t inv = inv_mod(m.at(row, col), m.p);
        for (size_t j = col; j < m.nc; ++j) m.at(row, j) = mul_mod(m.at(row, j), inv, m.p);
        for (size_t i = 0; i < m.nr; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            uint32_t f = m.at(i, col);
            for (size_t j = col; j < m.nc; ++j)
                m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(row, j), m.p), m.p);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return row;
}

size_t rank_of(FpMat m) { return rref_in_place(m); }

std::vector<std::vector<uint32_t>> null_space(const FpMat& m) {
    FpMat r = m;
    std::vector<size_t> pivots;
    rref_in_place(r, &pivots);
    std::vector<bool> is_pivot(m.nc, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t free_col = 0; free_col < m.nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint32_t> v(m.nc, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = sub_mod(0, r.at(i, free_col), m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMat row_span_canonical(FpMat m) {
    size_t rk = rref_in_place(m);
    FpMat out(rk, m.nc, m.p);
    for (size_t i = 0; i < rk; ++i)
        for (size_t j = 0; j < m.nc; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

bool same_row_span(const FpMat& a, const FpMat& b) {
    return row_span_canonical(a) == row_span_canonical(b);
}

SpanSolve solve_in_span(const std::vector<Element>& targets, const Element& e) {
    uint32_t p = e.modulus();
    for (const auto& t : targets)
        if (t.modulus() != p) throw std::logic_error("solve_in_span: mixed moduli");
    std::set<Mono> monos;
    for (const auto& t : targets)
        for (auto& [m, c] : t.terms()) monos.insert(m);
    for (auto& [m, c] : e.terms()) monos.insert(m);

    const size_t k = targets.size();
    FpMat aug(monos.size(), k + 1, p);
    {
        size_t row = 0;
        for (const Mono& m : monos) {
            for (size_t j = 0; j < k; ++j) aug.at(row, j) = targets[j].coeff(m);
            aug.at(row, k) = e.coeff(m);
            ++row;
        }
    }
    {
        FpMat tm(monos.size(), k, p);
        for (size_t i = 0; i < monos.size(); ++i)
            for (size_t j = 0; j < k; ++j) tm.at(i, j) = aug.at(i, j);
        if (rank_of(std::move(tm)) < k) return {SpanStatus::Dependent, {}};
    }
    std::vector<size_t> pivots;
    size_t rk = rref_in_place(aug, &pivots);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == k) return {SpanStatus::NotInSpan, {}};
    std::vector<uint32_t> coeffs(k, 0);
    for (size_t i = 0; i < rk; ++i) coeffs[pivots[i]] = aug.at(i, k);
    return {SpanStatus::Ok, std::move(coeffs)};
}

}  // namespace halg
