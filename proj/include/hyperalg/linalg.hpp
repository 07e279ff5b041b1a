#ifndef HYPERALG_LINALG_HPP
#define HYPERALG_LINALG_HPP

#include <cstdint>
#include <vector>

#include "hyperalg/element.hpp"

namespace halg {

// Dense matrix over F_p, row-major.
struct FpMat {
    uint32_t p = 2;
    size_t nr = 0, nc = 0;
    std::vector<uint32_t> d;

    FpMat() = default;
    FpMat(size_t rows, size_t cols, uint32_t prime)
        : p(prime), nr(rows), nc(cols), d(rows * cols, 0) {}

    uint32_t& at(size_t r, size_t c) { return d[r * nc + c]; }
    uint32_t at(size_t r, size_t c) const { return d[r * nc + c]; }
    bool operator==(const FpMat&) const = default;

    FpMat operator*(const FpMat& o) const;
};

// Row-reduce in place; returns rank.  Pivot columns appended to *pivots.
size_t rref_in_place(FpMat& m, std::vector<size_t>* pivots = nullptr);
size_t rank_of(FpMat m);

// Basis of {x : M x = 0}.
std::vector<std::vector<uint32_t>> null_space(const FpMat& m);

// Canonical rref with zero rows dropped; equal spans give equal results.
FpMat row_span_canonical(FpMat m);
bool same_row_span(const FpMat& a, const FpMat& b);

enum class SpanStatus { Ok, NotInSpan, Dependent };

struct SpanSolve {
    SpanStatus status = SpanStatus::NotInSpan;
    std::vector<uint32_t> coeffs;  // valid iff status == Ok
};

// Unique coefficients of e in the span of targets; reports dependent
// targets and non-membership distinctly.
SpanSolve solve_in_span(const std::vector<Element>& targets, const Element& e);

}  // namespace halg

#endif
