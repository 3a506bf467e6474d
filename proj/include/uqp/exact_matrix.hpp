#pragma once

#include "uqp/scalar.hpp"

#include <vector>

namespace uqp {

/// Dense matrix over Q(q), used for exact rank computations.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact rank over Q(q) by fraction-free elimination.  Rows are cleared to
/// integer Laurent polynomials, the pivot is the lowest-complexity nonzero
/// entry, and rows are stripped of integer content after each step.
inline std::size_t rank_over_field(const ExactMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<LaurentPoly>> rows(R, std::vector<LaurentPoly>(C));
    for (std::size_t r = 0; r < R; ++r) {
        LaurentPoly d = LaurentPoly::one();
        for (std::size_t c = 0; c < C; ++c) {
            const Scalar& s = m.at(r, c);
            if (!s.is_laurent()) d = divexact(d * s.den(), gcd(d, s.den()));
        }
        for (std::size_t c = 0; c < C; ++c) {
            const Scalar& s = m.at(r, c);
            if (s.is_zero()) continue;
            rows[r][c] = s.num() * divexact(d, s.den());
        }
    }

    auto complexity = [](const LaurentPoly& p) {
        return p.num_terms() * 64 + static_cast<std::size_t>(p.high() - p.low());
    };
    // normalize each row once; afterwards rows may not be rescaled or the
    // Bareiss divisions stop being exact
    for (auto& row : rows) {
        Int g = 0;
        int min_low = 0;
        bool any = false;
        for (const LaurentPoly& p : row) {
            if (p.is_zero()) continue;
            g = boost::multiprecision::gcd(g, p.content());
            min_low = any ? std::min(min_low, p.low()) : p.low();
            any = true;
        }
        if (!any) continue;
        if (g < 0) g = -g;
        for (LaurentPoly& p : row) {
            if (p.is_zero()) continue;
            p.divide_content(g);
            p.shift(-min_low);
        }
    }

    std::vector<bool> col_done(C, false);
    std::size_t rank = 0;
    LaurentPoly prev = LaurentPoly::one();
    while (rank < R) {
        std::size_t pr = R, pc = C;
        std::size_t best = ~static_cast<std::size_t>(0);
        for (std::size_t r = rank; r < R; ++r)
            for (std::size_t c = 0; c < C; ++c) {
                if (col_done[c] || rows[r][c].is_zero()) continue;
                std::size_t w = complexity(rows[r][c]);
                if (w < best) { best = w; pr = r; pc = c; }
            }
        if (pr == R) break;
        std::swap(rows[rank], rows[pr]);
        const std::vector<LaurentPoly> pivot_row = rows[rank];
        const LaurentPoly& p = pivot_row[pc];
        for (std::size_t r = rank + 1; r < R; ++r) {
            LaurentPoly f = rows[r][pc];
            for (std::size_t c = 0; c < C; ++c) {
                if (col_done[c]) { rows[r][c] = LaurentPoly(); continue; }
                rows[r][c] = divexact(rows[r][c] * p - f * pivot_row[c], prev);
            }
        }
        prev = p;
        col_done[pc] = true;
        ++rank;
    }
    return rank;
}

}  // namespace uqp
