#pragma once

// Hermite and Smith normal forms over Z with exact arithmetic.
//
// HNF convention used throughout: row basis, lower-triangular shape.
// Rows are ordered by strictly increasing pivot column, each pivot is the
// last nonzero entry of its row and is positive, and the entries below a
// pivot (same column, later rows) are reduced into [0, pivot). This form is
// unique for a given lattice, which makes every downstream artifact
// (subgroup data, golden files) reproducible.

#include "types.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace mgproj {

// Unique HNF basis of the row span. Zero rows are dropped; the result has
// one row per lattice rank.
inline IntMat hermite_normal_form(IntMat rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::logic_error("hermite_normal_form: ragged matrix");

    // rows[0, avail) is workspace; placed pivot rows accumulate at the tail.
    std::size_t avail = rows.size();
    for (std::size_t c_plus = cols; c_plus > 0; --c_plus) {
        const std::size_t c = c_plus - 1;
        // Euclid over the workspace rows until one nonzero entry remains in column c.
        for (;;) {
            std::size_t best = avail;
            for (std::size_t i = 0; i < avail; ++i) {
                if (rows[i][c] == 0) continue;
                if (best == avail || abs_int(rows[i][c]) < abs_int(rows[best][c])) best = i;
            }
            if (best == avail) break;  // column clear
            bool reduced_any = false;
            for (std::size_t i = 0; i < avail; ++i) {
                if (i == best || rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[best][c];  // truncated: shrinks |entry|
                if (q != 0)
                    for (std::size_t j = 0; j <= c; ++j) rows[i][j] -= q * rows[best][j];
                reduced_any = true;
            }
            if (!reduced_any) {
                // best is the unique nonzero: place it as the pivot row for column c.
                --avail;
                std::swap(rows[best], rows[avail]);
                if (rows[avail][c] < 0)
                    for (auto& e : rows[avail]) e = -e;
                // Reduce this column in the already-placed rows (below the pivot).
                for (std::size_t i = avail + 1; i < rows.size(); ++i) {
                    Int q = floor_div(rows[i][c], rows[avail][c]);
                    if (q != 0)
                        for (std::size_t j = 0; j <= c; ++j) rows[i][j] -= q * rows[avail][j];
                }
                break;
            }
        }
        if (avail == 0) break;
    }
    rows.erase(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(avail));
    return rows;
}

// Pivot column of each HNF row (its last nonzero entry).
inline std::vector<std::size_t> pivot_columns(const IntMat& basis) {
    std::vector<std::size_t> piv;
    piv.reserve(basis.size());
    for (const auto& row : basis) {
        std::size_t c = row.size();
        while (c > 0 && row[c - 1] == 0) --c;
        if (c == 0) throw std::logic_error("pivot_columns: zero row in basis");
        piv.push_back(c - 1);
    }
    return piv;
}

inline std::size_t lattice_rank(const IntMat& rows) { return hermite_normal_form(rows).size(); }

// Canonical residue of v modulo the lattice: pivot coordinates end up in
// [0, pivot); two vectors reduce equally iff they are congruent mod the lattice.
inline IntVec reduce_by_hnf(const IntMat& basis, IntVec v) {
    const auto piv = pivot_columns(basis);
    for (std::size_t i_plus = basis.size(); i_plus > 0; --i_plus) {
        const std::size_t i = i_plus - 1;
        Int q = floor_div(v[piv[i]], basis[i][piv[i]]);
        if (q != 0)
            for (std::size_t j = 0; j <= piv[i]; ++j) v[j] -= q * basis[i][j];
    }
    return v;
}

inline bool hnf_contains(const IntMat& basis, const IntVec& v) {
    IntVec r = reduce_by_hnf(basis, v);
    return std::all_of(r.begin(), r.end(), [](const Int& e) { return e == 0; });
}

// Unique rational solution y of y * basis = v (HNF rows are independent),
// or nullopt when v is outside the rational row span.
inline std::optional<RatVec> solve_in_rowspace(const IntMat& basis, const IntVec& v) {
    const auto piv = pivot_columns(basis);
    RatVec w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j];
    RatVec y(basis.size());
    for (std::size_t i_plus = basis.size(); i_plus > 0; --i_plus) {
        const std::size_t i = i_plus - 1;
        Rat q = w[piv[i]] / Rat(basis[i][piv[i]]);
        y[i] = q;
        if (q != 0)
            for (std::size_t j = 0; j <= piv[i]; ++j) w[j] -= q * Rat(basis[i][j]);
    }
    for (const auto& e : w)
        if (e != 0) return std::nullopt;
    return y;
}

struct SmithDecomposition {
    std::vector<Int> diagonal;  // length min(m, n); positive chain, then zeros
    IntMat right;               // V, n x n unimodular: input * V has the diagonal form
    std::size_t rank = 0;       // nonzero diagonal entries
};

// Smith normal form tracking only the right (column) transform, which is all
// the membership conditions need. Deterministic pivot choice.
inline SmithDecomposition smith_normal_form(IntMat a, std::size_t cols) {
    const std::size_t m = a.size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::logic_error("smith_normal_form: ragged matrix");
    SmithDecomposition out;
    out.right.assign(cols, IntVec(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) out.right[j][j] = 1;

    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (auto& row : a) std::swap(row[c1], row[c2]);
        for (auto& row : out.right) std::swap(row[c1], row[c2]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        // column dst -= q * column src
        if (q == 0) return;
        for (auto& row : a) row[dst] -= q * row[src];
        for (auto& row : out.right) row[dst] -= q * row[src];
    };

    const std::size_t steps = std::min(m, cols);
    std::size_t t = 0;
    while (t < steps) {
        // smallest |entry| in the trailing submatrix, row-major tie break
        std::size_t pi = m, pj = cols;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi == m || abs_int(a[i][j]) < abs_int(a[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;  // trailing block is zero
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder strictly smaller: promote it
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                add_col(j, t, q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        // Divisibility: pivot must divide every remaining entry.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    fixed = true;
                }
        if (fixed) continue;  // redo step t with the widened row
        if (a[t][t] < 0)
            for (std::size_t j = t; j < cols; ++j) a[t][j] = -a[t][j];
        ++t;
    }
    out.diagonal.assign(steps, Int(0));
    for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a[i][i];
    out.rank = t;
    return out;
}

// Invariant factors (diagonal > 1) of the quotient Z^cols / rowspan(rows);
// factors equal to 1 are dropped, zeros signal free directions and are not included.
inline std::vector<Int> smith_invariant_factors(const IntMat& rows, std::size_t cols) {
    auto snf = smith_normal_form(rows, cols);
    std::vector<Int> factors;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal[i] > 1) factors.push_back(snf.diagonal[i]);
    return factors;
}

}  // namespace mgproj
