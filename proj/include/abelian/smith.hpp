#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abelian/integer_matrix.hpp"

namespace abelian {

// u * source * v == s with u, v unimodular and s diagonal, each diagonal
// entry nonnegative and dividing the next.
struct SmithDecomposition {
    IntegerMatrix source;
    IntegerMatrix u;
    IntegerMatrix s;
    IntegerMatrix v;
    IntegerMatrix u_inv; // maintained alongside u; handy for coordinate lifts
    int rank = 0;        // nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

// Deterministic pivot rule: smallest nonzero entry by absolute value in the
// remaining submatrix, ties broken by lowest (row, col). track_v=false skips
// the right transform when the caller only needs u, s.
SmithDecomposition smith_normal_form(const IntegerMatrix& a, bool track_v = true);

// Column echelon form h = a * v with v unimodular. Pivot entries sit at
// strictly increasing rows; active columns are zero above the current row.
// If v_rows >= 0 only the first v_rows rows of v are stored (enough to read
// off projected kernel generators); solve() then becomes unavailable.
class ColumnEchelon {
public:
    explicit ColumnEchelon(const IntegerMatrix& a, int v_rows = -1);

    const IntegerMatrix& h() const { return h_; }
    const IntegerMatrix& v() const { return v_; }
    int pivot_count() const { return int(pivots_.size()); }
    const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }

    // basis of the column span of a (pivot columns of h)
    IntegerMatrix lattice_basis() const;
    // basis of { x : a*x = 0 }, one column per free column of h
    IntegerMatrix kernel_basis() const;

    bool in_span(const std::vector<Int>& b) const;
    // x with a*x = b, if any
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    // column-wise solve; nullopt if any column is outside the span
    std::optional<IntegerMatrix> solve_matrix(const IntegerMatrix& b) const;

private:
    bool reduce_to_pivots(std::vector<Int>& b, std::vector<Int>* y) const;

    IntegerMatrix h_;
    IntegerMatrix v_;
    std::vector<std::pair<int, int>> pivots_;
    int v_rows_;
};

} // namespace abelian
