#include "abelian/smith.hpp"

#include "abelian/errors.hpp"

namespace abelian {

namespace {

// b -= q*a elementwise over a column/row segment, with fast paths for q = +-1.
inline void submul_entry(Int& b, const Int& q, const Int& a) {
    if (a == 0) return;
    if (q == 1)
        b -= a;
    else if (q == -1)
        b += a;
    else
        mpz_submul(b.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t());
}

} // namespace

std::vector<Int> SmithDecomposition::diagonal() const {
    int n = std::min(s.rows(), s.cols());
    std::vector<Int> d(n);
    for (int i = 0; i < n; i++) d[i] = s(i, i);
    return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a, bool track_v) {
    int nr = a.rows(), nc = a.cols();
    SmithDecomposition d;
    d.source = a;
    d.s = a;
    d.u = IntegerMatrix::identity(nr);
    d.u_inv = IntegerMatrix::identity(nr);
    if (track_v) d.v = IntegerMatrix::identity(nc);
    IntegerMatrix& s = d.s;

    auto swap_rows = [&](int r1, int r2, int from_col) {
        if (r1 == r2) return;
        for (int j = from_col; j < nc; j++) swap(s(r1, j), s(r2, j));
        for (int j = 0; j < nr; j++) {
            swap(d.u(r1, j), d.u(r2, j));
            swap(d.u_inv(j, r1), d.u_inv(j, r2));
        }
    };
    auto swap_cols = [&](int c1, int c2, int from_row) {
        if (c1 == c2) return;
        for (int i = from_row; i < nr; i++) swap(s(i, c1), s(i, c2));
        if (track_v)
            for (int i = 0; i < nc; i++) swap(d.v(i, c1), d.v(i, c2));
    };
    // row r1 -= q * row r2
    auto row_sub = [&](int r1, int r2, const Int& q, int from_col) {
        for (int j = from_col; j < nc; j++) submul_entry(s(r1, j), q, s(r2, j));
        for (int j = 0; j < nr; j++) submul_entry(d.u(r1, j), q, d.u(r2, j));
        // u_inv <- u_inv * E^{-1}: col r2 += q * col r1
        Int mq = -q;
        for (int i = 0; i < nr; i++) submul_entry(d.u_inv(i, r2), mq, d.u_inv(i, r1));
    };
    // col c1 -= q * col c2
    auto col_sub = [&](int c1, int c2, const Int& q, int from_row) {
        for (int i = from_row; i < nr; i++) submul_entry(s(i, c1), q, s(i, c2));
        if (track_v)
            for (int i = 0; i < nc; i++) submul_entry(d.v(i, c1), q, d.v(i, c2));
    };

    int steps = std::min(nr, nc);
    for (int t = 0; t < steps; t++) {
        while (true) {
            // smallest |entry| in s[t.., t..], ties by lowest (row, col);
            // a |1| is the global minimum, so the scan may stop there
            int pi = -1, pj = -1;
            bool unit = false;
            for (int i = t; i < nr && !unit; i++)
                for (int j = t; j < nc; j++) {
                    if (s(i, j) == 0) continue;
                    if (pi < 0 || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        if (mpz_cmpabs_ui(s(i, j).get_mpz_t(), 1) == 0) {
                            unit = true;
                            break;
                        }
                    }
                }
            if (pi < 0) { t = steps; break; } // remaining submatrix is zero
            swap_rows(t, pi, t);
            swap_cols(t, pj, t);

            bool clean = true;
            for (int i = t + 1; i < nr; i++) {
                if (s(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                if (q != 0) row_sub(i, t, q, t);
                if (s(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < nc; j++) {
                if (s(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                if (q != 0) col_sub(j, t, q, t);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // restore the divisibility chain: pull in a row holding a non-multiple
            bool divides_all = true;
            for (int i = t + 1; i < nr && divides_all; i++)
                for (int j = t + 1; j < nc; j++)
                    if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
                        Int mone = -1;
                        row_sub(t, i, mone, t);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (t >= steps) break;
        if (s(t, t) < 0) {
            s(t, t) = -s(t, t);
            for (int j = 0; j < nr; j++) d.u(t, j) = -d.u(t, j);
            for (int i = 0; i < nr; i++) d.u_inv(i, t) = -d.u_inv(i, t);
        }
    }

    int n = std::min(nr, nc);
    for (int i = 0; i < n; i++)
        if (s(i, i) != 0) d.rank++;
    return d;
}

ColumnEchelon::ColumnEchelon(const IntegerMatrix& a, int v_rows) : h_(a), v_rows_(v_rows) {
    int nr = a.rows(), nc = a.cols();
    int vr = v_rows < 0 ? nc : std::min(v_rows, nc);
    v_ = IntegerMatrix(vr, nc);
    for (int j = 0; j < vr; j++) v_(j, j) = 1;

    auto swap_cols = [&](int c1, int c2, int from_row) {
        if (c1 == c2) return;
        for (int i = from_row; i < nr; i++) swap(h_(i, c1), h_(i, c2));
        for (int i = 0; i < vr; i++) swap(v_(i, c1), v_(i, c2));
    };
    auto col_sub = [&](int c1, int c2, const Int& q, int from_row) {
        for (int i = from_row; i < nr; i++) submul_entry(h_(i, c1), q, h_(i, c2));
        for (int i = 0; i < vr; i++) submul_entry(v_(i, c1), q, v_(i, c2));
    };

    int p = 0;
    for (int i = 0; i < nr && p < nc; i++) {
        bool placed = false;
        while (true) {
            int pj = -1;
            for (int j = p; j < nc; j++) {
                if (h_(i, j) == 0) continue;
                if (pj < 0 || mpz_cmpabs(h_(i, j).get_mpz_t(), h_(i, pj).get_mpz_t()) < 0) {
                    pj = j;
                    if (mpz_cmpabs_ui(h_(i, j).get_mpz_t(), 1) == 0) break;
                }
            }
            if (pj < 0) break;
            placed = true;
            swap_cols(p, pj, i);
            bool clean = true;
            for (int j = p + 1; j < nc; j++) {
                if (h_(i, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), h_(i, j).get_mpz_t(), h_(i, p).get_mpz_t());
                if (q != 0) col_sub(j, p, q, i);
                if (h_(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (placed) {
            if (h_(i, p) < 0) {
                for (int r = i; r < nr; r++) h_(r, p) = -h_(r, p);
                for (int r = 0; r < vr; r++) v_(r, p) = -v_(r, p);
            }
            pivots_.push_back({i, p});
            p++;
        }
    }
}

IntegerMatrix ColumnEchelon::lattice_basis() const {
    return h_.column_slice(0, pivot_count());
}

IntegerMatrix ColumnEchelon::kernel_basis() const {
    return v_.column_slice(pivot_count(), h_.cols() - pivot_count());
}

bool ColumnEchelon::reduce_to_pivots(std::vector<Int>& b, std::vector<Int>* y) const {
    for (const auto& [pi, pj] : pivots_) {
        if (b[pi] == 0) continue;
        Int q;
        if (mpz_divisible_p(b[pi].get_mpz_t(), h_(pi, pj).get_mpz_t()) == 0) return false;
        mpz_divexact(q.get_mpz_t(), b[pi].get_mpz_t(), h_(pi, pj).get_mpz_t());
        for (int r = pi; r < h_.rows(); r++) submul_entry(b[r], q, h_(r, pj));
        if (y) (*y)[pj] = q;
    }
    for (const Int& x : b)
        if (x != 0) return false;
    return true;
}

bool ColumnEchelon::in_span(const std::vector<Int>& b) const {
    std::vector<Int> r = b;
    return reduce_to_pivots(r, nullptr);
}

std::optional<std::vector<Int>> ColumnEchelon::solve(const std::vector<Int>& b) const {
    if (v_rows_ >= 0) throw InternalError("solve requires an echelon with a full transform");
    std::vector<Int> r = b, y(h_.cols());
    if (!reduce_to_pivots(r, &y)) return std::nullopt;
    return mul(v_, y);
}

std::optional<IntegerMatrix> ColumnEchelon::solve_matrix(const IntegerMatrix& b) const {
    IntegerMatrix x(v_.rows(), b.cols());
    for (int j = 0; j < b.cols(); j++) {
        auto xj = solve(b.column(j));
        if (!xj) return std::nullopt;
        x.set_column(j, *xj);
    }
    return x;
}

} // namespace abelian
