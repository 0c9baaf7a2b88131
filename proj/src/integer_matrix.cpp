#include "abelian/integer_matrix.hpp"

#include <ostream>

#include "abelian/errors.hpp"

namespace abelian {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Int>& d) {
    IntegerMatrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); i++) m(i, i) = d[i];
    return m;
}

IntegerMatrix IntegerMatrix::scalar(int n, const Int& c) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = c;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.begin()->size());
    IntegerMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        assert(int(row.size()) == c);
        int j = 0;
        for (long x : row) m(i, j++) = x;
        i++;
    }
    return m;
}

IntegerMatrix IntegerMatrix::column_vector(const std::vector<Int>& v) {
    IntegerMatrix m(int(v.size()), 1);
    for (int i = 0; i < int(v.size()); i++) m(i, 0) = v[i];
    return m;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    assert(cols_ == o.rows_);
    IntegerMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; i++)
        for (int k = 0; k < cols_; k++) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; j++) {
                const Int& b = o(k, j);
                if (b != 0) mpz_addmul(r(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntegerMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntegerMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = -e_[i];
    return r;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Int> IntegerMatrix::column(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; i++) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntegerMatrix::row(int i) const {
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; j++) v[j] = (*this)(i, j);
    return v;
}

void IntegerMatrix::set_column(int j, const std::vector<Int>& v) {
    assert(int(v.size()) == rows_);
    for (int i = 0; i < rows_; i++) (*this)(i, j) = v[i];
}

IntegerMatrix IntegerMatrix::column_slice(int first, int count) const {
    assert(first >= 0 && count >= 0 && first + count <= cols_);
    IntegerMatrix r(rows_, count);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < count; j++) r(i, j) = (*this)(i, first + j);
    return r;
}

// Bareiss: division-free apart from exact divisions by the previous pivot.
Int IntegerMatrix::determinant() const {
    if (!is_square()) throw PreconditionError("determinant requires a square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntegerMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; j++) swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    assert(a.rows() == b.rows());
    IntegerMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); j++) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
    assert(a.cols() == b.cols());
    IntegerMatrix r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); j++) {
        for (int i = 0; i < a.rows(); i++) r(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); i++) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); i++)
        for (int j = 0; j < b.cols(); j++) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

std::vector<Int> mul(const IntegerMatrix& m, const std::vector<Int>& v) {
    assert(int(v.size()) == m.cols());
    std::vector<Int> r(m.rows());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) {
            const Int& a = m(i, j);
            if (a != 0) mpz_addmul(r[i].get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
        }
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); i++) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < m.cols(); j++) os << (j ? " " : "") << m(i, j);
        os << "]" << (i + 1 < m.rows() ? "\n" : "");
    }
    return os << "]";
}

} // namespace abelian
