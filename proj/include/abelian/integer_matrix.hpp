#pragma once

#include <gmpxx.h>

#include <cassert>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace abelian {

using Int = mpz_class;

// Dense matrix over Z with arbitrary-precision entries, row-major storage.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static IntegerMatrix identity(int n);
    static IntegerMatrix diagonal(const std::vector<Int>& d);
    // n x n scalar matrix c*I
    static IntegerMatrix scalar(int n, const Int& c);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix column_vector(const std::vector<Int>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }
    const Int& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator+(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;
    IntegerMatrix operator-() const;
    IntegerMatrix transpose() const;

    std::vector<Int> column(int j) const;
    std::vector<Int> row(int i) const;
    void set_column(int j, const std::vector<Int>& v);
    // columns [first, first+count) as a new matrix
    IntegerMatrix column_slice(int first, int count) const;

    // Exact determinant by fraction-free elimination; square matrices only.
    Int determinant() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Int> mul(const IntegerMatrix& m, const std::vector<Int>& v);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

} // namespace abelian
