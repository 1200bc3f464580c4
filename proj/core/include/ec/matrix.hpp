#pragma once

#include "ec/error.hpp"
#include "ec/poly.hpp"
#include "ec/rational.hpp"

#include <cstddef>
#include <vector>

namespace ec {

// Dense row-major matrix over an exact ring (Integer, Rational or Poly).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error(ErrorKind::BadArgument, "ragged matrix literal");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    // Deletes one row and one column.
    Matrix minor(std::size_t drop_row, std::size_t drop_col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == drop_row) continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == drop_col) continue;
                m(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return m;
    }

    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::BadArgument, "matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<Poly>;

Integer det(const ZMatrix& m);
// Fraction-free elimination after clearing row denominators.
Rational det(const QMatrix& m);
// Evaluation at 0..D plus interpolation, D = sum of row max degrees.
Poly det(const PolyMatrix& m);

// Cofactor expansion; exponential time, intended as a test oracle.
Rational det_cofactor(const QMatrix& m);

std::size_t rank(const QMatrix& m);

struct RowEchelon {
    QMatrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};
RowEchelon rref(QMatrix m);

QMatrix power(const QMatrix& m, unsigned exponent);

}  // namespace ec
