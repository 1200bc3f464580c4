#include "ec/matrix.hpp"

#include <algorithm>
#include <utility>

namespace ec {

Integer det(const ZMatrix& input) {
    if (!input.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
    std::size_t n = input.rows();
    if (n == 0) return 1;
    ZMatrix a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational det(const QMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    ZMatrix z(n, n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) z(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    return make_rational(det(z), scale);
}

Poly det(const PolyMatrix& m) {
    if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    int bound = 0;
    for (std::size_t r = 0; r < n; ++r) {
        int row_max = 0;
        for (std::size_t c = 0; c < n; ++c) row_max = std::max(row_max, m(r, c).degree());
        bound += row_max;
    }
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= bound; ++t) {
        Rational at(t);
        xs.push_back(at);
        ys.push_back(det(m.map([&](const Poly& p) { return p(at); })));
    }
    return interpolate(xs, ys);
}

Rational det_cofactor(const QMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        Rational term = m(0, c) * det_cofactor(m.minor(0, c));
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

RowEchelon rref(QMatrix a) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix power(const QMatrix& m, unsigned exponent) {
    QMatrix out = QMatrix::identity(m.rows()), b = m;
    while (exponent) {
        if (exponent & 1) out = out * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return out;
}

}  // namespace ec
