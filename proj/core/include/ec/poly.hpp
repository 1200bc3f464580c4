#pragma once

#include "ec/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ec {

// Dense univariate polynomial over Q, coefficients in increasing degree.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(1, 1); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;
    double eval(double at) const;

    Poly derivative() const;
    Poly monic() const;
    Poly compose(const Poly& inner) const;
    // p(x) -> x^deg p(1/x) with respect to the given nominal degree.
    Poly reversed(int nominal_degree) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned e);

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Falling-factorial style basis: binomial(x, k) as a polynomial in x.
Poly binomial_poly(const Poly& x, unsigned k);

}  // namespace ec
