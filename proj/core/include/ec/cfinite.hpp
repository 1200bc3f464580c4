#pragma once

#include "ec/poly.hpp"
#include "ec/powser.hpp"
#include "ec/rational.hpp"

#include <optional>
#include <vector>

namespace ec {

// a_n + c_1 a_{n-1} + ... + c_d a_{n-d} = 0 for n >= d, with c_d != 0.
// Order 0 encodes the zero sequence.
struct LinearRecurrence {
    std::vector<Rational> coeffs;   // c_1 .. c_d
    std::vector<Rational> initial;  // a_0 .. a_{d-1}

    LinearRecurrence() = default;
    LinearRecurrence(std::vector<Rational> c, std::vector<Rational> init);

    int order() const { return static_cast<int>(coeffs.size()); }
    std::vector<Rational> terms(int count) const;

    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

// p(x) / q(x) with q(0) = 1.
struct RationalGF {
    Poly numerator;
    Poly denominator;

    RationalGF() : denominator(1) {}
    RationalGF(Poly p, Poly q);  // rescales so q(0) = 1

    Series series(int order) const;
    // Cancels the polynomial gcd and renormalizes q(0) = 1.
    RationalGF reduced() const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

LinearRecurrence fibonacci_recurrence();

RationalGF rec_to_gf(const LinearRecurrence& r);
LinearRecurrence gf_to_rec(const RationalGF& g);
Rational nth_term(const LinearRecurrence& r, unsigned long n);

struct PolynomialFit {
    int degree;
    Poly polynomial;
};
// Least d with vanishing (d+1)-st differences on the window, or nullopt.
std::optional<PolynomialFit> detect_polynomial(const std::vector<Rational>& seq);

// Numeric estimate of the exponential growth rate 1 / (smallest positive pole).
double dominant_growth(const RationalGF& g);

std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& seq, int max_order);

}  // namespace ec
