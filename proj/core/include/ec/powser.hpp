#pragma once

#include "ec/poly.hpp"
#include "ec/rational.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ec {

// Truncated formal power series: coefficients of x^0..x^order are known.
class Series {
public:
    Series() : coeffs_(1) {}
    Series(std::vector<Rational> coeffs, int order);
    explicit Series(std::vector<Rational> coeffs);  // order = size - 1

    static Series constant(const Rational& c, int order);
    static Series zero(int order) { return constant(0, order); }
    static Series x(int order);
    static Series from_poly(const Poly& p, int order);
    static Series geometric(const Rational& ratio, int order);
    static Series from_function(int order, const std::function<Rational(int)>& coeff);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    // Index of first nonzero coefficient, or nullopt when all known coefficients vanish.
    std::optional<int> valuation() const;

    Series truncate(int order) const;
    Poly to_poly() const;

    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> coeffs_;
};

enum class ArithKind { Add, Sub, Mul };
Series ps_arith(ArithKind kind, const Series& a, const Series& b);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& s, const Series& a);
Series operator-(const Series& a);

Series ps_inverse(const Series& a);
Series ps_compose(const Series& outer, const Series& inner);

enum class AnalyticKind { Exp, Log, Sqrt, Pow, Sin, Cos };
Series ps_analytic(AnalyticKind kind, const Series& a, const Rational& exponent = Rational(1, 2));
Series ps_exp(const Series& a);
Series ps_log(const Series& a);
Series ps_sqrt(const Series& a);
Series ps_pow(const Series& a, const Rational& exponent);
Series ps_sin(const Series& a);
Series ps_cos(const Series& a);

// Multiplies by x^k; for k < 0 the low coefficients must vanish (order drops by |k|).
Series ps_shift(const Series& a, int k);

Series ps_derivative(const Series& a);
Series ps_integrate(const Series& a);
Series ps_hadamard(const Series& a, const Series& b);

// Compositional inverse via n [x^n] A^<-1> = [x^{n-1}] (x/A)^n.
Series lagrange_inverse(const Series& a);

struct PartitionSpec {
    // Explicit allowed part sizes; when empty, `allowed` decides (defaults to all sizes).
    std::set<int> parts;
    std::function<bool(int)> allowed;
    bool distinct = false;
    std::optional<int> max_parts;
    // Weight y attached to each part; the series is sum p(n, k) y^k x^n.
    Rational part_weight = 1;
};
Series partition_gf(const PartitionSpec& spec, int order);

// d/dv F(v; x) at v = at, where each coefficient of F is a polynomial in v of
// degree at most degree_bound. F is specialized at v = 0..degree_bound and
// interpolated coefficient-wise.
Series parameter_derivative(const std::function<Series(const Rational&)>& family, const Rational& at,
                            int degree_bound);
// Coefficient-wise specialization: [x^n] F(v; x) as a polynomial in v.
std::vector<Poly> parameter_polys(const std::function<Series(const Rational&)>& family, int degree_bound);

enum class GfConvert { EgfToOgf, OgfToEgf };
Series egf_ogf_convert(GfConvert direction, const Series& a);

}  // namespace ec
