#include "ec/powser.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <sstream>

namespace ec {

Series::Series(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw Error(ErrorKind::BadArgument, "negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

Series Series::constant(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    v[0] = c;
    return Series(std::move(v), order);
}

Series Series::x(int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    if (order >= 1) v[1] = 1;
    return Series(std::move(v), order);
}

Series Series::from_poly(const Poly& p, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
    return Series(std::move(v), order);
}

Series Series::geometric(const Rational& ratio, int order) {
    return from_function(order, [&](int n) { return rpow(ratio, n); });
}

Series Series::from_function(int order, const std::function<Rational(int)>& coeff) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) v[static_cast<std::size_t>(n)] = coeff(n);
    return Series(std::move(v), order);
}

std::optional<int> Series::valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (coeffs_[n] != 0) return static_cast<int>(n);
    return std::nullopt;
}

Series Series::truncate(int order) const {
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, static_cast<std::ptrdiff_t>(coeffs_.size()))),
                  std::min(order, this->order()));
}

Poly Series::to_poly() const { return Poly(coeffs_); }

bool operator==(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

std::string Series::to_string(const std::string& var) const {
    std::ostringstream asc;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) asc << "-";
        } else {
            asc << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            asc << a.get_str();
            continue;
        }
        if (a != 1) asc << a.get_str() << "*";
        asc << var;
        if (k > 1) asc << "^" << k;
    }
    if (first) asc << "0";
    asc << " + O(" << var << "^" << order() + 1 << ")";
    return asc.str();
}

namespace {

int common_order(const Series& a, const Series& b) { return std::min(a.order(), b.order()); }

Series multiply(const Series& a, const Series& b, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return Series(std::move(v), order);
}

void require(bool ok, ErrorKind kind, const std::string& message) {
    if (!ok) throw Error(kind, message);
}

}  // namespace

Series ps_arith(ArithKind kind, const Series& a, const Series& b) {
    int n = common_order(a, b);
    if (kind == ArithKind::Mul) return multiply(a, b, n);
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = kind == ArithKind::Add ? Rational(a[k] + b[k]) : Rational(a[k] - b[k]);
    return Series(std::move(v), n);
}

Series operator+(const Series& a, const Series& b) { return ps_arith(ArithKind::Add, a, b); }
Series operator-(const Series& a, const Series& b) { return ps_arith(ArithKind::Sub, a, b); }
Series operator*(const Series& a, const Series& b) { return ps_arith(ArithKind::Mul, a, b); }

Series operator*(const Rational& s, const Series& a) {
    std::vector<Rational> v = a.coeffs();
    for (auto& c : v) c *= s;
    return Series(std::move(v), a.order());
}

Series operator-(const Series& a) { return Rational(-1) * a; }

Series ps_inverse(const Series& a) {
    require(a[0] != 0, ErrorKind::NotInvertible, "constant term is zero");
    int n = a.order();
    Rational inv0 = 1 / a[0];
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (a[j] != 0) acc += a[j] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -acc * inv0;
    }
    return Series(std::move(b), n);
}

Series ps_compose(const Series& outer, const Series& inner) {
    require(inner[0] == 0, ErrorKind::CompositionDiverges, "inner series has nonzero constant term");
    int n = common_order(outer, inner);
    Series acc = Series::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = multiply(acc, inner, n);
        std::vector<Rational> v = acc.coeffs();
        v[0] += outer[k];
        acc = Series(std::move(v), n);
    }
    return acc;
}

Series ps_shift(const Series& a, int k) {
    int n = a.order();
    if (k >= 0)
        return Series::from_function(n + k, [&](int m) { return m < k ? Rational(0) : a[m - k]; });
    int drop = -k;
    for (int m = 0; m < drop && m <= n; ++m)
        require(a[m] == 0, ErrorKind::BadArgument, "division by x with nonzero low coefficient");
    require(n - drop >= 0, ErrorKind::BadArgument, "series too short to divide by x");
    return Series::from_function(n - drop, [&](int m) { return a[m + drop]; });
}

Series ps_derivative(const Series& a) {
    int n = a.order();
    if (n == 0) return Series::zero(0);
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) v[static_cast<std::size_t>(k - 1)] = a[k] * k;
    return Series(std::move(v), n - 1);
}

Series ps_integrate(const Series& a) {
    int n = a.order();
    std::vector<Rational> v(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k + 1)] = a[k] / (k + 1);
    return Series(std::move(v), n + 1);
}

Series ps_hadamard(const Series& a, const Series& b) {
    int n = common_order(a, b);
    return Series::from_function(n, [&](int k) { return a[k] * b[k]; });
}

Series ps_exp(const Series& a) {
    require(a[0] == 0, ErrorKind::BadConstantTerm, "exp requires a_0 = 0");
    int n = a.order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k)
            if (a[k] != 0) acc += a[k] * k * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = acc / m;
    }
    return Series(std::move(b), n);
}

Series ps_log(const Series& a) {
    require(a[0] == 1, ErrorKind::BadConstantTerm, "log requires a_0 = 1");
    if (a.order() == 0) return Series::zero(0);
    return ps_integrate(ps_derivative(a) * ps_inverse(a));
}

Series ps_pow(const Series& a, const Rational& exponent) {
    require(a[0] == 1, ErrorKind::BadConstantTerm, "power requires a_0 = 1");
    int n = a.order();
    Series binom = Series::from_function(n, [&](int k) { return binomial(exponent, static_cast<unsigned>(k)); });
    return ps_compose(binom, a - Series::constant(1, n));
}

Series ps_sqrt(const Series& a) {
    require(a[0] == 1, ErrorKind::BadConstantTerm, "sqrt requires a_0 = 1");
    return ps_pow(a, Rational(1, 2));
}

Series ps_sin(const Series& a) {
    require(a[0] == 0, ErrorKind::BadConstantTerm, "sin requires a_0 = 0");
    int n = a.order();
    Series s = Series::from_function(n, [](int k) {
        if (k % 2 == 0) return Rational(0);
        Rational r = make_rational(1, factorial(static_cast<unsigned>(k)));
        return (k / 2) % 2 ? Rational(-r) : r;
    });
    return ps_compose(s, a);
}

Series ps_cos(const Series& a) {
    require(a[0] == 0, ErrorKind::BadConstantTerm, "cos requires a_0 = 0");
    int n = a.order();
    Series c = Series::from_function(n, [](int k) {
        if (k % 2 == 1) return Rational(0);
        Rational r = make_rational(1, factorial(static_cast<unsigned>(k)));
        return (k / 2) % 2 ? Rational(-r) : r;
    });
    return ps_compose(c, a);
}

Series ps_analytic(AnalyticKind kind, const Series& a, const Rational& exponent) {
    switch (kind) {
        case AnalyticKind::Exp: return ps_exp(a);
        case AnalyticKind::Log: return ps_log(a);
        case AnalyticKind::Sqrt: return ps_sqrt(a);
        case AnalyticKind::Pow: return ps_pow(a, exponent);
        case AnalyticKind::Sin: return ps_sin(a);
        case AnalyticKind::Cos: return ps_cos(a);
    }
    throw Error(ErrorKind::BadArgument, "unknown analytic kind");
}

Series lagrange_inverse(const Series& a) {
    int n = a.order();
    require(a[0] == 0 && n >= 1 && a[1] != 0, ErrorKind::NotCompositionallyInvertible, "requires a_0 = 0 and a_1 != 0");
    // x / A(x) = 1 / (A(x) / x), known to order n - 1.
    std::vector<Rational> shifted(a.coeffs().begin() + 1, a.coeffs().end());
    Series h = ps_inverse(Series(std::move(shifted), n - 1));
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    Series hp = Series::constant(1, n - 1);
    for (int m = 1; m <= n; ++m) {
        hp = hp * h;
        out[static_cast<std::size_t>(m)] = hp[m - 1] / m;
    }
    return Series(std::move(out), n);
}

Series partition_gf(const PartitionSpec& spec, int order) {
    require(order >= 0, ErrorKind::BadArgument, "negative order");
    std::vector<int> sizes;
    for (int s = 1; s <= order; ++s) {
        bool ok = spec.parts.empty() ? (!spec.allowed || spec.allowed(s)) : spec.parts.count(s) > 0;
        if (ok) sizes.push_back(s);
    }
    require(!spec.parts.empty() || !spec.allowed || !sizes.empty() || order == 0, ErrorKind::BadArgument,
            "no part size allowed");
    std::size_t width = static_cast<std::size_t>(order) + 1;
    if (!spec.max_parts) {
        std::vector<Rational> dp(width);
        dp[0] = 1;
        for (int s : sizes) {
            if (spec.distinct) {
                for (int m = order; m >= s; --m) dp[static_cast<std::size_t>(m)] += spec.part_weight * dp[static_cast<std::size_t>(m - s)];
            } else {
                for (int m = s; m <= order; ++m) dp[static_cast<std::size_t>(m)] += spec.part_weight * dp[static_cast<std::size_t>(m - s)];
            }
        }
        return Series(std::move(dp), order);
    }
    int kmax = *spec.max_parts;
    // dp[k][m]: partitions of m into exactly k allowed parts.
    std::vector<std::vector<Integer>> dp(static_cast<std::size_t>(kmax) + 1, std::vector<Integer>(width));
    dp[0][0] = 1;
    for (int s : sizes) {
        if (spec.distinct) {
            for (int k = kmax; k >= 1; --k)
                for (int m = order; m >= s; --m) dp[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - s)];
        } else {
            for (int k = 1; k <= kmax; ++k)
                for (int m = s; m <= order; ++m) dp[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - s)];
        }
    }
    std::vector<Rational> out(width);
    for (int k = 0; k <= kmax; ++k) {
        Rational w = rpow(spec.part_weight, k);
        for (std::size_t m = 0; m < width; ++m) out[m] += w * dp[static_cast<std::size_t>(k)][m];
    }
    return Series(std::move(out), order);
}

std::vector<Poly> parameter_polys(const std::function<Series(const Rational&)>& family, int degree_bound) {
    std::vector<Rational> nodes;
    std::vector<Series> samples;
    for (int t = 0; t <= degree_bound; ++t) {
        nodes.emplace_back(t);
        samples.push_back(family(Rational(t)));
    }
    int order = samples.front().order();
    for (const auto& s : samples) order = std::min(order, s.order());
    std::vector<Poly> out;
    for (int n = 0; n <= order; ++n) {
        std::vector<Rational> ys;
        for (const auto& s : samples) ys.push_back(s[n]);
        out.push_back(interpolate(nodes, ys));
    }
    return out;
}

Series parameter_derivative(const std::function<Series(const Rational&)>& family, const Rational& at,
                            int degree_bound) {
    std::vector<Poly> polys = parameter_polys(family, degree_bound);
    std::vector<Rational> v;
    for (const auto& p : polys) v.push_back(p.derivative()(at));
    int order = static_cast<int>(v.size()) - 1;
    return Series(std::move(v), order);
}

Series egf_ogf_convert(GfConvert direction, const Series& a) {
    return Series::from_function(a.order(), [&](int n) {
        Rational f(factorial(static_cast<unsigned>(n)));
        return direction == GfConvert::EgfToOgf ? Rational(a[n] * f) : Rational(a[n] / f);
    });
}

}  // namespace ec
