#include "ec/cfinite.hpp"

#include "ec/error.hpp"
#include "ec/matrix.hpp"

#include <cmath>
#include <complex>

namespace ec {

LinearRecurrence::LinearRecurrence(std::vector<Rational> c, std::vector<Rational> init)
    : coeffs(std::move(c)), initial(std::move(init)) {
    if (coeffs.size() != initial.size())
        throw Error(ErrorKind::BadArgument, "recurrence needs exactly d initial terms");
    if (!coeffs.empty() && coeffs.back() == 0) throw Error(ErrorKind::BadArgument, "c_d must be nonzero");
}

std::vector<Rational> LinearRecurrence::terms(int count) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    int d = order();
    for (int n = 0; n < count; ++n) {
        if (n < d) {
            out.push_back(initial[static_cast<std::size_t>(n)]);
            continue;
        }
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) acc -= coeffs[static_cast<std::size_t>(i - 1)] * out[static_cast<std::size_t>(n - i)];
        out.push_back(acc);
    }
    return out;
}

RationalGF::RationalGF(Poly p, Poly q) : numerator(std::move(p)), denominator(std::move(q)) {
    Rational q0 = denominator.coeff(0);
    if (q0 == 0) throw Error(ErrorKind::BadArgument, "denominator must have nonzero constant term");
    if (q0 != 1) {
        numerator *= 1 / q0;
        denominator *= 1 / q0;
    }
}

Series RationalGF::series(int order) const {
    return Series::from_poly(numerator, order) * ps_inverse(Series::from_poly(denominator, order));
}

RationalGF RationalGF::reduced() const {
    if (numerator.is_zero()) return RationalGF(Poly(), Poly(1));
    Poly g = gcd(numerator, denominator);
    return RationalGF(divmod(numerator, g).first, divmod(denominator, g).first);
}

LinearRecurrence fibonacci_recurrence() { return LinearRecurrence({-1, -1}, {1, 1}); }

RationalGF rec_to_gf(const LinearRecurrence& r) {
    int d = r.order();
    std::vector<Rational> q(static_cast<std::size_t>(d) + 1);
    q[0] = 1;
    for (int i = 1; i <= d; ++i) q[static_cast<std::size_t>(i)] = r.coeffs[static_cast<std::size_t>(i - 1)];
    std::vector<Rational> p(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        Rational acc = r.initial[static_cast<std::size_t>(k)];
        for (int i = 1; i <= k; ++i) acc += r.coeffs[static_cast<std::size_t>(i - 1)] * r.initial[static_cast<std::size_t>(k - i)];
        p[static_cast<std::size_t>(k)] = acc;
    }
    return RationalGF(Poly(std::move(p)), Poly(std::move(q)));
}

LinearRecurrence gf_to_rec(const RationalGF& g) {
    int d = g.denominator.degree();
    if (g.numerator.degree() >= d)
        throw Error(ErrorKind::ImproperRational, "deg p >= deg q; split off the polynomial part first");
    std::vector<Rational> c;
    for (int i = 1; i <= d; ++i) c.push_back(g.denominator.coeff(i));
    std::vector<Rational> init;
    if (d > 0) {
        Series s = g.series(d - 1);
        init = s.coeffs();
    }
    return LinearRecurrence(std::move(c), std::move(init));
}

Rational nth_term(const LinearRecurrence& r, unsigned long n) {
    std::size_t d = r.coeffs.size();
    if (n < d) return r.initial[n];
    // Sliding window of the last d terms, oldest first.
    std::vector<Rational> window = r.initial;
    for (unsigned long m = d; m <= n; ++m) {
        Rational next = 0;
        for (std::size_t i = 1; i <= d; ++i) next -= r.coeffs[i - 1] * window[d - i];
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return d == 0 ? Rational(0) : window.back();
}

std::optional<PolynomialFit> detect_polynomial(const std::vector<Rational>& seq) {
    if (seq.size() < 2) throw Error(ErrorKind::WindowTooShort, "need at least two terms");
    std::vector<std::vector<Rational>> table{seq};
    auto all_zero = [](const std::vector<Rational>& row) {
        for (const auto& v : row)
            if (v != 0) return false;
        return true;
    };
    for (std::size_t d = 0; d + 2 <= seq.size(); ++d) {
        const auto& prev = table.back();
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        table.push_back(next);
        if (!all_zero(next)) continue;
        Poly f;
        for (std::size_t i = 0; i <= d; ++i) f += binomial_poly(Poly::x(), static_cast<unsigned>(i)) * table[i][0];
        return PolynomialFit{static_cast<int>(d), f};
    }
    return std::nullopt;
}

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> complex_roots(const Poly& p) {
    int n = p.degree();
    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(k).get_d() / p.leading().get_d();
    auto eval = [&](Complex z) {
        Complex acc = 0;
        for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
        return acc;
    };
    long double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)]));
    radius += 1;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, 0.4L + 6.283185307179586L * k / n);
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            Complex den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            Complex step = eval(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L) break;
    }
    return z;
}

}  // namespace

double dominant_growth(const RationalGF& g) {
    RationalGF r = g.reduced();
    if (r.numerator.is_zero() || r.denominator.degree() < 1)
        throw Error(ErrorKind::NoDominantRealRoot, "generating function has no poles");
    Poly q = r.denominator;
    Poly squarefree = divmod(q, gcd(q, q.derivative())).first;
    int d = q.degree();
    long double cd = std::fabs(q.leading().get_d());
    long double bound = std::pow(cd, -1.0L / d) * (1 + 1e-6L);
    // Scan (0, bound] for the first sign change, then bisect.
    const int steps = 20000;
    long double lo = 0, hi = -1;
    long double prev_x = 0;
    long double prev_v = squarefree.eval(0.0);
    for (int s = 1; s <= steps; ++s) {
        long double x = bound * s / steps;
        long double v = squarefree.eval(static_cast<double>(x));
        if (v == 0 || (v < 0) != (prev_v < 0)) {
            lo = prev_x;
            hi = x;
            break;
        }
        prev_x = x;
        prev_v = v;
    }
    if (hi < 0) throw Error(ErrorKind::NoDominantRealRoot, "no sign change of the denominator in (0, bound]");
    long double flo = squarefree.eval(static_cast<double>(lo));
    while (hi - lo > 1e-12L) {
        long double mid = (lo + hi) / 2;
        long double fm = squarefree.eval(static_cast<double>(mid));
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    long double root = (lo + hi) / 2;
    for (const Complex& z : complex_roots(squarefree)) {
        if (std::abs(z - Complex(root, 0)) < 1e-7L * std::max<long double>(1, root)) continue;
        if (std::abs(z) <= root * (1 + 1e-9L))
            throw Error(ErrorKind::NoDominantRealRoot, "another pole has modulus at most the positive root");
    }
    return static_cast<double>(1 / root);
}

std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& seq, int max_order) {
    int len = static_cast<int>(seq.size());
    bool zero = true;
    for (const auto& v : seq) zero = zero && v == 0;
    if (zero) return LinearRecurrence();
    for (int d = 1; d <= max_order; ++d) {
        int equations = len - d;
        if (equations < d + 1) break;
        // Unknowns c_1..c_d; row: sum_i c_i a_{n-i} = -a_n.
        QMatrix m(static_cast<std::size_t>(equations), static_cast<std::size_t>(d) + 1);
        for (int row = 0; row < equations; ++row) {
            int n = d + row;
            for (int i = 1; i <= d; ++i) m(static_cast<std::size_t>(row), static_cast<std::size_t>(i - 1)) = seq[static_cast<std::size_t>(n - i)];
            m(static_cast<std::size_t>(row), static_cast<std::size_t>(d)) = -seq[static_cast<std::size_t>(n)];
        }
        RowEchelon e = rref(m);
        if (!e.pivots.empty() && e.pivots.back() == static_cast<std::size_t>(d)) continue;  // inconsistent
        std::vector<Rational> c(static_cast<std::size_t>(d));
        bool last_free = true;
        for (std::size_t p : e.pivots) last_free = last_free && p != static_cast<std::size_t>(d - 1);
        Rational free_last = last_free ? Rational(1) : Rational(0);
        if (last_free) c[static_cast<std::size_t>(d - 1)] = free_last;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            std::size_t col = e.pivots[r];
            Rational v = e.reduced(r, static_cast<std::size_t>(d));
            if (last_free) v -= e.reduced(r, static_cast<std::size_t>(d - 1)) * free_last;
            c[col] = v;
        }
        if (c.back() == 0) continue;
        std::vector<Rational> init(seq.begin(), seq.begin() + d);
        LinearRecurrence rec(c, init);
        if (rec.terms(len) == seq) return rec;
    }
    return std::nullopt;
}

}  // namespace ec
