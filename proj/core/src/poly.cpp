#include "ec/poly.hpp"

#include "ec/error.hpp"

#include <algorithm>
#include <sstream>

namespace ec {

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

double Poly::eval(double at) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly out = *this;
    out *= Rational(1) / leading();
    return out;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::reversed(int nominal_degree) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(nominal_degree, 0)) + 1);
    for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(nominal_degree - k)] = coeffs_[static_cast<std::size_t>(k)];
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(v);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (k == 0) {
            os << a.get_str();
            continue;
        }
        if (!unit) os << a.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned e) {
    Poly out(1), b = p;
    while (e) {
        if (e & 1) out *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::NotInvertible, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    Rational lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences.
    std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    Poly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc *= Poly(std::vector<Rational>{-xs[i], 1});
        acc += Poly(dd[i]);
    }
    return acc;
}

Poly binomial_poly(const Poly& x, unsigned k) {
    Poly out(1);
    for (unsigned i = 0; i < k; ++i) {
        out *= (x - Poly(Rational(i)));
        out *= Rational(1, i + 1);
    }
    return out;
}

}  // namespace ec
