#include "ec/rational.hpp"

#include "ec/error.hpp"

#include <cctype>

namespace ec {

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    std::string s = text;
    if (!valid_integer_text(s)) throw Error(ErrorKind::BadArgument, "not an integer: '" + text + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::BadArgument, "zero denominator: '" + text + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(const Integer& n, unsigned k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

Rational binomial(const Rational& r, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= (r - i);
        out /= (i + 1);
    }
    return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) { return value.get_num(); }

Integer ipow(const Integer& base, unsigned exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational rpow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw Error(ErrorKind::NotInvertible, "0 to a negative power");
        Rational inv = 1 / base;
        return rpow(inv, -exponent);
    }
    Rational out = 1, b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

double to_double(const Rational& value) { return value.get_d(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        if (n % p == 0) return n == p;
    Integer z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::uint64_t next_prime(std::uint64_t n) {
    while (!is_prime(n)) ++n;
    return n;
}

}  // namespace ec
