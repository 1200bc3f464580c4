#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ec {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q"; throws Error(BadArgument) on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(const Integer& n, unsigned k);
// Generalized binomial coefficient r choose k for rational r.
Rational binomial(const Rational& r, unsigned k);

bool is_integer(const Rational& value);
Integer to_integer(const Rational& value);  // requires is_integer
Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, long exponent);

double to_double(const Rational& value);

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

}  // namespace ec
