#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polytopal {

// Arbitrary-precision integers and rationals. mpq_class values are kept
// canonical throughout: reduced, denominator > 0. Every constructor path in
// this library goes through make_rational or parse_rational, both of which
// canonicalize.
using Int = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

Rational make_rational(const Int& num, const Int& den);
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);
std::string to_string(const Int& x);

bool is_prime(long p);
void require_prime(long p, const char* context);

}  // namespace polytopal
