// Rationals are GMP mpq_class values, always kept canonical.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace eisprod {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q"; rejects anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(unsigned n, unsigned k);

// B_k with B_1 = -1/2.
const Rational& bernoulli_number(unsigned k);

// B_k(x) = sum_j C(k,j) B_j x^(k-j); note B_1(1) = +1/2.
Rational bernoulli_polynomial(unsigned k, const Rational& x);

// p/q in canonical form.
Rational make_rational(const Integer& p, const Integer& q);

Integer pow_int(const Integer& base, unsigned long e);
Rational pow_rat(const Rational& base, long e);

} // namespace eisprod
