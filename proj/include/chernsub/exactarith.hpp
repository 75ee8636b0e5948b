#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chernsub {

// Exact scalars. Every coefficient, dimension, binomial and Bezout datum in
// this library lives in Z or Q; nothing anywhere touches floating point.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
// Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integral(const Rational& q);

// Trial division; intended for single-word inputs.
bool is_prime(long n);

// a mod m in [0, m) for m > 0.
Integer mod_nonneg(const Integer& a, const Integer& m);

// C(n, k) for n >= 0, by the multiplicative running product with an exact
// division at each step. Returns 0 for k < 0 or k > n. Rejects n < 0.
Integer binomial(const Integer& n, const Integer& k);

// C(m, k) = m(m-1)...(m-k+1)/k! for arbitrary integer m, including negative.
// Backs truncated powers (1 + a*t)^m of virtual line-bundle factors.
Integer generalized_binomial(const Integer& m, unsigned long k);

// C(n, k) mod p by Lucas' theorem: the product of digit-wise binomials of the
// base-p expansions. Rejects non-prime p and negative n, k.
long binomial_mod_lucas(const Integer& n, const Integer& k, long p);

struct BezoutTriple {
    Integer g;  // gcd(|a|, |b|) >= 0
    Integer u;
    Integer v;  // u*a + v*b == g
};

// Extended Euclid. Deterministic; rejects (0, 0).
BezoutTriple ext_gcd(const Integer& a, const Integer& b);

Integer pow_integer(const Integer& base, unsigned long exp);

}  // namespace chernsub
