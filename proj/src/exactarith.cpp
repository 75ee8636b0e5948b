#include "chernsub/exactarith.hpp"

namespace chernsub {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
    if (m <= 0) throw std::domain_error("mod_nonneg: modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

// acc *= step; acc /= i, with the division required to be exact.
void mul_divexact(Integer& acc, const Integer& step, unsigned long i) {
    acc *= step;
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), i))
        throw std::logic_error("binomial: running product not divisible at step " + std::to_string(i));
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
}

}  // namespace

Integer binomial(const Integer& n, const Integer& k) {
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    Integer kk = k;
    if (kk > n - kk) kk = n - kk;
    if (!kk.fits_ulong_p())
        throw std::overflow_error("binomial: k out of addressable range");
    const unsigned long steps = kk.get_ui();
    Integer acc(1);
    Integer factor = n - kk;  // runs n-kk+1 .. n
    for (unsigned long i = 1; i <= steps; ++i) {
        factor += 1;
        mul_divexact(acc, factor, i);
    }
    return acc;
}

Integer generalized_binomial(const Integer& m, unsigned long k) {
    Integer acc(1);
    Integer factor = m + 1;  // runs m, m-1, ..., m-k+1
    for (unsigned long i = 1; i <= k; ++i) {
        factor -= 1;
        mul_divexact(acc, factor, i);
    }
    return acc;
}

long binomial_mod_lucas(const Integer& n, const Integer& k, long p) {
    if (!is_prime(p)) throw std::domain_error("binomial_mod_lucas: " + std::to_string(p) + " is not prime");
    if (n < 0 || k < 0) throw std::domain_error("binomial_mod_lucas: n and k must be non-negative");
    Integer nn = n, kk = k;
    const unsigned long up = static_cast<unsigned long>(p);
    Integer r(1);
    while (kk > 0 || nn > 0) {
        const unsigned long nd = mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), up);
        const unsigned long kd = mpz_fdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), up);
        r *= binomial(Integer(static_cast<long>(nd)), Integer(static_cast<long>(kd)));
        r = mod_nonneg(r, p);
    }
    return r.get_si();
}

BezoutTriple ext_gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd: gcd(0, 0) is undefined");
    Integer r0 = a, r1 = b;
    Integer s0 = 1, s1 = 0;
    Integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;  // truncated division
        Integer tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {r0, s0, t0};
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace chernsub
