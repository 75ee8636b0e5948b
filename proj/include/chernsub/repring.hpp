#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chernsub/exactarith.hpp"

namespace chernsub {

// Element of R(S^1) = Z[z, z^-1]: a finitely supported weight -> multiplicity
// map. Multiplicities may be negative (virtual representations); zero
// multiplicities are never stored.
class LaurentElement {
public:
    LaurentElement() = default;  // zero

    static LaurentElement unit();  // z^0
    static LaurentElement monomial(long weight, Integer multiplicity = Integer(1));

    void add(long weight, const Integer& multiplicity);

    const std::map<long, Integer>& terms() const { return terms_; }
    Integer multiplicity(long weight) const;

    // Sum of multiplicities: the (virtual) dimension of the weight system.
    Integer dimension() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_genuine() const;  // all multiplicities >= 0
    bool symmetric_under_conjugation() const;  // invariant under z <-> z^-1

    LaurentElement scaled(const Integer& c) const;
    LaurentElement pow(unsigned long e) const;

    LaurentElement& operator+=(const LaurentElement& o);
    LaurentElement& operator-=(const LaurentElement& o);
    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
    LaurentElement operator-() const;
    friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

private:
    std::map<long, Integer> terms_;
};

// Convolution of weight maps: the ring product of Z[z, z^-1].
LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b);
inline LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) { return laurent_mul(a, b); }

// Element of R(mu_p) = Z{1, zeta, ..., zeta^{p-1}}: exactly p coefficients,
// index i standing for zeta^i.
class CyclotomicElement {
public:
    explicit CyclotomicElement(long p);  // zero
    static CyclotomicElement unit(long p);
    static CyclotomicElement zeta_power(long p, long e, Integer coefficient = Integer(1));

    long order() const { return static_cast<long>(coeff_.size()); }
    const std::vector<Integer>& coefficients() const { return coeff_; }
    const Integer& coefficient(long i) const;

    void add(long exponent, const Integer& c);  // exponent taken mod p

    CyclotomicElement scaled(const Integer& c) const;
    CyclotomicElement& operator+=(const CyclotomicElement& o);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

private:
    std::vector<Integer> coeff_;
};

// true iff the zeta^1 ... zeta^{p-1} coefficients all vanish, i.e. the element
// lies in Z{1}.
bool in_trivial_span(const CyclotomicElement& c);

// Exponent sequence L indexing a monomial lambda_L = lambda_{l_1}...lambda_{l_r}:
// non-decreasing entries in [1, p^2-1]; the empty sequence is the unit.
using ExponentSeq = std::vector<int>;

// Element of R(SU(p^2)) = Z[lambda_1, ..., lambda_{p^2-1}], stored as a
// finitely supported map from canonical (sorted) exponent sequences to integer
// coefficients alpha_L.
class SUPolynomial {
public:
    explicit SUPolynomial(long p);  // zero
    static SUPolynomial unit(long p);
    static SUPolynomial constant(long p, const Integer& c);
    static SUPolynomial lambda(long p, int ell);
    // L is canonicalized by sorting; entries validated against [1, p^2-1].
    static SUPolynomial monomial(long p, ExponentSeq L, Integer coefficient = Integer(1));

    long prime() const { return p_; }
    const std::map<ExponentSeq, Integer>& terms() const { return terms_; }
    Integer coefficient(const ExponentSeq& L) const;  // alpha_L

    void add_term(ExponentSeq L, const Integer& c);

    SUPolynomial scaled(const Integer& c) const;
    SUPolynomial pow(unsigned long e) const;

    SUPolynomial& operator+=(const SUPolynomial& o);
    SUPolynomial& operator-=(const SUPolynomial& o);
    friend SUPolynomial operator+(SUPolynomial a, const SUPolynomial& b) { return a += b; }
    friend SUPolynomial operator-(SUPolynomial a, const SUPolynomial& b) { return a -= b; }
    SUPolynomial operator-() const;
    friend SUPolynomial operator*(const SUPolynomial& a, const SUPolynomial& b);
    friend bool operator==(const SUPolynomial&, const SUPolynomial&) = default;

private:
    long p_ = 0;
    std::map<ExponentSeq, Integer> terms_;
};

// Restriction of the l-th exterior power along phi_1: S^1 -> SU(p^2), as a
// weight system over the circle:
//   phi_1^*(lambda_l) = C(p^2-2, l-1) (z + z^-1) + (C(p^2-2, l-2) + C(p^2-2, l)) z^0.
// Total multiplicity is C(p^2, l) = dim lambda_l.
LaurentElement phi1_star_lambda(long ell, long p);

// Ring homomorphism phi_1^*: R(SU(p^2)) -> R(S^1), extending the above
// additively and multiplicatively.
LaurentElement phi1_star(const SUPolynomial& x);

// Ring homomorphism Delta_1^*: R(SU(p^2)) -> R(mu_p):
//   lambda_L |-> C(p^2, l_1)...C(p^2, l_r) zeta^{l_1+...+l_r}.
CyclotomicElement delta1_star(const SUPolynomial& x);

// Necessary condition for membership in Im(pi^*): every stored monomial has
// exponent sum divisible by p. Does not decide membership.
bool weight_sum_condition(const SUPolynomial& x);

// Independent oracle for phi1_star_lambda: enumerates every l-subset of the
// weight list (1, -1, 0, ..., 0) of length p^2 and tallies subset sums.
// Returns nullopt when C(p^2, l) exceeds cap (skip signal, not an error).
std::optional<LaurentElement> phi1_star_lambda_bruteforce(long ell, long p, const Integer& cap);

}  // namespace chernsub
