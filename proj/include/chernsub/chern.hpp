#pragma once

#include <cstddef>
#include <vector>

#include "chernsub/exactarith.hpp"
#include "chernsub/repring.hpp"

namespace chernsub {

// Polynomial in t truncated at degree N: coefficients for t^0 .. t^N,
// arithmetic silently discards anything of higher degree.  Chern classes
// live in the Integer instantiation, Chern characters in the Rational one.
template <typename Coeff>
class TruncatedSeries {
public:
    explicit TruncatedSeries(long degree);

    static TruncatedSeries one(long degree);

    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const std::vector<Coeff>& coefficients() const { return coeff_; }

    const Coeff& operator[](std::size_t k) const { return coeff_.at(k); }
    Coeff& operator[](std::size_t k) { return coeff_.at(k); }

    // Multiplicative inverse modulo t^{N+1}; the constant term must be a
    // unit of the coefficient ring (+-1 over Integer, nonzero over Rational).
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned long e) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);

    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

private:
    std::vector<Coeff> coeff_;
};

template <typename Coeff>
TruncatedSeries<Coeff> operator*(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b);

template <typename Coeff>
TruncatedSeries<Coeff> operator+(TruncatedSeries<Coeff> a, const TruncatedSeries<Coeff>& b);

template <typename Coeff>
TruncatedSeries<Coeff> operator-(TruncatedSeries<Coeff> a, const TruncatedSeries<Coeff>& b);

using IntegerSeries = TruncatedSeries<Integer>;
using RationalSeries = TruncatedSeries<Rational>;

extern template class TruncatedSeries<Integer>;
extern template class TruncatedSeries<Rational>;
extern template IntegerSeries operator*(const IntegerSeries&, const IntegerSeries&);
extern template RationalSeries operator*(const RationalSeries&, const RationalSeries&);
extern template IntegerSeries operator+(IntegerSeries, const IntegerSeries&);
extern template RationalSeries operator+(RationalSeries, const RationalSeries&);
extern template IntegerSeries operator-(IntegerSeries, const IntegerSeries&);
extern template RationalSeries operator-(RationalSeries, const RationalSeries&);

// Total Chern class of a virtual weight system: prod_a (1 + a t)^{m_a}
// truncated at t^N.  Negative multiplicities go through the generalized
// binomial series, i.e. the truncated inverse of the genuine factor.
IntegerSeries total_chern(const LaurentElement& v, long N);

// Coefficient extraction from a total Chern class (constant term must be 1).
Integer c1(const IntegerSeries& s);
Integer c2(const IntegerSeries& s);

// Chern character: sum_a m_a sum_{k<=N} a^k t^k / k!.  Ring homomorphism.
RationalSeries chern_character(const LaurentElement& v, long N);

// c2 along the character route: -ch_2(v), defined when c1(v) = 0.  The
// result is cross-checked against the total-Chern route before returning.
Integer c2_from_character(const LaurentElement& v);

// c2(xi (x) eta) = (dim eta) c2(xi) + (dim xi) c2(eta), valid when both
// first Chern classes vanish.  The caller asserts that precondition.
Integer c2_product_rule(const Integer& dim_a, const Integer& c2_a,
                        const Integer& dim_b, const Integer& c2_b);

}  // namespace chernsub
