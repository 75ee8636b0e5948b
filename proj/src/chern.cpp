#include "chernsub/chern.hpp"

#include <stdexcept>

namespace chernsub {

namespace {

Integer recip(const Integer& a) {
    if (a == 1 || a == -1) return a;
    throw std::domain_error("TruncatedSeries: constant term is not a unit of Z");
}

Rational recip(const Rational& a) {
    if (a == 0) throw std::domain_error("TruncatedSeries: constant term is zero");
    return Rational(1) / a;
}

}  // namespace

template <typename Coeff>
TruncatedSeries<Coeff>::TruncatedSeries(long degree) {
    if (degree < 0) throw std::domain_error("TruncatedSeries: truncation degree must be >= 0");
    coeff_.assign(static_cast<std::size_t>(degree) + 1, Coeff(0));
}

template <typename Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::one(long degree) {
    TruncatedSeries s(degree);
    s.coeff_[0] = 1;
    return s;
}

template <typename Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::inverse() const {
    const Coeff b0 = recip(coeff_[0]);
    TruncatedSeries inv(degree());
    inv.coeff_[0] = b0;
    for (std::size_t k = 1; k < coeff_.size(); ++k) {
        Coeff s(0);
        for (std::size_t j = 1; j <= k; ++j) s += coeff_[j] * inv.coeff_[k - j];
        inv.coeff_[k] = -b0 * s;
    }
    return inv;
}

template <typename Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::pow(unsigned long e) const {
    TruncatedSeries acc = one(degree());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

template <typename Coeff>
TruncatedSeries<Coeff>& TruncatedSeries<Coeff>::operator+=(const TruncatedSeries& o) {
    if (degree() != o.degree()) throw std::domain_error("TruncatedSeries: mixed truncation degrees");
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
    return *this;
}

template <typename Coeff>
TruncatedSeries<Coeff>& TruncatedSeries<Coeff>::operator-=(const TruncatedSeries& o) {
    if (degree() != o.degree()) throw std::domain_error("TruncatedSeries: mixed truncation degrees");
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
    return *this;
}

template <typename Coeff>
TruncatedSeries<Coeff> operator*(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
    if (a.degree() != b.degree()) throw std::domain_error("TruncatedSeries: mixed truncation degrees");
    TruncatedSeries<Coeff> r(a.degree());
    const std::size_t n = static_cast<std::size_t>(a.degree());
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; j <= k; ++j) r[k] += a[j] * b[k - j];
    return r;
}

template <typename Coeff>
TruncatedSeries<Coeff> operator+(TruncatedSeries<Coeff> a, const TruncatedSeries<Coeff>& b) {
    a += b;
    return a;
}

template <typename Coeff>
TruncatedSeries<Coeff> operator-(TruncatedSeries<Coeff> a, const TruncatedSeries<Coeff>& b) {
    a -= b;
    return a;
}

template class TruncatedSeries<Integer>;
template class TruncatedSeries<Rational>;
template IntegerSeries operator*(const IntegerSeries&, const IntegerSeries&);
template RationalSeries operator*(const RationalSeries&, const RationalSeries&);
template IntegerSeries operator+(IntegerSeries, const IntegerSeries&);
template RationalSeries operator+(RationalSeries, const RationalSeries&);
template IntegerSeries operator-(IntegerSeries, const IntegerSeries&);
template RationalSeries operator-(RationalSeries, const RationalSeries&);

IntegerSeries total_chern(const LaurentElement& v, long N) {
    IntegerSeries c = IntegerSeries::one(N);
    for (const auto& [a, m] : v.terms()) {
        if (a == 0) continue;  // (1 + 0*t)^m = 1
        IntegerSeries factor(N);
        Integer apow(1);
        for (long k = 0; k <= N; ++k) {
            factor[static_cast<std::size_t>(k)] =
                generalized_binomial(m, static_cast<unsigned long>(k)) * apow;
            apow *= a;
        }
        c = c * factor;
    }

    // Newton cross-check: c1 = s1 and 2*c2 = s1^2 - s2 in terms of the
    // weight power sums.  A mismatch means the product code is broken.
    if (N >= 1) {
        Integer s1(0), s2(0);
        for (const auto& [a, m] : v.terms()) {
            s1 += m * a;
            s2 += m * a * a;
        }
        if (c[1] != s1) throw std::logic_error("total_chern: t^1 coefficient disagrees with power sums");
        if (N >= 2 && Integer(2) * c[2] != s1 * s1 - s2)
            throw std::logic_error("total_chern: t^2 coefficient disagrees with power sums");
    }
    return c;
}

namespace {

const Integer& require_total_chern(const IntegerSeries& s, long need, const char* who) {
    if (s.degree() < need)
        throw std::domain_error(std::string(who) + ": truncation degree " + std::to_string(s.degree()) +
                                " too small");
    if (s[0] != 1) throw std::domain_error(std::string(who) + ": constant term is not 1");
    return s[static_cast<std::size_t>(need)];
}

}  // namespace

Integer c1(const IntegerSeries& s) {
    return require_total_chern(s, 1, "c1");
}

Integer c2(const IntegerSeries& s) {
    return require_total_chern(s, 2, "c2");
}

RationalSeries chern_character(const LaurentElement& v, long N) {
    RationalSeries ch(N);
    for (const auto& [a, m] : v.terms()) {
        Rational term(m);  // m * a^k / k!, built incrementally
        for (long k = 0; k <= N; ++k) {
            ch[static_cast<std::size_t>(k)] += term;
            term *= a;
            term /= k + 1;
        }
    }
    return ch;
}

Integer c2_from_character(const LaurentElement& v) {
    RationalSeries ch = chern_character(v, 2);
    if (ch[1] != 0) throw std::domain_error("c2_from_character: first Chern class is nonzero");
    Rational q = -ch[2];
    if (!is_integral(q)) throw std::logic_error("c2_from_character: -ch_2 is not an integer");
    Integer result = q.get_num();
    if (result != c2(total_chern(v, 2)))
        throw std::logic_error("c2_from_character: character route disagrees with total-Chern route");
    return result;
}

Integer c2_product_rule(const Integer& dim_a, const Integer& c2_a,
                        const Integer& dim_b, const Integer& c2_b) {
    return dim_b * c2_a + dim_a * c2_b;
}

}  // namespace chernsub
