#include "chernsub/repring.hpp"

#include <algorithm>
#include <cstdint>

namespace chernsub {

namespace {

void require_prime(long p, const char* where) {
    if (!is_prime(p)) throw std::domain_error(std::string(where) + ": " + std::to_string(p) + " is not prime");
    if (p >= (1L << 15)) throw std::domain_error(std::string(where) + ": prime too large for exponent bookkeeping");
}

void require_ell_range(long ell, long p, const char* where) {
    if (ell < 1 || ell > p * p - 1)
        throw std::domain_error(std::string(where) + ": l = " + std::to_string(ell) + " outside [1, p^2-1]");
}

}  // namespace

// ---------------------------------------------------------------- Laurent

LaurentElement LaurentElement::unit() {
    return monomial(0);
}

LaurentElement LaurentElement::monomial(long weight, Integer multiplicity) {
    LaurentElement v;
    v.add(weight, multiplicity);
    return v;
}

void LaurentElement::add(long weight, const Integer& multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(weight, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LaurentElement::multiplicity(long weight) const {
    auto it = terms_.find(weight);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentElement::dimension() const {
    Integer d(0);
    for (const auto& [w, m] : terms_) d += m;
    return d;
}

bool LaurentElement::is_genuine() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

bool LaurentElement::symmetric_under_conjugation() const {
    for (const auto& [w, m] : terms_)
        if (multiplicity(-w) != m) return false;
    return true;
}

LaurentElement LaurentElement::scaled(const Integer& c) const {
    LaurentElement r;
    if (c == 0) return r;
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, m * c);
    return r;
}

LaurentElement LaurentElement::pow(unsigned long e) const {
    LaurentElement acc = unit();
    LaurentElement base = *this;
    while (e > 0) {
        if (e & 1) acc = laurent_mul(acc, base);
        e >>= 1;
        if (e) base = laurent_mul(base, base);
    }
    return acc;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
}

LaurentElement LaurentElement::operator-() const {
    LaurentElement r;
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, -m);
    return r;
}

LaurentElement laurent_mul(const LaurentElement& a, const LaurentElement& b) {
    LaurentElement r;
    for (const auto& [wa, ma] : a.terms())
        for (const auto& [wb, mb] : b.terms()) r.add(wa + wb, ma * mb);
    return r;
}

// ------------------------------------------------------------- Cyclotomic

CyclotomicElement::CyclotomicElement(long p) {
    if (p < 1) throw std::domain_error("CyclotomicElement: order must be >= 1");
    coeff_.assign(static_cast<std::size_t>(p), Integer(0));
}

CyclotomicElement CyclotomicElement::unit(long p) {
    return zeta_power(p, 0);
}

CyclotomicElement CyclotomicElement::zeta_power(long p, long e, Integer coefficient) {
    CyclotomicElement c(p);
    c.add(e, coefficient);
    return c;
}

const Integer& CyclotomicElement::coefficient(long i) const {
    if (i < 0 || i >= order()) throw std::out_of_range("CyclotomicElement::coefficient");
    return coeff_[static_cast<std::size_t>(i)];
}

void CyclotomicElement::add(long exponent, const Integer& c) {
    long p = order();
    long e = exponent % p;
    if (e < 0) e += p;
    coeff_[static_cast<std::size_t>(e)] += c;
}

CyclotomicElement CyclotomicElement::scaled(const Integer& c) const {
    CyclotomicElement r(order());
    for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] = coeff_[i] * c;
    return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (order() != o.order()) throw std::domain_error("CyclotomicElement: mixed orders");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order() != b.order()) throw std::domain_error("CyclotomicElement: mixed orders");
    const long p = a.order();
    CyclotomicElement r(p);
    for (long i = 0; i < p; ++i) {
        if (a.coeff_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < p; ++j)
            r.add(i + j, a.coeff_[static_cast<std::size_t>(i)] * b.coeff_[static_cast<std::size_t>(j)]);
    }
    return r;
}

bool in_trivial_span(const CyclotomicElement& c) {
    for (long i = 1; i < c.order(); ++i)
        if (c.coefficient(i) != 0) return false;
    return true;
}

// ------------------------------------------------------------ SUPolynomial

SUPolynomial::SUPolynomial(long p) : p_(p) {
    require_prime(p, "SUPolynomial");
}

SUPolynomial SUPolynomial::unit(long p) {
    return monomial(p, {});
}

SUPolynomial SUPolynomial::constant(long p, const Integer& c) {
    return monomial(p, {}, c);
}

SUPolynomial SUPolynomial::lambda(long p, int ell) {
    return monomial(p, {ell});
}

SUPolynomial SUPolynomial::monomial(long p, ExponentSeq L, Integer coefficient) {
    SUPolynomial x(p);
    std::sort(L.begin(), L.end());
    x.add_term(std::move(L), coefficient);
    return x;
}

Integer SUPolynomial::coefficient(const ExponentSeq& L) const {
    auto it = terms_.find(L);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SUPolynomial::add_term(ExponentSeq L, const Integer& c) {
    for (int e : L) require_ell_range(e, p_, "SUPolynomial");
    if (!std::is_sorted(L.begin(), L.end()))
        throw std::domain_error("SUPolynomial: exponent sequence must be non-decreasing");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(L), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SUPolynomial SUPolynomial::scaled(const Integer& c) const {
    SUPolynomial r(p_);
    if (c == 0) return r;
    for (const auto& [L, a] : terms_) r.terms_.emplace(L, a * c);
    return r;
}

SUPolynomial SUPolynomial::pow(unsigned long e) const {
    SUPolynomial acc = unit(p_);
    SUPolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

SUPolynomial& SUPolynomial::operator+=(const SUPolynomial& o) {
    if (p_ != o.p_) throw std::domain_error("SUPolynomial: mixed primes");
    for (const auto& [L, a] : o.terms_) add_term(L, a);
    return *this;
}

SUPolynomial& SUPolynomial::operator-=(const SUPolynomial& o) {
    if (p_ != o.p_) throw std::domain_error("SUPolynomial: mixed primes");
    for (const auto& [L, a] : o.terms_) add_term(L, -a);
    return *this;
}

SUPolynomial SUPolynomial::operator-() const {
    SUPolynomial r(p_);
    for (const auto& [L, a] : terms_) r.terms_.emplace(L, -a);
    return r;
}

SUPolynomial operator*(const SUPolynomial& a, const SUPolynomial& b) {
    if (a.p_ != b.p_) throw std::domain_error("SUPolynomial: mixed primes");
    SUPolynomial r(a.p_);
    for (const auto& [La, ca] : a.terms_) {
        for (const auto& [Lb, cb] : b.terms_) {
            ExponentSeq L;
            L.reserve(La.size() + Lb.size());
            std::merge(La.begin(), La.end(), Lb.begin(), Lb.end(), std::back_inserter(L));
            r.add_term(std::move(L), ca * cb);
        }
    }
    return r;
}

// -------------------------------------------------------- restriction maps

LaurentElement phi1_star_lambda(long ell, long p) {
    require_prime(p, "phi1_star_lambda");
    require_ell_range(ell, p, "phi1_star_lambda");
    const Integer m = Integer(p) * p - 2;
    const Integer side = binomial(m, Integer(ell) - 1);
    const Integer fixed = binomial(m, Integer(ell) - 2) + binomial(m, Integer(ell));
    LaurentElement v;
    v.add(1, side);
    v.add(-1, side);
    v.add(0, fixed);
    return v;
}

LaurentElement phi1_star(const SUPolynomial& x) {
    const long p = x.prime();
    std::map<int, LaurentElement> images;  // per-exponent cache, local to this call
    LaurentElement acc;
    for (const auto& [L, alpha] : x.terms()) {
        LaurentElement mono = LaurentElement::unit();
        for (int ell : L) {
            auto it = images.find(ell);
            if (it == images.end()) it = images.emplace(ell, phi1_star_lambda(ell, p)).first;
            mono = laurent_mul(mono, it->second);
        }
        acc += mono.scaled(alpha);
    }
    return acc;
}

CyclotomicElement delta1_star(const SUPolynomial& x) {
    const long p = x.prime();
    const Integer psq = Integer(p) * p;
    CyclotomicElement img(p);
    for (const auto& [L, alpha] : x.terms()) {
        Integer c = alpha;
        long weight_sum = 0;
        for (int ell : L) {
            c *= binomial(psq, Integer(ell));
            weight_sum += ell;
        }
        img.add(weight_sum, c);
    }
    return img;
}

bool weight_sum_condition(const SUPolynomial& x) {
    const long p = x.prime();
    for (const auto& [L, alpha] : x.terms()) {
        long s = 0;
        for (int ell : L) s += ell;
        if (s % p != 0) return false;
    }
    return true;
}

std::optional<LaurentElement> phi1_star_lambda_bruteforce(long ell, long p, const Integer& cap) {
    require_prime(p, "phi1_star_lambda_bruteforce");
    require_ell_range(ell, p, "phi1_star_lambda_bruteforce");
    const Integer subsets = binomial(Integer(p) * p, Integer(ell));
    if (subsets > cap) return std::nullopt;

    const std::size_t n = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    const std::size_t k = static_cast<std::size_t>(ell);
    std::vector<int> weight(n, 0);
    weight[0] = 1;
    weight[1] = -1;

    // Lexicographic combination odometer with an incrementally maintained sum.
    std::vector<std::size_t> idx(k);
    long sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
        sum += weight[i];
    }
    std::map<long, std::uint64_t> tally;
    for (;;) {
        ++tally[sum];
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n - k + (j - 1)) --j;
        if (j == 0) break;
        --j;
        sum -= weight[idx[j]];
        ++idx[j];
        sum += weight[idx[j]];
        for (std::size_t i = j + 1; i < k; ++i) {
            sum -= weight[idx[i]];
            idx[i] = idx[i - 1] + 1;
            sum += weight[idx[i]];
        }
    }

    LaurentElement v;
    for (const auto& [w, count] : tally) v.add(w, Integer(static_cast<unsigned long>(count)));
    return v;
}

}  // namespace chernsub
