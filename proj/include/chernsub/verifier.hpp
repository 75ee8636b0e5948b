#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernsub/chern.hpp"
#include "chernsub/exactarith.hpp"
#include "chernsub/repring.hpp"

namespace chernsub {

// One divisibility fact, established along two independent paths: full
// binomial reduction mod p and the Lucas digit product.
struct CertificateEntry {
    long index = 0;  // ell for the dimension certificate, k for the pk one
    Integer value;   // the binomial coefficient itself
    long residue_direct = 0;
    long residue_lucas = 0;
    bool divisible = false;
    bool paths_agree = false;
};

// c2(phi1*(lambda_L)) decomposed along the product rule.
struct C2Breakdown {
    ExponentSeq L;
    Integer delta_L;                 // prod_i dim phi1*(lambda_{l_i})
    std::vector<Integer> delta_L_i;  // delta_L / dim phi1*(lambda_{l_i})
    std::vector<Integer> factor_c2;  // c2(phi1*(lambda_{l_i}))
    Integer total;                   // sum_i delta_L_i * factor_c2[i]
};

struct SweepSummary {
    long max_total_degree = 0;
    unsigned long long monomial_count = 0;
    bool all_divisible = true;
    std::optional<ExponentSeq> first_violation;
};

struct OracleEntry {
    long ell = 0;
    Integer subset_count;  // C(p^2, ell)
    bool checked = false;
    bool matched = false;
};

struct OracleSummary {
    Integer cap;
    std::vector<OracleEntry> entries;
    long checked = 0;
    long skipped = 0;
    bool all_matched = true;  // over the checked entries only
};

// The part-(2) data: the mod-p^2 congruence, the gcd, a Bezout pair
// hitting -p, and the achieved c2 of the corresponding virtual element.
struct BezoutCertificate {
    Integer binom;              // C(p^2-2, p-1)
    Integer p_power;            // p^{2p-1}
    Integer congruence_mod_p2;  // binom mod p^2; the claim is that this is p
    Integer gcd_value;          // gcd(binom, p_power); the claim is p
    Integer beta1;
    Integer beta2;
    Integer y_c2;  // c2 of beta1*phi1*(lambda_p) + beta2*phi1*(lambda_1)^p
    bool congruence_ok = false;
    bool gcd_ok = false;
    bool identity_ok = false;  // beta1*binom + beta2*p_power == -p, re-multiplied
    bool y_c2_ok = false;      // y_c2 == p
};

struct VerifyOptions {
    long truncation_degree = 2;       // must be >= 2
    bool run_sweep = true;
    long sweep_max_total_degree = 0;  // 0 means the default bound 2p
    bool run_oracle = false;
    Integer oracle_cap = Integer(10000000);
};

struct VerificationReport {
    long p = 0;
    bool in_scope = false;  // odd prime; p = 2 computes but never asserts
    std::vector<CertificateEntry> certificate_dim;
    bool certificate_dim_ok = false;
    std::vector<CertificateEntry> certificate_pk;
    bool certificate_pk_ok = false;
    std::vector<Integer> lambda_c2;  // c2(phi1*(lambda_ell)) for ell = 1..p^2-1
    bool lambda_c2_closed_form_ok = false;
    bool remark21_ok = false;
    BezoutCertificate bezout;
    std::optional<SweepSummary> sweep;
    std::optional<OracleSummary> oracle;
    std::optional<long> index;  // p exactly when every certificate passed in scope
    std::vector<std::string> assumptions;
    std::vector<std::pair<std::string, long long>> timings_us;
};

// Certificate A: p | C(p^2, ell) for every ell in [1, p^2-1].  With the
// product rule this covers every monomial of length >= 2 at once.
std::vector<CertificateEntry> certify_dim_divisibility(long p);

// Certificate B: p | C(p^2-2, pk-1) for k in [1, p-1], i.e. the length-1
// monomials lambda_{pk} that meet the weight-sum condition.
std::vector<CertificateEntry> certify_pk_c2_divisibility(long p);

// Product-rule breakdown of c2(phi1*(lambda_L)); cross-checked against the
// direct total-Chern computation on the Laurent product.
C2Breakdown monomial_c2(const ExponentSeq& L, long p);

// Enumerates every non-decreasing L with entries in [1, p^2-1] and
// sum <= max_total_degree and sum == 0 mod p, and checks p | c2 for each.
SweepSummary sweep_weight_condition_monomials(long p, long max_total_degree);

// Builds the virtual element achieving c2 = +p, certifying each claim it
// relies on along the way.
BezoutCertificate construct_y(long p);

// Closed form vs brute-force subset enumeration of phi1*(lambda_ell) for
// every ell whose subset count fits under cap.
OracleSummary run_oracle_sweep(long p, const Integer& cap);

VerificationReport verify_theorem(long p, const VerifyOptions& options = VerifyOptions());

}  // namespace chernsub
