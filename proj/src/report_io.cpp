#include "chernsub/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace chernsub {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dec(const Integer& v) {
    return v.get_str();
}

ordered_json certificate_json(const std::vector<CertificateEntry>& entries, const char* index_name) {
    ordered_json arr = ordered_json::array();
    bool all_ok = true;
    for (const CertificateEntry& e : entries) {
        all_ok = all_ok && e.divisible && e.paths_agree;
        arr.push_back({{index_name, e.index},
                       {"binomial", dec(e.value)},
                       {"residue_direct", e.residue_direct},
                       {"residue_lucas", e.residue_lucas},
                       {"divisible", e.divisible},
                       {"paths_agree", e.paths_agree}});
    }
    return ordered_json{{"all_divisible", all_ok}, {"entries", std::move(arr)}};
}

const char* scope_string(bool in_scope) {
    return in_scope ? "odd prime (in scope)" : "p = 2 (outside theorem scope: odd primes only)";
}

ordered_json report_json(const VerificationReport& rep) {
    ordered_json j;
    j["prime"] = rep.p;
    j["scope_flag"] = scope_string(rep.in_scope);
    j["certificate_dim"] = certificate_json(rep.certificate_dim, "l");
    j["certificate_pk"] = certificate_json(rep.certificate_pk, "k");

    ordered_json table = ordered_json::array();
    for (const Integer& v : rep.lambda_c2) table.push_back(dec(v));
    j["lambda_c2_table"] = {{"c2", std::move(table)},
                            {"matches_closed_form", rep.lambda_c2_closed_form_ok}};

    j["remark21"] = rep.remark21_ok;
    j["congruence_mod_p2"] = dec(rep.bezout.congruence_mod_p2);
    j["bezout"] = {{"binomial", dec(rep.bezout.binom)},
                   {"p_power", dec(rep.bezout.p_power)},
                   {"gcd", dec(rep.bezout.gcd_value)},
                   {"beta1", dec(rep.bezout.beta1)},
                   {"beta2", dec(rep.bezout.beta2)},
                   {"congruence_ok", rep.bezout.congruence_ok},
                   {"gcd_ok", rep.bezout.gcd_ok},
                   {"identity_ok", rep.bezout.identity_ok},
                   {"y_c2_ok", rep.bezout.y_c2_ok}};
    j["y_c2"] = dec(rep.bezout.y_c2);

    if (rep.index)
        j["index"] = *rep.index;
    else
        j["index"] = nullptr;

    if (rep.sweep) {
        ordered_json s;
        s["max_total_degree"] = rep.sweep->max_total_degree;
        s["monomial_count"] = rep.sweep->monomial_count;
        s["all_divisible"] = rep.sweep->all_divisible;
        if (rep.sweep->first_violation)
            s["first_violation"] = *rep.sweep->first_violation;
        else
            s["first_violation"] = nullptr;
        j["sweep"] = std::move(s);
    } else {
        j["sweep"] = nullptr;
    }

    if (rep.oracle) {
        ordered_json entries = ordered_json::array();
        for (const OracleEntry& e : rep.oracle->entries)
            entries.push_back({{"l", e.ell},
                               {"subset_count", dec(e.subset_count)},
                               {"checked", e.checked},
                               {"matched", e.matched}});
        j["oracle"] = {{"cap", dec(rep.oracle->cap)},
                       {"checked", rep.oracle->checked},
                       {"skipped", rep.oracle->skipped},
                       {"all_matched", rep.oracle->all_matched},
                       {"entries", std::move(entries)}};
    } else {
        j["oracle"] = nullptr;
    }

    j["assumptions"] = rep.assumptions;

    ordered_json timings;
    for (const auto& [phase, us] : rep.timings_us) timings[phase] = us;
    j["timings"] = std::move(timings);

    j["version"] = kReportSchemaVersion;
    return j;
}

}  // namespace

std::string report_to_json_string(const VerificationReport& rep) {
    return report_json(rep).dump(2) + "\n";
}

std::string reports_to_json_string(const std::vector<VerificationReport>& reports) {
    if (reports.size() == 1) return report_to_json_string(reports.front());
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& rep : reports) arr.push_back(report_json(rep));
    return arr.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "prime: " << rep.p << "\n";
    os << "scope: " << scope_string(rep.in_scope) << "\n";

    os << "certificate A (p | C(p^2, l), l = 1.." << rep.p * rep.p - 1 << "): "
       << (rep.certificate_dim_ok ? "pass" : "FAIL") << "\n";
    for (const CertificateEntry& e : rep.certificate_dim)
        os << "  l = " << e.index << ": C = " << dec(e.value) << ", residue " << e.residue_direct
           << " (lucas " << e.residue_lucas << ")" << (e.divisible && e.paths_agree ? "" : "  <- FAIL")
           << "\n";

    os << "certificate B (p | C(p^2-2, pk-1), k = 1.." << rep.p - 1 << "): "
       << (rep.certificate_pk_ok ? "pass" : "FAIL") << "\n";
    for (const CertificateEntry& e : rep.certificate_pk)
        os << "  k = " << e.index << ": C = " << dec(e.value) << ", residue " << e.residue_direct
           << " (lucas " << e.residue_lucas << ")" << (e.divisible && e.paths_agree ? "" : "  <- FAIL")
           << "\n";

    os << "c2(phi1*(lambda_l)) for l = 1.." << rep.lambda_c2.size()
       << (rep.lambda_c2_closed_form_ok ? " (matches -C(p^2-2, l-1))" : " (CLOSED FORM MISMATCH)")
       << ":\n";
    for (std::size_t i = 0; i < rep.lambda_c2.size(); ++i)
        os << "  l = " << i + 1 << ": " << dec(rep.lambda_c2[i]) << "\n";

    os << "restriction to the cyclic subgroup lands in Z{1} for lambda_p and lambda_1^p: "
       << (rep.remark21_ok ? "pass" : "FAIL") << "\n";

    const BezoutCertificate& b = rep.bezout;
    os << "C(p^2-2, p-1) = " << dec(b.binom) << " == " << dec(b.congruence_mod_p2)
       << " (mod p^2): " << (b.congruence_ok ? "pass" : "FAIL") << "\n";
    os << "gcd(" << dec(b.binom) << ", " << dec(b.p_power) << ") = " << dec(b.gcd_value) << ": "
       << (b.gcd_ok ? "pass" : "FAIL") << "\n";
    os << "bezout: (" << dec(b.beta1) << ")*" << dec(b.binom) << " + (" << dec(b.beta2) << ")*"
       << dec(b.p_power) << " = -p: " << (b.identity_ok ? "pass" : "FAIL") << "\n";
    os << "c2(y) = " << dec(b.y_c2) << ": " << (b.y_c2_ok ? "pass" : "FAIL") << "\n";

    if (rep.sweep) {
        os << "sweep (sum l_i <= " << rep.sweep->max_total_degree << ", sum divisible by p): "
           << rep.sweep->monomial_count << " monomials, "
           << (rep.sweep->all_divisible ? "all c2 divisible by p" : "VIOLATION FOUND");
        if (rep.sweep->first_violation) {
            os << " at L = (";
            for (std::size_t i = 0; i < rep.sweep->first_violation->size(); ++i)
                os << (i ? ", " : "") << (*rep.sweep->first_violation)[i];
            os << ")";
        }
        os << "\n";
    }
    if (rep.oracle) {
        os << "oracle (cap " << dec(rep.oracle->cap) << "): " << rep.oracle->checked << " checked, "
           << rep.oracle->skipped << " skipped, "
           << (rep.oracle->all_matched ? "all matched" : "MISMATCH") << "\n";
        for (const OracleEntry& e : rep.oracle->entries)
            if (e.checked && !e.matched) os << "  l = " << e.ell << ": MISMATCH\n";
    }

    if (rep.index)
        os << "Chern subgroup index: " << *rep.index << "\n";
    else
        os << "Chern subgroup index: not asserted\n";

    for (const std::string& a : rep.assumptions) os << "note: " << a << "\n";
    for (const auto& [phase, us] : rep.timings_us) os << "time " << phase << ": " << us << " us\n";
    return os.str();
}

std::string format_weights(const LaurentElement& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, m] : v.terms()) {
        if (!first) os << ", ";
        first = false;
        os << w << ": " << dec(m);
    }
    os << "}";
    return os.str();
}

std::string format_series(const IntegerSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= s.degree(); ++k) {
        const Integer& c = s[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << dec(mag);
        } else {
            if (mag != 1) os << dec(mag) << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int aggregate_exit_code(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& rep : reports) {
        if (!rep.in_scope) continue;
        if (!rep.index || *rep.index != rep.p) return 1;
    }
    return 0;
}

}  // namespace chernsub
