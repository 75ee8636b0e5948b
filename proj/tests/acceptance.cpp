// Acceptance gate for the chernsub library and CLI. Each criterion prints a
// single [PASS]/[FAIL] line with its wall time; the process exits nonzero if
// any criterion fails. Criteria 1, 2 and 7 drive the installed binary end to
// end; the rest call the library directly.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chernsub/chern.hpp"
#include "chernsub/exactarith.hpp"
#include "chernsub/repring.hpp"
#include "chernsub/verifier.hpp"

#ifndef CHERNSUB_CLI_PATH
#error "CHERNSUB_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using namespace chernsub;
using nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const fs::path out_file = fs::temp_directory_path() / ("chernsub_acc_out_" + tag);
    const fs::path err_file = fs::temp_directory_path() / ("chernsub_acc_err_" + tag);
    const std::string cmd = std::string(CHERNSUB_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    RunResult r;
    const int status = std::system(cmd.c_str());
    if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return r;
}

int g_failures = 0;

// Runs one criterion body, which appends human-readable problems to its
// argument. A criterion fails on any problem, any escaped exception, or a
// blown time budget (budget_seconds <= 0 means untimed).
void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream ss;
        ss << "took " << elapsed << "s, budget " << budget_seconds << "s";
        problems.push_back(ss.str());
    }
    if (problems.empty()) {
        std::printf("[PASS] criterion %d: %s (%.3fs)\n", number, label.c_str(), elapsed);
    } else {
        std::string joined;
        for (const auto& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        std::printf("[FAIL] criterion %d: %s: %s\n", number, label.c_str(), joined.c_str());
        ++g_failures;
    }
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

Integer parse_integer(const std::string& s) { return Integer(s); }

LaurentElement conjugate(const LaurentElement& v) {
    LaurentElement out;
    for (const auto& [w, m] : v.terms()) out.add(-w, m);
    return out;
}

LaurentElement random_virtual(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(3, 6);
    std::uniform_int_distribution<int> weight(-5, 5);
    std::uniform_int_distribution<int> mult(-10, 10);
    LaurentElement v;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i) v.add(weight(rng), Integer(mult(rng)));
    return v;
}

// Every string in the document that spells a decimal integer must survive a
// parse through mpz and back unchanged.
void check_integer_strings(const ordered_json& j, std::vector<std::string>& problems,
                           long& seen) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        bool numeric = !s.empty();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char c = s[i];
            if (i == 0 && c == '-' && s.size() > 1) continue;
            if (c < '0' || c > '9') {
                numeric = false;
                break;
            }
        }
        if (numeric) {
            ++seen;
            if (Integer(s).get_str() != s)
                problems.push_back("integer string '" + s + "' does not round-trip");
        }
    } else if (j.is_object() || j.is_array()) {
        for (const auto& child : j) check_integer_strings(child, problems, seen);
    }
}

void criterion_1(std::vector<std::string>& problems) {
    const RunResult r = run_cli("verify -p 3 --format json");
    expect(problems, r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
    if (r.exit_code != 0) return;
    const ordered_json j = ordered_json::parse(r.out);

    expect(problems, j["prime"] == 3, "prime mismatch");
    expect(problems, j["index"] == 3, "index is not 3");
    expect(problems, j["certificate_dim"]["all_divisible"] == true, "certificate A failed");
    expect(problems, j["certificate_pk"]["all_divisible"] == true, "certificate B failed");

    const std::vector<std::string> table = {"-1", "-7", "-21", "-35", "-35", "-21", "-7", "-1"};
    expect(problems, j["lambda_c2_table"]["c2"] == table, "lambda c2 table mismatch");
    expect(problems, j["lambda_c2_table"]["matches_closed_form"] == true,
           "closed form disagrees with computed c2 table");
    expect(problems, j["remark21"] == true, "remark21 check failed");
    expect(problems, j["congruence_mod_p2"] == "3", "congruence mod p^2 is not 3");
    expect(problems, j["y_c2"] == "3", "y does not achieve c2 = 3");
    expect(problems, j["sweep"]["all_divisible"] == true, "sweep found a violation");

    // Re-multiply the Bezout identity from the serialized strings alone.
    const auto& bz = j["bezout"];
    const Integer binom = parse_integer(bz["binomial"]);
    const Integer p_power = parse_integer(bz["p_power"]);
    const Integer beta1 = parse_integer(bz["beta1"]);
    const Integer beta2 = parse_integer(bz["beta2"]);
    expect(problems, beta1 * binom + beta2 * p_power == Integer(-3),
           "beta1*C + beta2*p^(2p-1) != -p when re-multiplied");
    expect(problems, binom == binomial(Integer(7), Integer(2)), "C(7,2) mismatch");
    expect(problems, p_power == pow_integer(Integer(3), 5), "3^5 mismatch");
}

void criterion_2(std::vector<std::string>& problems) {
    const struct {
        long p;
        const char* congruence;
        const char* binom;
        const char* p_power;
    } cases[] = {
        {5, "5", "8855", "1953125"},
        {7, "7", "10737573", "96889010407"},
    };
    for (const auto& c : cases) {
        const auto start = std::chrono::steady_clock::now();
        const RunResult r = run_cli("verify -p " + std::to_string(c.p) + " --format json");
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "p = " + std::to_string(c.p) + ": ";
        expect(problems, r.exit_code == 0, tag + "exit code " + std::to_string(r.exit_code));
        if (r.exit_code != 0) continue;
        expect(problems, elapsed < 10.0, tag + "run exceeded 10s");

        const ordered_json j = ordered_json::parse(r.out);
        expect(problems, j["index"] == c.p, tag + "index mismatch");
        expect(problems, j["congruence_mod_p2"] == c.congruence, tag + "congruence mismatch");
        expect(problems, j["bezout"]["binomial"] == c.binom, tag + "C(p^2-2, p-1) mismatch");
        expect(problems, j["bezout"]["p_power"] == c.p_power, tag + "p^(2p-1) mismatch");
        expect(problems, j["sweep"]["all_divisible"] == true, tag + "sweep violation");

        // Independent congruence re-check from the serialized binomial.
        const Integer binom = parse_integer(j["bezout"]["binomial"]);
        expect(problems, mod_nonneg(binom, Integer(c.p) * c.p) == c.p,
               tag + "C(p^2-2, p-1) mod p^2 != p when recomputed");
    }
}

void criterion_3(std::vector<std::string>& problems) {
    const Integer cap(10000000);
    for (long p : {3L, 5L}) {
        const OracleSummary s = run_oracle_sweep(p, cap);
        const std::string tag = "p = " + std::to_string(p) + ": ";
        expect(problems, s.checked == p * p - 1, tag + "not every ell was checked");
        expect(problems, s.skipped == 0, tag + "unexpected skips");
        expect(problems, s.all_matched, tag + "brute force disagreed with the closed form");
        for (const auto& e : s.entries)
            expect(problems, e.checked && e.matched,
                   tag + "ell = " + std::to_string(e.ell) + " not confirmed");
    }
}

void criterion_4(std::vector<std::string>& problems) {
    for (long p : {3L, 5L, 7L}) {
        const std::string tag = "p = " + std::to_string(p) + ": ";
        const auto dim = certify_dim_divisibility(p);
        expect(problems, static_cast<long>(dim.size()) == p * p - 1,
               tag + "certificate A has the wrong number of entries");
        for (const auto& e : dim)
            expect(problems,
                   e.divisible && e.paths_agree && e.residue_direct == 0 && e.residue_lucas == 0,
                   tag + "C(p^2, " + std::to_string(e.index) + ") not confirmed divisible");

        const auto pk = certify_pk_c2_divisibility(p);
        expect(problems, static_cast<long>(pk.size()) == p - 1,
               tag + "certificate B has the wrong number of entries");
        for (const auto& e : pk)
            expect(problems,
                   e.divisible && e.paths_agree && e.residue_direct == 0 && e.residue_lucas == 0,
                   tag + "C(p^2-2, " + std::to_string(e.index) + "p-1) not confirmed divisible");
    }
}

void criterion_5(std::vector<std::string>& problems) {
    std::mt19937 rng(20240817);
    const long kSystems = 120;
    for (long i = 0; i < kSystems; ++i) {
        const std::string tag = "system " + std::to_string(i) + ": ";
        const LaurentElement v = random_virtual(rng);
        const LaurentElement w = random_virtual(rng);

        // Whitney sum formula, exactly, through degree 4.
        expect(problems, total_chern(v + w, 4) == total_chern(v, 4) * total_chern(w, 4),
               tag + "Whitney formula failed");

        // The character is multiplicative for the tensor product.
        expect(problems,
               chern_character(v * w, 4) == chern_character(v, 4) * chern_character(w, 4),
               tag + "character not multiplicative");

        // Dual-path c2 on a conjugation-symmetric system (c1 = 0 by symmetry).
        const LaurentElement vm = v + conjugate(v);
        expect(problems, c1(total_chern(vm, 2)) == 0, tag + "mirrored system has c1 != 0");
        expect(problems, c2_from_character(vm) == c2(total_chern(vm, 2)),
               tag + "character route disagrees on mirrored system");

        // Dual-path c2 on an asymmetric balanced system (c1 cancelled by hand).
        LaurentElement vb = v;
        vb.add(1, -c1(total_chern(v, 2)));
        expect(problems, c1(total_chern(vb, 2)) == 0, tag + "balanced system has c1 != 0");
        expect(problems, c2_from_character(vb) == c2(total_chern(vb, 2)),
               tag + "character route disagrees on balanced system");

        // Product rule against the direct computation, on c1 = 0 factors.
        const LaurentElement wm = w + conjugate(w);
        const Integer direct = c2(total_chern(vm * wm, 2));
        const Integer via_rule = c2_product_rule(vm.dimension(), c2(total_chern(vm, 2)),
                                                 wm.dimension(), c2(total_chern(wm, 2)));
        expect(problems, direct == via_rule, tag + "product rule disagrees with direct c2");
    }
}

void criterion_6(std::vector<std::string>& problems) {
    const SweepSummary first = sweep_weight_condition_monomials(3, 12);
    const SweepSummary second = sweep_weight_condition_monomials(3, 12);
    expect(problems, first.all_divisible, "a monomial c2 escaped divisibility by 3");
    expect(problems, !first.first_violation.has_value(), "sweep recorded a violation");
    expect(problems, first.monomial_count > 0, "sweep enumerated nothing");
    expect(problems, first.monomial_count == second.monomial_count,
           "sweep count not stable across runs");
    expect(problems, first.max_total_degree == 12, "sweep bound not honored");

    // Spot re-check one monomial straight through the product rule.
    const C2Breakdown b = monomial_c2(ExponentSeq{1, 1, 1}, 3);
    expect(problems, b.total == Integer(-243), "c2(phi1*(lambda_1^3)) != -243");
    expect(problems, mod_nonneg(b.total, Integer(3)) == 0, "spot check not divisible by 3");
}

void criterion_7(std::vector<std::string>& problems) {
    const RunResult a = run_cli("verify -p 5 --format json");
    const RunResult b = run_cli("verify -p 5 --format json");
    expect(problems, a.exit_code == 0 && b.exit_code == 0, "verify runs failed");
    if (a.exit_code != 0 || b.exit_code != 0) return;

    ordered_json ja = ordered_json::parse(a.out);
    ordered_json jb = ordered_json::parse(b.out);

    expect(problems, ja.dump(2) + "\n" == a.out, "parse + re-dump is not byte-identical");

    long integer_strings_seen = 0;
    check_integer_strings(ja, problems, integer_strings_seen);
    expect(problems, integer_strings_seen >= 30, "suspiciously few integer strings in report");

    // A value far past 64 bits must also survive the string round trip.
    const Integer big = binomial(Integer(167), Integer(83));
    expect(problems, big.get_str().size() >= 45, "test value not actually big");
    expect(problems, Integer(big.get_str()) == big, "big integer string round trip failed");

    ja.erase("timings");
    jb.erase("timings");
    expect(problems, ja.dump() == jb.dump(), "reports differ beyond timings");
}

}  // namespace

int main() {
    std::printf("chernsub acceptance suite\n");

    criterion(1, "CLI verifies index 3 at p = 3 with full certificate detail", 1.0, criterion_1);
    criterion(2, "CLI verifies p = 5 and p = 7 within budget", 20.0, criterion_2);
    criterion(3, "brute-force oracle confirms every restriction at p = 3 and p = 5", 60.0,
              criterion_3);
    criterion(4, "divisibility certificates agree along both paths for p in {3, 5, 7}", 0.0,
              criterion_4);
    criterion(5, "120 randomized weight systems satisfy Whitney, character and product laws",
              0.0, criterion_5);
    criterion(6, "p = 3 sweep to total degree 12 is clean and reproducible", 0.0, criterion_6);
    criterion(7, "JSON reports are deterministic and round-trip losslessly", 0.0, criterion_7);

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
