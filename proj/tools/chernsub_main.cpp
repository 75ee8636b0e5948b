#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chernsub/chern.hpp"
#include "chernsub/expr.hpp"
#include "chernsub/report_io.hpp"
#include "chernsub/verifier.hpp"

namespace {

using namespace chernsub;

Integer parse_cap(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::domain_error("invalid cap '" + text + "': expected a non-negative decimal integer");
    return Integer(text, 10);
}

int emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    out << body;
    return 0;
}

int run_verify(const std::vector<long>& primes, const std::string& format, const std::string& out_path,
               long truncation, long sweep_degree, bool no_sweep, bool with_oracle,
               const std::string& cap_text) {
    for (long p : primes) {
        if (!is_prime(p)) {
            std::cerr << p << " is not prime\n";
            return 2;
        }
    }
    if (truncation < 2) {
        std::cerr << "truncation degree must be >= 2 for verify\n";
        return 2;
    }

    VerifyOptions opt;
    opt.truncation_degree = truncation;
    opt.run_sweep = !no_sweep;
    opt.sweep_max_total_degree = sweep_degree;
    opt.run_oracle = with_oracle;
    opt.oracle_cap = parse_cap(cap_text);

    std::vector<VerificationReport> reports;
    reports.reserve(primes.size());
    for (long p : primes) reports.push_back(verify_theorem(p, opt));

    std::string body;
    if (format == "json") {
        body = reports_to_json_string(reports);
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) body += "\n";
            body += report_to_text(reports[i]);
        }
    }
    if (int rc = emit(body, out_path)) return rc;
    return aggregate_exit_code(reports);
}

int run_chern(long p, long truncation, const std::string& expr_text) {
    if (!is_prime(p)) {
        std::cerr << p << " is not prime\n";
        return 2;
    }
    if (truncation < 0) {
        std::cerr << "truncation degree must be >= 0\n";
        return 2;
    }

    SUPolynomial x(p);
    try {
        x = parse_lambda_expression(expr_text, p);
    } catch (const ExprError& e) {
        std::cerr << e.what() << "\n  " << expr_text << "\n  " << std::string(e.position(), ' ')
                  << "^\n";
        return 2;
    }

    const LaurentElement v = phi1_star(x);
    const IntegerSeries c = total_chern(v, truncation);
    std::cout << "weights: " << format_weights(v) << "\n";
    std::cout << "dim: " << v.dimension().get_str() << "\n";
    std::cout << "c: " << format_series(c) << "\n";
    if (c.degree() >= 1) std::cout << "c1: " << c1(c).get_str() << "\n";
    if (c.degree() >= 2) std::cout << "c2: " << c2(c).get_str() << "\n";
    return 0;
}

int run_oracle(long p, const std::string& cap_text) {
    if (!is_prime(p)) {
        std::cerr << p << " is not prime\n";
        return 2;
    }
    const OracleSummary s = run_oracle_sweep(p, parse_cap(cap_text));
    for (const OracleEntry& e : s.entries) {
        std::cout << "l = " << e.ell << ": C(" << p * p << "," << e.ell
                  << ") = " << e.subset_count.get_str() << ": ";
        if (!e.checked)
            std::cout << "skipped (over cap)\n";
        else
            std::cout << (e.matched ? "match" : "MISMATCH") << "\n";
    }
    std::cout << "oracle: " << s.checked << " checked, " << s.skipped << " skipped, "
              << (s.all_matched ? "all checked values match" : "MISMATCH FOUND") << "\n";
    return s.all_matched ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic certificates for the degree-4 Chern subgroup of BSU(p^2)/mu_p"};
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run the full certificate at each given prime");
    std::vector<long> verify_primes;
    verify->add_option("-p,--prime", verify_primes, "prime to certify (repeatable; p = 2 runs out of scope)")
        ->required();
    std::string format{"text"};
    verify->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string out_path;
    verify->add_option("-o,--output", out_path, "write the report(s) to this file instead of stdout");
    long truncation = 2;
    verify->add_option("-N,--truncation", truncation, "series truncation degree (>= 2)");
    long sweep_degree = 0;
    verify->add_option("--sweep-degree", sweep_degree, "sweep bound on sum of l_i (default 2p)");
    bool no_sweep = false;
    verify->add_flag("--no-sweep", no_sweep, "skip the monomial sweep");
    bool with_oracle = false;
    verify->add_flag("--oracle", with_oracle, "also run the brute-force enumeration cross-check");
    std::string verify_cap{"10000000"};
    verify->add_option("--oracle-cap", verify_cap, "largest subset count the oracle will enumerate")
        ->envname("CHERNSUB_ORACLE_CAP");

    CLI::App* chern_cmd =
        app.add_subcommand("chern", "phi1* image and total Chern class of a lambda expression");
    long chern_p = 0;
    chern_cmd->add_option("-p,--prime", chern_p, "prime fixing the ambient SU(p^2)")->required();
    long chern_N = 2;
    chern_cmd->add_option("-N,--truncation", chern_N, "series truncation degree");
    std::string expr_text;
    chern_cmd->add_option("expr", expr_text, "e.g. \"23*L3 - 2*L1^3\"")->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "closed form vs subset enumeration of phi1*(lambda_l)");
    long oracle_p = 0;
    oracle_cmd->add_option("-p,--prime", oracle_p, "prime fixing the ambient SU(p^2)")->required();
    std::string oracle_cap{"10000000"};
    oracle_cmd->add_option("--cap", oracle_cap, "largest subset count enumerated")
        ->envname("CHERNSUB_ORACLE_CAP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_primes, format, out_path, truncation, sweep_degree, no_sweep,
                              with_oracle, verify_cap);
        if (chern_cmd->parsed()) return run_chern(chern_p, chern_N, expr_text);
        return run_oracle(oracle_p, oracle_cap);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
