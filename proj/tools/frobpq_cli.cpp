// frobpq command-line interface.
//
// Exit codes: 0 success, 1 verification failures, 2 usage/input errors,
// 3 resource-budget errors.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "frobpq/apery.hpp"
#include "frobpq/covering.hpp"
#include "frobpq/scan.hpp"
#include "frobpq/witness.hpp"

using namespace frobpq;

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

void print_pair_info(std::int64_t p, std::int64_t q) {
    const PrimePair pair = make_prime_pair(p, q);
    const Weights w = weights_of(pair);
    const Landmarks m = landmarks_of(pair);
    const Classification cl = classify(pair);
    const Prediction pred = predict_frobenius(pair);

    std::printf("pair (%lld, %lld)%s\n", static_cast<long long>(p), static_cast<long long>(q),
                pair.twin() ? "  [twin]" : "");
    std::printf("  p' = %lld  q' = %lld\n", static_cast<long long>(pair.p_half),
                static_cast<long long>(pair.q_half));
    std::printf("  kappa = %lld  lambda = %lld  kappa' = %lld  lambda' = %lld\n",
                static_cast<long long>(pair.kappa), static_cast<long long>(pair.lambda),
                static_cast<long long>(pair.kappa_half),
                static_cast<long long>(pair.lambda_half));
    std::printf("  class = %s  tau = %s\n", std::string(class_name(cl.cls)).c_str(),
                opt_str(cl.tau).c_str());
    std::printf("  weights = {%lld, %lld, %lld, %lld}\n", static_cast<long long>(w.d0),
                static_cast<long long>(w.d1), static_cast<long long>(w.d2),
                static_cast<long long>(w.d3));
    std::printf("  landmarks: g_a = %lld  g_b = %lld  g_c = %lld\n",
                static_cast<long long>(m.g_a), static_cast<long long>(m.g_b),
                static_cast<long long>(m.g_c));
    if (pred.kind == Prediction::Kind::Exact)
        std::printf("  predicted g = %lld (exact: %s)\n", static_cast<long long>(pred.lo),
                    std::string(pred.source).c_str());
    else
        std::printf("  predicted g in %s%lld, %lld%s (%s)\n", pred.lo_inclusive ? "[" : "(",
                    static_cast<long long>(pred.lo), static_cast<long long>(pred.hi),
                    pred.hi_inclusive ? "]" : ")", std::string(pred.source).c_str());

    const std::int64_t gens[] = {w.d0, w.d1, w.d2, w.d3};
    const std::int64_t g = frobenius_number(gens);
    std::printf("  oracle g = %lld\n", static_cast<long long>(g));
    const NuBounds nb = nu_bounds(pair, g);
    std::printf("  nu bounds = [%lld, %lld]  nu formula = %s\n", static_cast<long long>(nb.lo),
                static_cast<long long>(nb.hi), opt_str(nu_formula(pair)).c_str());

    if (const auto wit = witness_ga(pair))
        std::printf("  g_a witness = (%lld, %lld, %lld, %lld)\n", static_cast<long long>(wit->x),
                    static_cast<long long>(wit->y), static_cast<long long>(wit->z),
                    static_cast<long long>(wit->w));
    if (!pair.kappa_lambda_large())
        if (const auto wit = gb_witness(pair))
            std::printf("  g_b witness = (%lld, %lld, %lld, %lld)\n",
                        static_cast<long long>(wit->x), static_cast<long long>(wit->y),
                        static_cast<long long>(wit->z), static_cast<long long>(wit->w));
}

int run_verify(const SuiteOptions& opts) {
    const SuiteReport report = run_suite(opts);
    for (const CheckResult& c : report.checks) {
        std::printf("%s %-34s  %8lld cases  %8.3f s%s\n",
                    c.passed() ? "PASS" : (c.informational ? "NOTE" : "FAIL"), c.name.c_str(),
                    static_cast<long long>(c.tested), c.seconds,
                    c.informational ? "  [informational]" : "");
        if (!c.note.empty()) std::printf("      %s\n", c.note.c_str());
        for (const std::string& f : c.failures) std::printf("      %s\n", f.c_str());
        if (c.failure_count > static_cast<std::int64_t>(c.failures.size()))
            std::printf("      ... %lld further failures\n",
                        static_cast<long long>(c.failure_count -
                                               static_cast<std::int64_t>(c.failures.size())));
    }
    std::printf("%s\n", report.all_passed() ? "all checks passed" : "CHECK FAILURES");
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Frobenius numbers, landmark values and genus-spectrum search "
                 "for odd prime-pair weight systems"};
    app.require_subcommand(1);

    // pair-info
    std::int64_t arg_p = 0, arg_q = 0;
    auto* cmd_info = app.add_subcommand("pair-info", "full record for one prime pair");
    cmd_info->add_option("p", arg_p, "odd prime p")->required();
    cmd_info->add_option("q", arg_q, "odd prime q > p")->required();

    // frobenius
    std::vector<std::int64_t> arg_gens;
    auto* cmd_frob = app.add_subcommand("frobenius", "Frobenius number of a coprime set");
    cmd_frob->add_option("generators", arg_gens, "generators >= 2 with gcd 1")
        ->required()
        ->expected(-2);

    // represent
    std::int64_t arg_n = 0;
    std::vector<std::int64_t> arg_rep_gens;
    auto* cmd_rep = app.add_subcommand("represent", "witness for one value, or 'none'");
    cmd_rep->add_option("n", arg_n, "value to represent")->required();
    cmd_rep->add_option("--gens", arg_rep_gens, "comma-separated generators")
        ->required()
        ->delimiter(',');

    // scan
    ScanOptions scan_opts;
    std::string csv_path;
    auto* cmd_scan = app.add_subcommand("scan", "classify all pairs in a range, CSV output");
    cmd_scan->add_option("--pmax", scan_opts.p_max, "largest p");
    cmd_scan->add_option("--qmax", scan_opts.q_max, "largest q");
    cmd_scan->add_flag("--oracle", scan_opts.with_oracle, "compute oracle Frobenius numbers");
    auto* nu_cap_opt =
        cmd_scan->add_option("--nu-cap", scan_opts.nu_pq_cap,
                             "enable brute-force non-genus for p*q up to this cap");
    nu_cap_opt->expected(0, 1)->default_val(1500);
    cmd_scan->add_option("--csv", csv_path, "write CSV here instead of stdout");
    cmd_scan->add_option("--jobs", scan_opts.jobs, "worker threads (default 1)");

    // nu
    std::int64_t nu_p = 0, nu_q = 0;
    bool nu_brute = false;
    auto* cmd_nu = app.add_subcommand("nu", "largest non-genus of the cyclic group of order p*q");
    cmd_nu->add_option("p", nu_p, "odd prime p")->required();
    cmd_nu->add_option("q", nu_q, "odd prime q > p")->required();
    cmd_nu->add_flag("--brute", nu_brute, "also run the brute-force genus scan");

    // covering
    std::int64_t cov_n = 0;
    bool cov_nu = false;
    auto* cmd_cov = app.add_subcommand("covering", "divisor weights and non-genus for odd square-free n");
    cmd_cov->add_option("n", cov_n, "odd square-free integer >= 3")->required();
    cmd_cov->add_flag("--nu", cov_nu, "also brute-force the cyclic largest non-genus");

    // verify
    SuiteOptions suite_opts;
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_option("--pmax", suite_opts.p_max, "largest p (default 150)");
    cmd_verify->add_option("--qmax", suite_opts.q_max, "largest q (default 150)");
    cmd_verify->add_option("--jobs", suite_opts.jobs, "worker threads (default 1)");
    cmd_verify->add_option("--nu-cap", suite_opts.nu_pq_cap,
                           "p*q cap for the brute-force non-genus checks (default 1500)");
    cmd_verify->add_option("--witness-cap", suite_opts.witness_d1_cap,
                           "d1 cap for the exhaustive witness sweep (default 2000)");

    try {
        app.parse(argc, argv);

        if (cmd_info->parsed()) {
            print_pair_info(arg_p, arg_q);
            return 0;
        }
        if (cmd_frob->parsed()) {
            std::printf("%lld\n", static_cast<long long>(frobenius_number(arg_gens)));
            return 0;
        }
        if (cmd_rep->parsed()) {
            const auto witness = represent(arg_n, arg_rep_gens);
            if (!witness) {
                std::printf("none\n");
                return 0;
            }
            std::string out = std::to_string(arg_n) + " =";
            bool first = true;
            for (std::size_t i = 0; i < witness->size(); ++i) {
                if ((*witness)[i] == 0) continue;
                out += (first ? " " : " + ") + std::to_string((*witness)[i]) + "*" +
                       std::to_string(arg_rep_gens[i]);
                first = false;
            }
            if (first) out += " 0";
            std::printf("%s\n", out.c_str());
            return 0;
        }
        if (cmd_scan->parsed()) {
            scan_opts.with_nu_brute = nu_cap_opt->count() > 0;
            const auto records = scan_pairs(scan_opts);
            const std::string csv = records_to_csv(records);
            if (csv_path.empty()) {
                std::fputs(csv.c_str(), stdout);
            } else {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open " + csv_path);
                out << csv;
                std::fprintf(stderr, "wrote %zu records to %s\n", records.size(),
                             csv_path.c_str());
            }
            return 0;
        }
        if (cmd_nu->parsed()) {
            const PrimePair pair = make_prime_pair(nu_p, nu_q);
            const std::int64_t gens[] = {weights_of(pair).d0, weights_of(pair).d1,
                                         weights_of(pair).d2, weights_of(pair).d3};
            const std::int64_t g = frobenius_number(gens);
            const NuBounds nb = nu_bounds(pair, g);
            std::printf("oracle g = %lld, nu bounds [%lld, %lld]\n", static_cast<long long>(g),
                        static_cast<long long>(nb.lo), static_cast<long long>(nb.hi));
            std::printf("nu formula = %s\n", opt_str(nu_formula(pair)).c_str());
            if (nu_brute) {
                const NuResult nu = nu_cyclic_bruteforce(make_covering(gens[0]));
                if (nu.all_admissible)
                    std::printf("nu brute = none (every genus admits the action)\n");
                else
                    std::printf("nu brute = %lld\n", static_cast<long long>(nu.value));
            }
            return 0;
        }
        if (cmd_cov->parsed()) {
            const CoveringInstance cov = make_covering(cov_n);
            std::string ws;
            for (std::size_t i = 0; i < cov.weights.size(); ++i)
                ws += (i ? ", " : "") + std::to_string(cov.weights[i]);
            std::printf("n = %lld, %d prime factor(s), weights = {%s}\n",
                        static_cast<long long>(cov.n), cov.factor_count(), ws.c_str());
            const std::int64_t semi = largest_nongenus_semiregular(cov);
            std::printf("largest semi-regular non-genus = %lld%s\n",
                        static_cast<long long>(semi),
                        semi < 0 ? " (every genus attained)" : "");
            std::printf("g_n = %lld\n", static_cast<long long>(semi + cov.n - 1));
            if (cov_nu) {
                const NuResult nu = nu_cyclic_bruteforce(cov);
                if (nu.all_admissible)
                    std::printf("nu = none (every genus admits the action)\n");
                else
                    std::printf("nu = %lld\n", static_cast<long long>(nu.value));
            }
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(suite_opts);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const resource_error& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
