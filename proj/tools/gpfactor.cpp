// gpfactor: exact counting, enumeration and sign analysis of the
// 1-factorisations of generalised Petersen graphs GP(3k,k), plus a
// list-colouring stress harness.  Results go to stdout as line-buffered
// JSON (or PASS/FAIL lines), diagnostics to stderr.

#include "gpf/errors.hpp"
#include "gpf/factorisation.hpp"
#include "gpf/gp_graph.hpp"
#include "gpf/json_io.hpp"
#include "gpf/list_colouring.hpp"
#include "gpf/triple_graph.hpp"
#include "gpf/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

int run_count(int k) {
    gpf::SignedCount counts = gpf::signed_factorisation_counts(k);
    std::cout << gpf::signed_count_json(k, counts).dump() << "\n";
    return 0;
}

int run_enumerate(int k) {
    gpf::GPGraph g = gpf::GPGraph::build(3 * k, k);
    gpf::for_each_factorisation(
        k, [&](const gpf::OneFactorisation& f, const gpf::EdgeColouring&) {
            std::cout << gpf::factorisation_json(g, f).dump() << "\n" << std::flush;
        });
    return 0;
}

int run_signsum(int k) {
    gpf::BigInt sum = gpf::signed_factorisation_counts(k).signed_sum();
    nlohmann::ordered_json j;
    j["k"] = k;
    j["sign_sum"] = gpf::to_decimal(sum);
    std::cout << j.dump() << "\n";
    if (sum != 0) {
        std::cout << "PASS sign sum is nonzero\n";
        return 0;
    }
    std::cout << "FAIL sign sum is zero\n";
    return 1;
}

int run_verify(int k_max, bool oracle, int threads) {
    auto results = gpf::run_verification(k_max, oracle, threads);
    int passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            passed++;
            std::cout << "PASS " << r.name << " (" << r.detail << ")\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << (passed == static_cast<int>(results.size()) ? "PASS" : "FAIL") << " " << passed
              << "/" << results.size() << " suites\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int run_listcolor(int k, int trials, std::uint64_t seed, int palette, int threads) {
    if (palette == 0) palette = std::min(3 * k, 9);
    gpf::ChoosabilityReport report =
        gpf::verify_choosability_sample(k, trials, palette, seed, threads);
    // wall time is stderr-only so repeated runs stay byte-identical
    std::cout << gpf::report_json(report, false).dump() << "\n";
    std::cerr << "elapsed_ms=" << report.elapsed_ms << "\n";
    return report.failures.empty() ? 0 : 1;
}

int run_export(int n, int k, const std::string& format) {
    gpf::GPGraph g = gpf::GPGraph::build(n, k);
    gpf::ExportFormat f = format == "dot" ? gpf::ExportFormat::dot : gpf::ExportFormat::json;
    std::cout << gpf::export_graph(g, f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 1-factorisation engine for generalised Petersen graphs GP(3k,k)"};
    app.require_subcommand(1);

    int k = 0, k_max = 0, n = 0, trials = 0, palette = 0, threads = 1;
    std::uint64_t seed = 0;
    bool oracle = false;
    std::string format = "json";

    auto* count = app.add_subcommand("count", "signed 1-factorisation counts as JSON");
    count->add_option("--k", k, "triangle parameter of GP(3k,k)")->required()->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "stream all 1-factorisations as JSON lines");
    enumerate->add_option("--k", k, "triangle parameter of GP(3k,k)")->required()->check(CLI::PositiveNumber);

    auto* signsum = app.add_subcommand("signsum", "Alon-Tarsi sign sum with a PASS/FAIL verdict");
    signsum->add_option("--k", k, "triangle parameter of GP(3k,k)")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run the cross-checking suites");
    verify->add_option("--k-max", k_max, "largest k to check")->required()->check(CLI::PositiveNumber);
    verify->add_flag("--oracle", oracle, "also run the exhaustive brute-force suites");
    verify->add_option("--parallel", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* listcolor = app.add_subcommand("listcolor", "random 3-list edge-colouring trials");
    listcolor->add_option("--k", k, "triangle parameter of GP(3k,k)")->required()->check(CLI::PositiveNumber);
    listcolor->add_option("--trials", trials, "number of trials")->required()->check(CLI::PositiveNumber);
    listcolor->add_option("--seed", seed, "base seed; trial t uses seed+t");
    listcolor->add_option("--palette", palette, "palette size (default min(3k,9))")
        ->check(CLI::PositiveNumber);
    listcolor->add_option("--parallel", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* export_cmd = app.add_subcommand("export", "print a GP(n,k) graph");
    export_cmd->add_option("--n", n, "outer cycle length")->required()->check(CLI::PositiveNumber);
    export_cmd->add_option("--k", k, "skip parameter")->required()->check(CLI::PositiveNumber);
    export_cmd->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(count)) return run_count(k);
        if (app.got_subcommand(enumerate)) return run_enumerate(k);
        if (app.got_subcommand(signsum)) return run_signsum(k);
        if (app.got_subcommand(verify)) return run_verify(k_max, oracle, threads);
        if (app.got_subcommand(listcolor)) return run_listcolor(k, trials, seed, palette, threads);
        if (app.got_subcommand(export_cmd)) return run_export(n, k, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
