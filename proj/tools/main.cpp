#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcurves/reports.hpp"

namespace {

using maxcurves::Json;

struct RunConfig {
    std::uint64_t p = 2;
    std::uint32_t h = 1;
    std::uint32_t n = 3;
    std::uint64_t precision = 0;  // 0 = the per-command default
    std::uint64_t budget = 10'000'000;
    std::string format = "json";
    std::string out;
};

std::string render(const Json& report, const std::string& format) {
    if (format == "csv") return maxcurves::to_csv(report);
    if (format == "text") return maxcurves::to_text(report);
    return report.dump(2) + "\n";
}

int emit(const Json& report, const RunConfig& config, bool ok) {
    std::string rendered = render(report, config.format);
    if (config.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << config.out << "\n";
            return 2;
        }
        file << rendered;
    }
    return ok ? 0 : 1;
}

Json corpus_verify(const RunConfig& config) {
    // (2,2,3) joins the sweep only when the point budget covers its
    // largest curve.
    const std::vector<std::array<std::uint64_t, 3>> corpus = {
        {2, 1, 3}, {2, 1, 5}, {3, 1, 3}, {2, 2, 3}};
    Json runs = Json::array();
    bool all_ok = true;
    for (const auto& [p, h, n] : corpus) {
        maxcurves::CurveParams params =
            maxcurves::make_params(p, static_cast<std::uint32_t>(h),
                                   static_cast<std::uint32_t>(n));
        std::uint64_t largest = maxcurves::hasse_weil_upper_bound(
            maxcurves::genus(maxcurves::CurveId::Cn, params), params.qn());
        if (largest > config.budget) continue;
        std::vector<maxcurves::CheckResult> checks =
            maxcurves::run_verification(params, config.budget, config.budget, config.precision);
        Json report = maxcurves::verify_report(params, checks);
        all_ok = all_ok && report["all_ok"].get<bool>();
        runs.push_back(std::move(report));
    }
    return Json{{"runs", std::move(runs)}, {"all_ok", all_ok}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts, automorphisms, and ramification for a family of maximal curves"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print this help message and exit");

    RunConfig config;
    app.add_option("--p", config.p, "field characteristic (prime)");
    app.add_option("--h", config.h, "exponent h with q = p^h");
    app.add_option("--n", config.n, "tower level n (odd, >= 3)");
    app.add_option("--precision", config.precision, "series truncation exponent");
    app.add_option("--budget", config.budget, "enumeration budget");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", config.out, "write the report to this file");

    CLI::App* cmd_count = app.add_subcommand("count", "point counts and maximality");
    CLI::App* cmd_group = app.add_subcommand("group", "automorphism group structure");
    CLI::App* cmd_orbits = app.add_subcommand("orbits", "orbit decomposition on the curve");
    CLI::App* cmd_ramification =
        app.add_subcommand("ramification", "filtrations, jumps, and Riemann-Hurwitz");
    CLI::App* cmd_expand = app.add_subcommand("expand", "local series expansions at the origin");
    CLI::App* cmd_verify = app.add_subcommand("verify-all", "run every verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool explicit_params = app.count("--p") || app.count("--h") || app.count("--n");

    try {
        if (cmd_verify->parsed() && !explicit_params) {
            Json report = corpus_verify(config);
            return emit(report, config, report["all_ok"].get<bool>());
        }

        maxcurves::CurveParams params = maxcurves::make_params(config.p, config.h, config.n);
        Json report;
        if (cmd_count->parsed()) {
            report = maxcurves::count_report(params);
        } else if (cmd_group->parsed()) {
            report = maxcurves::group_report(params, config.budget);
        } else if (cmd_orbits->parsed()) {
            report = maxcurves::orbit_report(params, config.budget, config.budget);
        } else if (cmd_ramification->parsed()) {
            report = maxcurves::ramification_report(params);
        } else if (cmd_expand->parsed()) {
            report = maxcurves::expand_report(params, config.precision);
        } else {
            std::vector<maxcurves::CheckResult> checks = maxcurves::run_verification(
                params, config.budget, config.budget, config.precision);
            report = maxcurves::verify_report(params, checks);
        }
        return emit(report, config, maxcurves::report_ok(report));
    } catch (const maxcurves::Error& e) {
        // Parameter and budget violations are usage errors, not failed checks.
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
