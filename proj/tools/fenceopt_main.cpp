#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fenceopt/anneal.hpp"
#include "fenceopt/bounds.hpp"
#include "fenceopt/errors.hpp"
#include "fenceopt/fence_geometry.hpp"
#include "fenceopt/grid.hpp"
#include "fenceopt/io.hpp"
#include "fenceopt/optimizer.hpp"
#include "fenceopt/oracle.hpp"
#include "fenceopt/verify.hpp"

namespace {

using namespace fenceopt;

void write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open output path: " + path);
    body(out);
    out.flush();
    if (!out) throw DomainError("failed writing output path: " + path);
}

std::string cells_as_pairs(const GridDomain& d, const GridShape& g) {
    std::string s;
    for (int idx : g.cells) {
        const auto [c, r] = cell_colrow(d, idx);
        s += "(" + std::to_string(c) + "," + std::to_string(r) + ")";
    }
    return s.empty() ? "none" : s;
}

int run_verify(Profile profile, std::uint64_t seed, bool as_json) {
    const VerifyOptions options{profile, seed};
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CheckResult> checks = run_verification(options);
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool all = true;
    for (const CheckResult& c : checks) all = all && c.pass;

    if (as_json) {
        nlohmann::ordered_json report;
        report["command"] = "verify --profile " + profile_name(profile) + " --seed " +
                            std::to_string(seed) + " --json";
        report["profile"] = profile_name(profile);
        report["seed"] = seed;
        auto& arr = report["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["margin"] = c.margin;
            jc["detail"] = c.detail;
            jc["ms"] = c.ms;
            arr.push_back(std::move(jc));
        }
        report["all_pass"] = all;
        report["total_ms"] = total_ms;
        std::cout << report.dump(2) << "\n";
    } else {
        for (const CheckResult& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << " margin=" << fmt_sig(c.margin, 6) << " :: " << c.detail << "\n";
        std::cout << (all ? "all checks passed" : "checks FAILED") << " (" << checks.size()
                  << " run)\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal free-perimeter fences in a rectangle: formulas, oracles, rendering"};
    app.require_subcommand(1);
    int rc = 0;

    double x = 1.0, y = 2.0, area = 0.0;
    auto* lstar_cmd = app.add_subcommand("lstar", "evaluate the minimal fence length");
    lstar_cmd->add_option("--x", x, "rectangle side")->required();
    lstar_cmd->add_option("--y", y, "rectangle side")->required();
    lstar_cmd->add_option("--area,--a", area, "target area")->required();
    lstar_cmd->callback([&] {
        const Rect rect(x, y);
        const double value = l_star(rect, area);
        const std::string reg = to_string(regime(rect, area));
        const std::string fence = describe(optimal_fence(rect, area));
        std::cout << "lstar=" << fmt_double(value) << " regime=" << reg << " fence=" << fence
                  << "\n";
    });

    int samples = 256;
    std::string out_path = "-";
    auto* curve_cmd = app.add_subcommand("curve", "CSV sweep of the length formula");
    curve_cmd->add_option("--x", x, "rectangle side")->required();
    curve_cmd->add_option("--y", y, "rectangle side")->required();
    curve_cmd->add_option("--samples", samples, "row count before threshold insertion");
    curve_cmd->add_option("--out", out_path, "output path, - for stdout")->required();
    curve_cmd->callback([&] {
        const Rect rect(x, y);
        write_to(out_path, [&](std::ostream& os) { write_curve_csv(os, rect, samples); });
    });

    auto* render_cmd = app.add_subcommand("render", "SVG of the rectangle and optimal fence");
    render_cmd->add_option("--x", x, "rectangle side")->required();
    render_cmd->add_option("--y", y, "rectangle side")->required();
    render_cmd->add_option("--area,--a", area, "target area")->required();
    render_cmd->add_option("--out", out_path, "output path, - for stdout")->required();
    render_cmd->callback([&] {
        const Rect rect(x, y);
        write_to(out_path, [&](std::ostream& os) { write_fence_svg(os, rect, area); });
    });

    int cols = 3, rows = 4, k = 0, cap = 24;
    double cell = 1.0;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact grid minimum by enumeration");
    oracle_cmd->add_option("--cols", cols, "cells along side X")->required();
    oracle_cmd->add_option("--rows", rows, "cells along side Y")->required();
    oracle_cmd->add_option("--cell", cell, "cell side length");
    oracle_cmd->add_option("--k", k, "shape size in cells")->required();
    oracle_cmd->add_option("--cap", cap, "enumeration cap in domain cells");
    oracle_cmd->callback([&] {
        const GridDomain d{cols, rows, cell};
        const OracleResult r = oracle_min_free_perimeter(d, k, cap);
        std::cout << "length=" << fmt_double(r.length) << " units=" << r.units
                  << " enumerated=" << r.enumerated << " witness=" << cells_as_pairs(d, r.witness)
                  << "\n";
    });

    std::uint64_t seed = 7;
    AnnealSchedule schedule;
    auto* anneal_cmd = app.add_subcommand("anneal", "stochastic grid upper bound");
    anneal_cmd->add_option("--cols", cols, "cells along side X")->required();
    anneal_cmd->add_option("--rows", rows, "cells along side Y")->required();
    anneal_cmd->add_option("--cell", cell, "cell side length");
    anneal_cmd->add_option("--k", k, "shape size in cells")->required();
    anneal_cmd->add_option("--seed", seed, "RNG seed");
    anneal_cmd->add_option("--sweeps", schedule.sweeps, "annealing sweeps");
    anneal_cmd->add_option("--t0", schedule.t0_factor, "initial temperature in cell units");
    anneal_cmd->add_option("--cooling", schedule.cooling, "per-sweep temperature factor");
    anneal_cmd->callback([&] {
        const GridDomain d{cols, rows, cell};
        const AnnealResult r = anneal_min_free_perimeter(d, k, seed, schedule);
        std::cout << "length=" << fmt_double(r.length) << " units=" << r.units
                  << " accepted=" << r.accepted << " proposed=" << r.proposed
                  << " shape=" << cells_as_pairs(d, r.shape) << "\n";
    });

    OptimizerConfig cfg;
    auto* optimize_cmd = app.add_subcommand("optimize", "constrained polyline descent");
    optimize_cmd->add_option("--x", x, "rectangle side")->required();
    optimize_cmd->add_option("--y", y, "rectangle side")->required();
    optimize_cmd->add_option("--area,--a", area, "target enclosed area")->required();
    optimize_cmd->add_option("--vertices", cfg.vertex_count, "interior vertex count");
    optimize_cmd->add_option("--iters", cfg.max_iter, "candidate evaluation budget");
    optimize_cmd->add_option("--step", cfg.step, "initial descent step");
    optimize_cmd->add_option("--seed", seed, "perturbation seed");
    optimize_cmd->callback([&] {
        const Rect rect(x, y);
        cfg.seed = seed;
        const FencePolyline start =
            perturb(init_for_regime(rect, area, cfg.vertex_count), rect, 0.005 * rect.x(), seed);
        const OptimizeResult r = optimize(rect, area, start, cfg);
        std::cout << "length=" << fmt_double(r.length) << " area=" << fmt_double(r.area)
                  << " converged=" << (r.converged ? "true" : "false")
                  << " iterations=" << r.iterations
                  << " bound_ratio=" << fmt_double(r.min_bound_ratio)
                  << " analytic=" << fmt_double(l_star(rect, area)) << "\n";
    });

    std::string profile_str = "quick";
    bool as_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification campaign");
    verify_cmd->add_option("--profile", profile_str, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--seed", seed, "campaign seed");
    verify_cmd->add_flag("--json", as_json, "emit the report as JSON");
    verify_cmd->callback([&] {
        rc = run_verify(profile_str == "full" ? Profile::Full : Profile::Quick, seed, as_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
