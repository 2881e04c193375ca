#include "fenceopt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>

#include "fenceopt/anneal.hpp"
#include "fenceopt/bounds.hpp"
#include "fenceopt/errors.hpp"
#include "fenceopt/fence_geometry.hpp"
#include "fenceopt/grid.hpp"
#include "fenceopt/io.hpp"
#include "fenceopt/optimizer.hpp"
#include "fenceopt/oracle.hpp"
#include "fenceopt/polygon.hpp"
#include "fenceopt/polyline.hpp"
#include "fenceopt/reflections.hpp"

namespace fenceopt {

std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

namespace {

using LStarFn = std::function<double(const Rect&, double)>;

std::mt19937_64 check_rng(const VerifyOptions& opt, int check_index) {
    return std::mt19937_64(opt.seed ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(check_index + 1)));
}

Rect random_rect(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> side(0.4, 3.5);
    return Rect(side(rng), side(rng));
}

// Normalized slack: 1 = error-free, 0 = exactly at tolerance, negative = fail.
double slack(double tol, double err) { return (tol - err) / tol; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

CheckResult check_theorem1_half_area(const VerifyOptions& opt, const LStarFn& ls) {
    CheckResult r;
    r.name = "theorem1-half-area";
    const int rects = opt.profile == Profile::Quick ? 25 : 100;
    auto rng = check_rng(opt, 1);
    double worst = 0.0;
    const bool exact = ls(Rect(1.0, 2.0), 1.0) == 1.0;
    for (int i = 0; i < rects; ++i) {
        const Rect rect = random_rect(rng);
        worst = std::max(worst, std::abs(ls(rect, rect.area() / 2.0) - rect.x()) / rect.x());
    }
    r.margin = exact ? slack(1e-12, worst) : -1.0;
    r.pass = r.margin >= 0.0;
    r.detail = "half-area value at " + std::to_string(rects) +
               " rects, worst rel err " + fmt_sig(worst, 3) + (exact ? "" : "; unit case not exact");
    return r;
}

CheckResult check_regime_continuity(const VerifyOptions& opt, const LStarFn& ls) {
    CheckResult r;
    r.name = "regime-continuity";
    const int rects = opt.profile == Profile::Quick ? 25 : 100;
    auto rng = check_rng(opt, 2);
    double worst = 0.0;
    for (int i = 0; i < rects; ++i) {
        const Rect rect = random_rect(rng);
        const double thr = rect.x() * rect.x() / M_PI;
        worst = std::max(worst, std::abs(ls(rect, thr) - rect.x()) / rect.x());
        worst = std::max(worst, std::abs(ls(rect, rect.area() - thr) - rect.x()) / rect.x());
    }
    r.margin = slack(1e-12, worst);
    r.pass = r.margin >= 0.0;
    r.detail = "threshold values at " + std::to_string(rects) + " rects, worst rel err " +
               fmt_sig(worst, 3);
    return r;
}

CheckResult check_symmetry(const VerifyOptions& opt, const LStarFn& ls) {
    CheckResult r;
    r.name = "symmetry";
    const int samples = opt.profile == Profile::Quick ? 2000 : 10000;
    auto rng = check_rng(opt, 3);
    double worst = 0.0;
    const Rect rects[3] = {Rect(1.0, 2.0), random_rect(rng), random_rect(rng)};
    for (const Rect& rect : rects) {
        std::uniform_real_distribution<double> area(0.0, rect.area());
        for (int i = 0; i < samples; ++i) {
            const double a = i % 2 == 0 ? rect.area() * double(i) / samples : area(rng);
            worst = std::max(worst,
                             std::abs(ls(rect, a) - ls(rect, rect.area() - a)) / rect.x());
        }
    }
    r.margin = slack(1e-12, worst);
    r.pass = r.margin >= 0.0;
    r.detail = std::to_string(3 * samples) + " samples, worst |l(a)-l(XY-a)|/X = " +
               fmt_sig(worst, 3);
    return r;
}

CheckResult check_fact_ratios(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "fact-ratios";
    const int samples = opt.profile == Profile::Quick ? 200 : 1000;
    auto rng = check_rng(opt, 4);
    std::uniform_real_distribution<double> area(0.01, 100.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = area(rng);
        const double q = iso_lower_quarter_plane(a);
        worst = std::max(worst, std::abs(iso_lower_plane(a) / q - 2.0) / 2.0);
        worst = std::max(worst, std::abs(iso_lower_half_plane(a) / q - std::sqrt(2.0)) /
                                    std::sqrt(2.0));
    }
    r.margin = slack(1e-12, worst);
    r.pass = r.margin >= 0.0;
    r.detail = "2 : sqrt(2) : 1 over " + std::to_string(samples) + " areas, worst rel err " +
               fmt_sig(worst, 3);
    return r;
}

CheckResult check_oracle_bracketing(const VerifyOptions&, const LStarFn& ls) {
    CheckResult r;
    r.name = "oracle-bracketing";
    const GridDomain d{3, 4, 1.0};
    const Rect rect = domain_rect(d);
    double min_slack = 1.0;
    bool equalities = true;
    double worst_floor = 0.0;
    for (int k = 0; k <= d.cell_count(); ++k) {
        const OracleResult o = oracle_min_free_perimeter(d, k);
        const double floor = ls(rect, double(k) * d.cell * d.cell);
        worst_floor = std::max(worst_floor, floor - o.length);
        if (k == 3 || k == 6 || k == 9) equalities = equalities && o.length == 3.0;
    }
    min_slack = slack(1e-9, worst_floor);
    r.margin = equalities ? min_slack : std::min(min_slack, -1.0);
    r.pass = r.margin >= 0.0;
    r.detail = std::string("3x4 sweep, worst floor violation ") + fmt_sig(worst_floor, 3) +
               (equalities ? ", straight-cut equalities hold" : ", equality at k in {3,6,9} broken");
    return r;
}

CheckResult check_case_bound_soundness(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "case-bound-soundness";
    const int shapes = opt.profile == Profile::Quick ? 1000 : 10000;
    const GridDomain d{5, 6, 1.0};
    const Rect rect = domain_rect(d);
    auto rng = check_rng(opt, 6);
    std::uniform_int_distribution<int> size(1, d.cell_count());
    double worst = 0.0;  // positive = bound violated by that much
    for (int i = 0; i < shapes; ++i) {
        const GridShape g = random_connected_shape(d, size(rng), rng);
        const double a = double(g.size()) * d.cell * d.cell;
        const double bound = case_lower_bound(grid_touch_class(g, d), rect, a);
        worst = std::max(worst, bound - grid_free_perimeter(g, d));
    }
    r.margin = slack(1e-9, worst);
    r.pass = r.margin >= 0.0;
    r.detail = std::to_string(shapes) + " shapes on 5x6, worst bound excess " + fmt_sig(worst, 3);
    return r;
}

CheckResult check_complement_identity(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "complement-identity";
    const int shapes = opt.profile == Profile::Quick ? 1000 : 10000;
    const GridDomain d{5, 6, 1.0};
    auto rng = check_rng(opt, 6);  // same stream as the soundness check: same shapes
    std::uniform_int_distribution<int> size(1, d.cell_count());
    int mismatches = 0;
    for (int i = 0; i < shapes; ++i) {
        const GridShape g = random_connected_shape(d, size(rng), rng);
        int sum = 0;
        for (const GridShape& comp : complement_components(g, d))
            sum += grid_free_perimeter_units(comp, d);
        if (sum != grid_free_perimeter_units(g, d)) ++mismatches;
    }
    r.pass = mismatches == 0;
    r.margin = r.pass ? 1.0 : -double(mismatches);
    r.detail = std::to_string(shapes) + " shapes, " + std::to_string(mismatches) + " mismatches";
    return r;
}

CheckResult check_partition_lemma(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "partition-lemma";
    const int trials = opt.profile == Profile::Quick ? 2000 : 10000;
    auto rng = check_rng(opt, 8);
    std::uniform_int_distribution<int> parts(2, 6);
    std::uniform_real_distribution<double> total(0.1, 10.0);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    double min_norm_slack = 1.0;
    for (int i = 0; i < trials; ++i) {
        const int k = parts(rng);
        const double a_total = total(rng);
        std::vector<double> parts_v(static_cast<std::size_t>(k));
        double raw = 0.0;
        for (double& p : parts_v) raw += (p = unit(rng));
        double spread_min = 1e300, spread_max = 0.0, sum = 0.0;
        for (double& p : parts_v) {
            p *= a_total / raw;
            spread_min = std::min(spread_min, p);
            spread_max = std::max(spread_max, p);
            sum += std::sqrt(p);
        }
        const double lo = std::sqrt(a_total);
        const double hi = std::sqrt(double(k) * a_total);
        min_norm_slack = std::min(min_norm_slack, slack(1e-12, (lo - sum) / lo));
        min_norm_slack = std::min(min_norm_slack, slack(1e-12, (sum - hi) / hi));
        // strictly short of the upper bound whenever parts are visibly unequal
        if ((spread_max - spread_min) * k / a_total > 1e-3 && sum >= hi)
            min_norm_slack = std::min(min_norm_slack, -1.0);
        // equal parts meet the upper bound
        const double eq = double(k) * std::sqrt(a_total / k);
        min_norm_slack = std::min(min_norm_slack, slack(1e-9, std::abs(eq - hi)));
    }
    r.margin = min_norm_slack;
    r.pass = r.margin >= 0.0;
    r.detail = std::to_string(trials) + " random partitions within [sqrt(A), sqrt(kA)]";
    return r;
}

CheckResult check_optimizer_convergence(const VerifyOptions& opt, const LStarFn& ls) {
    CheckResult r;
    r.name = "optimizer-convergence";
    const Rect rect(1.0, 2.0);
    struct Case {
        double a;
        int vertices;
        int iters;
    };
    std::vector<Case> cases;
    if (opt.profile == Profile::Quick)
        cases = {{0.25, 16, 2500}, {1.0, 16, 1200}};
    else
        cases = {{0.25, 32, 5000}, {1.0, 32, 5000}, {1.9, 32, 5000}};
    double worst_rel = 0.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const Case& c : cases) {
        OptimizerConfig cfg;
        cfg.max_iter = c.iters;
        cfg.vertex_count = c.vertices;
        const FencePolyline start = perturb(init_for_regime(rect, c.a, c.vertices), rect,
                                            0.005 * rect.x(), opt.seed ^ 0x5eedULL);
        const OptimizeResult res = optimize(rect, c.a, start, cfg);
        worst_rel = std::max(worst_rel, std::abs(res.length - ls(rect, c.a)) / ls(rect, c.a));
        min_ratio = std::min(min_ratio, res.min_bound_ratio);
    }
    const double bound_ok = min_ratio >= 1.0 - 1e-9 ? 1.0 : -1.0;
    r.margin = std::min(slack(0.01, worst_rel), bound_ok);
    r.pass = r.margin >= 0.0;
    r.detail = std::to_string(cases.size()) + " targets, worst rel gap " + fmt_sig(worst_rel, 3) +
               ", min bound ratio " + fmt_sig(min_ratio, 10);
    return r;
}

CheckResult check_gradient_validation(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "gradient-validation";
    const int configs = opt.profile == Profile::Quick ? 30 : 100;
    auto rng = check_rng(opt, 10);
    double worst = 0.0;
    for (int i = 0; i < configs; ++i) {
        const Rect rect = random_rect(rng);
        const double xy = rect.area();
        std::uniform_real_distribution<double> pick(0.0, 1.0);
        FencePolyline f;
        if (pick(rng) < 0.5) {
            std::uniform_real_distribution<double> mid(0.15 * xy, 0.85 * xy);
            f = init_straight_cut(rect, mid(rng), 6);
        } else {
            const double lo = 0.1 * rect.x() * rect.x();
            const double hi = 0.8 * rect.x() * rect.x();
            std::uniform_real_distribution<double> corner(lo, hi);
            f = init_corner_staircase(rect, corner(rng), 6);
        }
        f = perturb(f, rect, 0.04 * rect.x(), rng());

        const Gradients g = gradients(f, rect);
        const double h = 1e-6 * rect.x();
        const std::size_t dofs = g.length.size();
        auto eval_at = [&](std::size_t dof, double delta, double& len, double& area) {
            FencePolyline probe = f;
            if (dof == 0) probe.t_start += delta;
            else if (dof == 1) probe.t_end += delta;
            else if (dof % 2 == 0) probe.interior[dof / 2 - 1].x += delta;
            else probe.interior[dof / 2 - 1].y += delta;
            len = fence_length(probe, rect);
            area = enclosed_area(probe, rect, Side::Left);
        };
        double num = 0.0, den = 1.0;
        for (std::size_t dof = 0; dof < dofs; ++dof) {
            double lp, ap, lm, am;
            eval_at(dof, h, lp, ap);
            eval_at(dof, -h, lm, am);
            num = std::max(num, std::abs((lp - lm) / (2.0 * h) - g.length[dof]));
            num = std::max(num, std::abs((ap - am) / (2.0 * h) - g.area[dof]));
            den = std::max({den, std::abs(g.length[dof]), std::abs(g.area[dof])});
        }
        worst = std::max(worst, num / den);
    }
    r.margin = slack(1e-6, worst);
    r.pass = r.margin >= 0.0;
    r.detail = std::to_string(configs) + " configurations, worst rel err " + fmt_sig(worst, 3);
    return r;
}

CheckResult check_reflection_properties(const VerifyOptions&, const LStarFn&) {
    CheckResult r;
    r.name = "reflection-properties";
    double worst_area = 0.0;

    // doubling across the bottom side
    Polygon trap;
    trap.vertices = {{0.0, 0.0}, {2.0, 0.0}, {1.5, 1.0}, {0.5, 1.0}};
    const AxisLine bottom{{0.0, 0.0}, {1.0, 0.0}};
    const Polygon doubled = reflect_half_plane(trap, bottom);
    worst_area = std::max(worst_area,
                          std::abs(doubled.area() - 2.0 * trap.area()) / (2.0 * trap.area()));

    // quadrupling around the origin corner
    Polygon stair;
    stair.vertices = {{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}};
    const CornerFrame corner{{0.0, 0.0}, {1.0, 0.0}};
    const Polygon quadrupled = reflect_quarter_plane(stair, corner);
    worst_area = std::max(worst_area, std::abs(quadrupled.area() - 4.0 * stair.area()) /
                                          (4.0 * stair.area()));

    // inscribed quarter disk reproduces the arc free perimeter
    Polygon qdisk;
    qdisk.vertices.push_back({0.0, 0.0});
    const int chords = 64;
    for (int i = 0; i <= chords; ++i) {
        const double th = (M_PI / 2.0) * double(i) / chords;
        qdisk.vertices.push_back({std::cos(th), std::sin(th)});
    }
    const Rect rect(2.0, 3.0);
    const double free = free_perimeter_polygon(qdisk, rect);
    const double arc_err = std::abs(free - M_PI / 2.0) / (M_PI / 2.0);
    const bool cls = touch_class_polygon(qdisk, rect) == TouchClass::TwoAdjacent;

    const Polygon disk = reflect_quarter_plane(qdisk, corner);
    worst_area = std::max(worst_area,
                          std::abs(disk.area() - 4.0 * qdisk.area()) / (4.0 * qdisk.area()));

    r.margin = std::min(slack(1e-12, worst_area), slack(1e-3, arc_err));
    if (!cls) r.margin = std::min(r.margin, -1.0);
    r.pass = r.margin >= 0.0;
    r.detail = "area doubling/quadrupling worst rel err " + fmt_sig(worst_area, 3) +
               ", 64-gon arc rel err " + fmt_sig(arc_err, 3);
    return r;
}

std::string campaign_digest(const VerifyOptions& opt) {
    std::ostringstream out;
    const OracleResult o = oracle_min_free_perimeter(GridDomain{3, 4, 1.0}, 5);
    out << "oracle:" << o.units;
    for (int c : o.witness.cells) out << ',' << c;

    const AnnealResult an = anneal_min_free_perimeter(GridDomain{4, 5, 0.5}, 7, opt.seed);
    out << ";anneal:" << an.units;
    for (int c : an.shape.cells) out << ',' << c;

    const Rect rect(1.0, 2.0);
    OptimizerConfig cfg;
    cfg.max_iter = 300;
    cfg.vertex_count = 12;
    const FencePolyline start =
        perturb(init_for_regime(rect, 0.6, cfg.vertex_count), rect, 0.01, opt.seed);
    const OptimizeResult res = optimize(rect, 0.6, start, cfg);
    out << ";optimize:" << fmt_double(res.length) << ',' << fmt_double(res.area);

    auto rng = check_rng(opt, 12);
    const GridShape g = random_connected_shape(GridDomain{5, 6, 1.0}, 10, rng);
    out << ";shape:";
    for (int c : g.cells) out << c << ',';
    return out.str();
}

CheckResult check_determinism_digest(const VerifyOptions& opt, const LStarFn&) {
    CheckResult r;
    r.name = "determinism-digest";
    const std::string first = campaign_digest(opt);
    const std::string second = campaign_digest(opt);
    r.pass = first == second;
    r.margin = r.pass ? 1.0 : -1.0;
    r.detail = r.pass ? "two seeded campaign replays are byte-identical"
                      : "replay diverged: " + first + " vs " + second;
    return r;
}

CheckResult check_dominance(const VerifyOptions&, const LStarFn& ls) {
    CheckResult r;
    r.name = "dominance";
    const Rect rects[3] = {Rect(1.0, 2.0), Rect(2.0, 5.0), Rect(0.7, 0.9)};
    double worst = 0.0;
    for (const Rect& rect : rects) {
        const double thr = rect.x() * rect.x() / M_PI;
        std::vector<double> areas = {0.0, thr, rect.area() / 2.0, rect.area() - thr, rect.area()};
        for (int i = 1; i < 20; ++i) areas.push_back(rect.area() * double(i) / 20.0);
        for (double a : areas) {
            const FenceGeometry fence = optimal_fence(rect, a);
            const double len = fence_length(fence, rect);
            const double claimed = ls(rect, a);
            const double scale = std::max({claimed, len, rect.x()});
            worst = std::max(worst, std::abs(len - claimed) / scale);
        }
    }
    r.margin = slack(1e-9, worst);
    r.pass = r.margin >= 0.0;
    r.detail = "constructed fences attain the claimed minimum, worst rel gap " + fmt_sig(worst, 3);
    return r;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const AnalyticHooks& hooks) {
    const LStarFn ls = hooks.l_star_fn
                           ? hooks.l_star_fn
                           : [](const Rect& r, double a) { return l_star(r, a); };

    using CheckFn = CheckResult (*)(const VerifyOptions&, const LStarFn&);
    const CheckFn checks[] = {
        check_theorem1_half_area, check_regime_continuity,    check_symmetry,
        check_fact_ratios,        check_oracle_bracketing,    check_case_bound_soundness,
        check_complement_identity, check_partition_lemma,     check_optimizer_convergence,
        check_gradient_validation, check_reflection_properties, check_determinism_digest,
        check_dominance,
    };

    std::vector<CheckResult> results;
    results.reserve(std::size(checks));
    for (CheckFn fn : checks) {
        const Timer timer;
        CheckResult r = fn(options, ls);
        r.ms = timer.ms();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace fenceopt
