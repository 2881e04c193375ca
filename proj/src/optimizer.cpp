#include "fenceopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "fenceopt/bounds.hpp"
#include "fenceopt/errors.hpp"
#include "fenceopt/io.hpp"

namespace fenceopt {

namespace {

struct Eval {
    bool feasible{false};
    double len{0.0};
    double area{0.0};
};

Eval evaluate(const Rect& rect, const FencePolyline& f) {
    Eval e;
    for (const Point& v : f.interior)
        if (!(v.x > 0.0) || !(v.x < rect.x()) || !(v.y > 0.0) || !(v.y < rect.y())) return e;
    const auto loop = closed_loop(f, rect, Side::Left);
    if (!loop_is_simple(loop)) return e;
    const double area = shoelace(loop);
    if (!(area > 0.0)) return e;
    e.feasible = true;
    e.len = fence_length(f, rect);
    e.area = area;
    return e;
}

double wrap_param(const Rect& rect, double t) {
    const double p = border_perimeter(rect);
    double w = std::fmod(t, p);
    if (w < 0.0) w += p;
    return w;
}

FencePolyline stepped(const Rect& rect, const FencePolyline& f, const std::vector<double>& dir,
                      double step) {
    FencePolyline g = f;
    g.t_start = wrap_param(rect, f.t_start - step * dir[0]);
    g.t_end = wrap_param(rect, f.t_end - step * dir[1]);
    for (std::size_t i = 0; i < g.interior.size(); ++i) {
        g.interior[i].x -= step * dir[2 + 2 * i];
        g.interior[i].y -= step * dir[3 + 2 * i];
    }
    return g;
}

FencePolyline merge_close_vertices(const FencePolyline& f, const Rect& rect, double eps) {
    FencePolyline g = f;
    g.interior.clear();
    Point last = border_point(rect, f.t_start);
    for (const Point& v : f.interior) {
        if (dist(v, last) < eps) continue;
        g.interior.push_back(v);
        last = v;
    }
    const Point end = border_point(rect, f.t_end);
    while (!g.interior.empty() && dist(g.interior.back(), end) < eps) g.interior.pop_back();
    return g;
}

void check_config(const OptimizerConfig& cfg) {
    if (cfg.max_iter <= 0 || cfg.vertex_count < 0) throw DomainError("iteration and vertex counts must be positive");
    if (!(cfg.step > 0.0) || !(cfg.penalty_init > 0.0) || !(cfg.penalty_growth > 1.0))
        throw DomainError("step and penalty parameters must be positive");
    if (!(cfg.tol_area > 0.0) || cfg.tol_area >= 1.0 || !(cfg.tol_grad > 0.0) || cfg.tol_grad >= 1.0)
        throw DomainError("tolerances must lie in (0, 1)");
}

} // namespace

FencePolyline init_straight_cut(const Rect& rect, double a, int vertex_count) {
    if (!(a > 0.0) || !(a < rect.area())) throw DomainError("target area must lie in (0, X*Y)");
    if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
    const double x = rect.x(), y = rect.y();
    const double h = a / x;
    FencePolyline f;
    f.t_start = x + h;                  // (X, h), right side
    f.t_end = 2.0 * x + 2.0 * y - h;    // (0, h), left side
    f.interior.reserve(static_cast<std::size_t>(vertex_count));
    for (int i = 1; i <= vertex_count; ++i)
        f.interior.push_back({x * (1.0 - double(i) / (vertex_count + 1)), h});
    return f;
}

FencePolyline init_corner_staircase(const Rect& rect, double a, int vertex_count) {
    if (!(a > 0.0) || !(a < rect.area())) throw DomainError("target area must lie in (0, X*Y)");
    if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
    const double x = rect.x(), y = rect.y();
    const double w = std::min(std::sqrt(a), 0.95 * x);
    const double h = a / w;
    if (!(h < y)) throw DomainError("area too large for a corner initializer");
    FencePolyline f;
    f.t_start = w;                      // (w, 0), bottom side
    f.t_end = 2.0 * x + 2.0 * y - h;    // (0, h), left side
    const double total = h + w;         // up the right leg, then left along the top leg
    f.interior.reserve(static_cast<std::size_t>(vertex_count));
    for (int i = 1; i <= vertex_count; ++i) {
        const double s = total * i / (vertex_count + 1);
        f.interior.push_back(s < h ? Point{w, s} : Point{w - (s - h), h});
    }
    return f;
}

FencePolyline init_complement_corner(const Rect& rect, double a, int vertex_count) {
    if (!(a > 0.0) || !(a < rect.area())) throw DomainError("target area must lie in (0, X*Y)");
    if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
    const double x = rect.x(), y = rect.y();
    const double rest = rect.area() - a;
    const double w = std::min(std::sqrt(rest), 0.95 * x);
    const double h = rest / w;
    if (!(h < y)) throw DomainError("area too large for a corner initializer");
    FencePolyline f;
    f.t_start = x + (y - h);            // (X, Y-h), right side
    f.t_end = x + y + w;                // (X-w, Y), top side
    const double xx = x, yy = y;
    const double total = w + h;
    f.interior.reserve(static_cast<std::size_t>(vertex_count));
    for (int i = 1; i <= vertex_count; ++i) {
        const double s = total * i / (vertex_count + 1);
        f.interior.push_back(s < w ? Point{xx - s, yy - h} : Point{xx - w, yy - h + (s - w)});
    }
    return f;
}

FencePolyline init_for_regime(const Rect& rect, double a, int vertex_count) {
    switch (regime(rect, a)) {
        case Regime::QuarterDisk: return init_corner_staircase(rect, a, vertex_count);
        case Regime::StraightCut: return init_straight_cut(rect, a, vertex_count);
        case Regime::ComplementQuarterDisk: return init_complement_corner(rect, a, vertex_count);
    }
    throw DomainError("unreachable regime");
}

FencePolyline perturb(const FencePolyline& f, const Rect& rect, double magnitude,
                      std::uint64_t seed) {
    if (!(magnitude >= 0.0) || !std::isfinite(magnitude))
        throw DomainError("perturbation magnitude must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Point> noise(f.interior.size());
    for (Point& n : noise) n = {unit(rng), unit(rng)};

    const double margin = 1e-6 * rect.x();
    double scale = magnitude;
    for (int attempt = 0; attempt < 40; ++attempt, scale *= 0.5) {
        FencePolyline g = f;
        for (std::size_t i = 0; i < g.interior.size(); ++i) {
            Point v = g.interior[i] + scale * noise[i];
            v.x = std::clamp(v.x, margin, rect.x() - margin);
            v.y = std::clamp(v.y, margin, rect.y() - margin);
            g.interior[i] = v;
        }
        if (evaluate(rect, g).feasible) return g;
    }
    return f;
}

OptimizeResult optimize(const Rect& rect, double a, const FencePolyline& init,
                        const OptimizerConfig& cfg) {
    check_config(cfg);
    if (!(a > 0.0) || !(a < rect.area())) throw DomainError("target area must lie in (0, X*Y)");
    validate_polyline(init, rect);

    const double xy = rect.area();
    FencePolyline cur = init;
    cur.t_start = wrap_param(rect, cur.t_start);
    cur.t_end = wrap_param(rect, cur.t_end);
    Eval e = evaluate(rect, cur);
    if (!e.feasible) throw GeometryError("initial fence loop must be simple");

    OptimizeResult res;
    res.min_bound_ratio = std::numeric_limits<double>::infinity();

    FencePolyline best = cur;
    Eval best_e = e;
    auto better = [&](const Eval& lhs, const Eval& rhs) {
        const bool lw = std::abs(lhs.area - a) <= cfg.tol_area * xy;
        const bool rw = std::abs(rhs.area - a) <= cfg.tol_area * xy;
        if (lw != rw) return lw;
        if (lw) return lhs.len < rhs.len;
        return std::abs(lhs.area - a) < std::abs(rhs.area - a);
    };
    auto note_accepted = [&](const FencePolyline& f, const Eval& ev) {
        const double floor = l_star(rect, std::clamp(ev.area, 0.0, xy));
        if (floor > 0.0) {
            const double ratio = ev.len / floor;
            res.min_bound_ratio = std::min(res.min_bound_ratio, ratio);
            if (ratio < 1.0 - 1e-9)
                throw GeometryError("fence length " + fmt_double(ev.len) +
                                    " beats the analytic lower bound " + fmt_double(floor) +
                                    " at area " + fmt_double(ev.area));
        }
        if (better(ev, best_e)) {
            best = f;
            best_e = ev;
        }
    };
    note_accepted(cur, e);

    // Least-squares multiplier warm start. With lambda = 0 the first rounds
    // descend almost pure length, which can collapse the fence to a point
    // before the multiplier catches up; starting at the stationarity
    // estimate keeps the area force active from the first move.
    double lambda = 0.0;
    {
        const Gradients g0 = gradients(cur, rect);
        double gl_ga = 0.0, gaga = 0.0;
        for (std::size_t i = 0; i < g0.area.size(); ++i) {
            gl_ga += g0.length[i] * g0.area[i];
            gaga += g0.area[i] * g0.area[i];
        }
        if (gaga > 0.0) lambda = -gl_ga / gaga;
    }
    double mu = cfg.penalty_init;
    double step = cfg.step;
    const double step_floor = 1e-14 * rect.x();
    const double eps_merge = 1e-6 * rect.x();
    const double move_cap = 0.1 * rect.x();
    int iter = 0;
    bool converged = false;
    bool underflow = false;

    std::vector<double> dir;
    while (iter < cfg.max_iter && !converged && !underflow) {
        const double c_enter = std::abs(e.area - a);
        for (int inner = 0; inner < 250 && iter < cfg.max_iter; ++inner) {
            const double c = e.area - a;
            const Gradients g = gradients(cur, rect);
            const std::size_t dofs = g.length.size();

            if (std::abs(c) <= cfg.tol_area * xy) {
                double gaga = 0.0, gl_ga = 0.0;
                for (std::size_t i = 0; i < dofs; ++i) {
                    gaga += g.area[i] * g.area[i];
                    gl_ga += g.length[i] * g.area[i];
                }
                double proj2 = 0.0;
                for (std::size_t i = 0; i < dofs; ++i) {
                    const double p = g.length[i] - (gaga > 0.0 ? gl_ga / gaga : 0.0) * g.area[i];
                    proj2 += p * p;
                }
                if (std::sqrt(proj2) <= cfg.tol_grad) {
                    converged = true;
                    break;
                }
            }

            dir.assign(dofs, 0.0);
            double gnorm2 = 0.0;
            const double weight = lambda + mu * c;
            for (std::size_t i = 0; i < dofs; ++i) {
                dir[i] = g.length[i] + weight * g.area[i];
                gnorm2 += dir[i] * dir[i];
            }
            if (gnorm2 <= 1e-24) break;

            // Trust-region cap: when the multiplier term blows the gradient
            // up, an uncapped move throws every vertex out of the rectangle
            // and the line search dies before it can recover the area.
            double eff = step;
            const double dnorm = std::sqrt(gnorm2);
            if (eff * dnorm > move_cap) eff = move_cap / dnorm;

            const double phi = e.len + lambda * c + 0.5 * mu * c * c;
            const FencePolyline cand = stepped(rect, cur, dir, eff);
            ++iter;
            const Eval ec = evaluate(rect, cand);
            const double cc = ec.area - a;
            const double phic = ec.len + lambda * cc + 0.5 * mu * cc * cc;
            if (ec.feasible && phic <= phi - 1e-4 * eff * gnorm2) {
                cur = cand;
                e = ec;
                note_accepted(cur, e);
                step = std::min(step * 1.4, cfg.step * 4.0);
            } else {
                step *= 0.5;
                if (step < step_floor) {
                    // A stalled line search is usually a collapsed segment whose
                    // direction is numerically meaningless; merging the twins
                    // restores a usable gradient. Only give up if there is
                    // nothing left to merge.
                    FencePolyline merged = merge_close_vertices(cur, rect, eps_merge);
                    if (merged.interior.size() != cur.interior.size()) {
                        const Eval em = evaluate(rect, merged);
                        if (em.feasible) {
                            cur = std::move(merged);
                            e = em;
                            note_accepted(cur, e);
                            step = cfg.step;
                            continue;
                        }
                    }
                    underflow = true;
                    break;
                }
            }
        }
        if (converged || underflow) break;

        const double c = e.area - a;
        lambda += mu * c;
        if (std::abs(c) > 0.25 * c_enter) mu = std::min(mu * cfg.penalty_growth, 1e12);

        FencePolyline merged = merge_close_vertices(cur, rect, eps_merge);
        if (merged.interior.size() != cur.interior.size()) {
            const Eval em = evaluate(rect, merged);
            if (em.feasible) {
                cur = std::move(merged);
                e = em;
                note_accepted(cur, e);
            }
        }
        step = std::max(step, cfg.step * 1e-3);
    }

    res.fence = best;
    res.length = best_e.len;
    res.area = best_e.area;
    res.converged = converged;
    res.iterations = iter;
    return res;
}

OptimizeResult multi_start(const Rect& rect, double a, std::span<const std::uint64_t> seeds,
                           const OptimizerConfig& cfg) {
    if (seeds.empty()) throw DomainError("multi_start needs at least one seed");
    bool have = false;
    OptimizeResult best;
    std::uint64_t best_seed = 0;
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed : seeds) {
        OptimizerConfig run_cfg = cfg;
        run_cfg.seed = seed;
        const FencePolyline start =
            perturb(init_for_regime(rect, a, cfg.vertex_count), rect, 0.01 * rect.x(), seed);
        OptimizeResult r = optimize(rect, a, start, run_cfg);
        worst_ratio = std::min(worst_ratio, r.min_bound_ratio);
        if (!have || r.length < best.length ||
            (r.length == best.length && seed < best_seed)) {
            have = true;
            best = std::move(r);
            best_seed = seed;
        }
    }
    best.min_bound_ratio = worst_ratio;
    return best;
}

} // namespace fenceopt
