#pragma once

// Derivative-free search for smaller L/W at fixed diagram combinatorics,
// and a randomized local-minimality probe. Results are evidence within one
// fold/crossing pattern only; they say nothing about other diagrams of the
// same knot.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <iterator>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "flatknot/ribbon.hpp"

namespace flatknot {

struct OptimizeOptions {
    int max_evals = 2000;  // per restart
    int restarts = 12;
    Real simplex_scale = 0.05;
    Real penalty_weight = 10.0;
    std::uint64_t seed = 1;
    bool fix_gauge = true;  // vertex 0 at the origin, vertex 1 at (1, 0)
};

struct TracePoint {
    int eval = 0;
    Real ratio = 0.0;
};

struct OptimizeReport {
    CoreCurve best_core;
    Real best_ratio = 0.0;
    int evals_used = 0;
    bool converged = false;
    std::vector<TracePoint> trace;
};

struct LocalMinReport {
    Real base_ratio = 0.0;
    Real min_perturbed_ratio = 0.0;
    int violations = 0;
    int samples = 0;   // perturbations that kept the crossing pattern
    int rejected = 0;  // perturbations that changed it or became invalid
};

using CrossingPattern = std::set<std::pair<std::size_t, std::size_t>>;

inline CrossingPattern crossing_pattern(const CoreCurve& core) {
    CrossingPattern out;
    for (const auto& c : core.crossings()) out.emplace(c.i, c.j);
    return out;
}

// Similarity taking vertex 0 to the origin and vertex 1 to (1, 0).
inline CoreCurve gauge_fixed(const CoreCurve& core) {
    const auto& v = core.vertices();
    const Point2 d = v[1] - v[0];
    const Real s = 1.0 / norm(d);
    const Point2 u = d * s;
    std::vector<Point2> out;
    out.reserve(v.size());
    for (const auto& p : v) {
        const Point2 q = p - v[0];
        out.push_back({s * dot(q, u), s * cross(u, q)});
    }
    auto t = core.truncation();
    if (t) {
        t->start_offset *= s;
        t->end_offset *= s;
    }
    return CoreCurve(std::move(out), core.closed(), t);
}

namespace detail {

// Objective over the free vertex coordinates; remembers the starting
// combinatorics and penalizes leaving them.
class RatioObjective {
public:
    RatioObjective(const CoreCurve& start, const Weaving& weaving, const OptimizeOptions& opts)
        : base_(start), weaving_(weaving), opts_(opts), pattern_(crossing_pattern(start)),
          first_free_(opts.fix_gauge ? 2 : 0) {}

    std::vector<Real> encode(const CoreCurve& core) const {
        std::vector<Real> x;
        for (std::size_t k = first_free_; k < core.vertex_count(); ++k) {
            x.push_back(core.vertices()[k].x);
            x.push_back(core.vertices()[k].y);
        }
        return x;
    }

    // nullopt when the candidate is not a valid core
    std::optional<CoreCurve> decode(const std::vector<Real>& x) const {
        std::vector<Point2> v = base_.vertices();
        for (std::size_t k = first_free_, p = 0; k < v.size(); ++k, p += 2) v[k] = {x[p], x[p + 1]};
        try {
            return CoreCurve(std::move(v), base_.closed(), base_.truncation());
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    struct Eval {
        Real value = 0.0;
        bool feasible = false;
    };

    Eval operator()(const std::vector<Real>& x, Real reference) const {
        const auto core = decode(x);
        if (!core) return {reference + opts_.penalty_weight * 2.0, false};
        const CrossingPattern got = crossing_pattern(*core);
        std::vector<std::pair<std::size_t, std::size_t>> diff;
        std::set_symmetric_difference(got.begin(), got.end(), pattern_.begin(), pattern_.end(), std::back_inserter(diff));
        if (!diff.empty()) {
            return {reference + opts_.penalty_weight * (1.0 + static_cast<Real>(diff.size())), false};
        }
        try {
            return {ratio(*core, weaving_, default_mode(*core)).ratio, true};
        } catch (const Error&) {
            return {reference + opts_.penalty_weight, false};
        }
    }

private:
    const CoreCurve& base_;
    const Weaving& weaving_;
    const OptimizeOptions& opts_;
    CrossingPattern pattern_;
    std::size_t first_free_;
};

}  // namespace detail

// Nelder-Mead over the free coordinates with chained restarts: each restart
// rebuilds a randomly oriented simplex around the incumbent, halving its size
// after a restart that did not improve. The minima of interest are kinks
// where several contacts bind at once, and fresh simplices are what get the
// search moving along them again.
inline OptimizeReport minimize_ratio(const CoreCurve& core, const Weaving& weaving, const OptimizeOptions& opts) {
    if (opts.max_evals < 1 || !(opts.simplex_scale > 0.0) || !(opts.penalty_weight > 0.0) || opts.restarts < 0) {
        throw Error(ErrorCode::ValidationError, "invalid optimizer options");
    }
    const CoreCurve start = opts.fix_gauge ? gauge_fixed(core) : core;
    const Real start_ratio = ratio(start, weaving, default_mode(start)).ratio;  // NoPositiveWidth propagates

    const detail::RatioObjective objective(start, weaving, opts);
    std::vector<Real> best_x = objective.encode(start);
    Real best = start_ratio;
    const std::size_t dim = best_x.size();

    OptimizeReport report{start, start_ratio, 1, false, {{1, start_ratio}}};
    if (dim == 0) {
        report.converged = true;
        return report;
    }

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int evals = 1;
    auto eval = [&](const std::vector<Real>& x) {
        const auto e = objective(x, start_ratio);
        ++evals;
        if (e.feasible && e.value < best) {
            best = e.value;
            best_x = x;
            report.trace.push_back({evals, best});
        }
        return e.value;
    };

    // dimension-adapted coefficients (Gao and Han)
    const Real nd = static_cast<Real>(dim);
    const Real expand = 1.0 + 2.0 / nd;
    const Real contract = 0.75 - 1.0 / (2.0 * nd);
    const Real shrink = 1.0 - 1.0 / nd;

    Real step = opts.simplex_scale;
    for (int r = 0; r <= opts.restarts; ++r) {
        const Real before = best;
        std::vector<std::vector<Real>> simplex{best_x};
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Real> dir(dim, 0.0);
            if (r == 0) {
                dir[i] = 1.0;
            } else {
                Real len = 0.0;
                for (auto& c : dir) { c = gauss(rng); len += c * c; }
                for (auto& c : dir) c /= std::sqrt(len);
            }
            std::vector<Real> p = best_x;
            for (std::size_t j = 0; j < dim; ++j) p[j] += step * dir[j];
            simplex.push_back(std::move(p));
        }
        std::vector<Real> fv;
        fv.push_back(best);
        for (std::size_t i = 1; i < simplex.size(); ++i) fv.push_back(eval(simplex[i]));

        const int budget_end = evals + opts.max_evals;
        bool done = false;
        while (evals < budget_end) {
            std::vector<std::size_t> idx(simplex.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            {
                std::vector<std::vector<Real>> s2;
                std::vector<Real> f2;
                for (auto i : idx) { s2.push_back(simplex[i]); f2.push_back(fv[i]); }
                simplex.swap(s2);
                fv.swap(f2);
            }
            Real size = 0.0;
            for (std::size_t i = 1; i < simplex.size(); ++i) {
                for (std::size_t j = 0; j < dim; ++j) size = std::max(size, std::abs(simplex[i][j] - simplex[0][j]));
            }
            if (size < 1e-11 && fv.back() - fv.front() < 1e-13 * std::abs(fv.front())) {
                done = true;
                break;
            }

            std::vector<Real> centroid(dim, 0.0);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / static_cast<Real>(dim);
            }
            auto along = [&](Real t) {
                std::vector<Real> p(dim);
                for (std::size_t j = 0; j < dim; ++j) p[j] = centroid[j] + t * (simplex[dim][j] - centroid[j]);
                return p;
            };
            const auto xr = along(-1.0);
            const Real fr = eval(xr);
            if (fr < fv[0]) {
                const auto xe = along(-expand);
                const Real fe = eval(xe);
                if (fe < fr) { simplex[dim] = xe; fv[dim] = fe; } else { simplex[dim] = xr; fv[dim] = fr; }
            } else if (fr < fv[dim - 1]) {
                simplex[dim] = xr;
                fv[dim] = fr;
            } else {
                const bool outside = fr < fv[dim];
                const auto xc = along(outside ? -contract : contract);
                const Real fc = eval(xc);
                if (fc < std::min(fr, fv[dim])) {
                    simplex[dim] = xc;
                    fv[dim] = fc;
                } else {
                    for (std::size_t i = 1; i <= dim; ++i) {
                        for (std::size_t j = 0; j < dim; ++j) simplex[i][j] = simplex[0][j] + shrink * (simplex[i][j] - simplex[0][j]);
                        fv[i] = eval(simplex[i]);
                    }
                }
            }
        }
        report.converged = done;
        // keep the size while restarts pay off
        if (!(best < before - 1e-12 * before)) step *= 0.5;
    }

    report.best_core = *objective.decode(best_x);
    report.best_ratio = best;
    report.evals_used = evals;
    return report;
}

// Random perturbations of the free vertices (all but the first two) within
// a disk of radius epsilon. Only perturbations that keep the crossing
// pattern are scored.
inline LocalMinReport local_min_check(const CoreCurve& core, const Weaving& weaving, Real epsilon, int trials,
                                      std::uint64_t seed) {
    const LengthMode mode = default_mode(core);
    LocalMinReport rep;
    rep.base_ratio = ratio(core, weaving, mode).ratio;
    rep.min_perturbed_ratio = std::numeric_limits<Real>::infinity();
    const CrossingPattern pattern = crossing_pattern(core);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        std::vector<Point2> v = core.vertices();
        for (std::size_t k = 2; k < v.size(); ++k) {
            const Real r = epsilon * std::sqrt(static_cast<Real>(unit(rng)));
            const Real a = 2.0 * std::numbers::pi_v<Real> * static_cast<Real>(unit(rng));
            v[k] += Point2{r * std::cos(a), r * std::sin(a)};
        }
        try {
            const CoreCurve trial(std::move(v), core.closed(), core.truncation());
            if (crossing_pattern(trial) != pattern) {
                ++rep.rejected;
                continue;
            }
            const Real q = ratio(trial, weaving, mode).ratio;
            ++rep.samples;
            rep.min_perturbed_ratio = std::min(rep.min_perturbed_ratio, q);
            if (q < rep.base_ratio - 1e-9) ++rep.violations;
        } catch (const Error&) {
            ++rep.rejected;
        }
    }
    return rep;
}

}  // namespace flatknot
