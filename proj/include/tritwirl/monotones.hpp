// Copyright 2026 tritwirl contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "tritwirl/parallel.hpp"
#include "tritwirl/rng.hpp"
#include "tritwirl/sampling.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/werner.hpp"

namespace tritwirl {

enum class DistanceKind { Trace, Relent };

/// Trace-norm distance between two invariant states, evaluated on the
/// six-dimensional algebra: the summand multiplicities cancel against the
/// coefficient rescaling, so |dr+| + |dr-| + (2x2 trace norm) equals the
/// full matrix trace norm at every d.
inline double trace_distance(const RPoint& r, const RPoint& s, double tol = 1e-9) {
    detail::require_state(r, tol);
    detail::require_state(s, tol);
    const double d0 = r.r0() - s.r0();
    const double d1 = r.r1 - s.r1, d2 = r.r2 - s.r2, d3 = r.r3 - s.r3;
    const double len = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    const double block = 0.5 * (std::abs(d0 + len) + std::abs(d0 - len));
    return std::abs(r.r_plus - s.r_plus) + std::abs(r.r_minus - s.r_minus) + block;
}

namespace detail {

constexpr double kSupportTol = 1e-12;
constexpr double kLogClamp = 1e-300;  // separates "numerically zero" from support mismatch

inline double xlog_ratio(double x, double y) {
    if (x <= kSupportTol) return 0.0;  // 0 ln 0 := 0
    if (y <= kSupportTol) return std::numeric_limits<double>::infinity();
    return x * std::log(x / y);
}

/// Eigen data of the 2x2 block (r0 1 + r.sigma)/2: eigenvalues
/// (r0 +- |v|)/2 along the unit Bloch direction n (any direction at v = 0).
struct BlockEigen {
    double lo = 0.0, hi = 0.0;
    std::array<double, 3> n{0.0, 0.0, 1.0};
};

inline BlockEigen block_eigen(const RPoint& r) {
    BlockEigen e;
    const double len = std::sqrt(r.r1 * r.r1 + r.r2 * r.r2 + r.r3 * r.r3);
    e.lo = 0.5 * (r.r0() - len);
    e.hi = 0.5 * (r.r0() + len);
    if (len > 0.0) e.n = {r.r1 / len, r.r2 / len, r.r3 / len};
    return e;
}

}  // namespace detail

/// Relative entropy on the algebra: scalar terms for the one-dimensional
/// summands plus tr B_r (ln B_r - ln B_s) on the 2x2 block
/// B = (r0 1 + r.sigma)/2. Support mismatch yields +infinity (a
/// distinguished value, never a large float). Independent of d.
inline double relative_entropy(const RPoint& r, const RPoint& s, double tol = 1e-9) {
    detail::require_state(r, tol);
    detail::require_state(s, tol);
    const double inf = std::numeric_limits<double>::infinity();
    double total = detail::xlog_ratio(r.r_plus, s.r_plus);
    total += detail::xlog_ratio(r.r_minus, s.r_minus);
    if (std::isinf(total)) return inf;

    const auto er = detail::block_eigen(r);
    const auto es = detail::block_eigen(s);
    // tr B_r ln B_r
    for (double lam : {er.lo, er.hi}) {
        if (lam > detail::kSupportTol) total += lam * std::log(lam);
    }
    // -tr B_r ln B_s = -sum_j <u_j|B_r|u_j> ln mu_j over B_s's eigenpairs
    const double dot = r.r1 * es.n[0] + r.r2 * es.n[1] + r.r3 * es.n[2];
    const double w_lo = 0.5 * (r.r0() - dot);
    const double w_hi = 0.5 * (r.r0() + dot);
    for (auto [mu, w] : {std::pair{es.lo, w_lo}, std::pair{es.hi, w_hi}}) {
        if (mu <= detail::kSupportTol) {
            if (w > detail::kSupportTol) return inf;
            continue;
        }
        total -= w * std::log(std::max(mu, detail::kLogClamp));
    }
    return total;
}

inline double distance(const RPoint& r, const RPoint& s, DistanceKind kind, double tol = 1e-9) {
    return kind == DistanceKind::Trace ? trace_distance(r, s, tol) : relative_entropy(r, s, tol);
}

struct MonotoneOptions {
    int starts = 16;
    double tol = 1e-6;          // accepted optimality slack
    uint64_t seed = 20260824;   // multistart sampling key
    int max_iter = 400;         // simplex iterations per stage
    double penalty = 1e3;       // exact-penalty weight for constraint violation
    bool fine_polish = true;    // boundary-walking polish for every start (vs best only)
};

struct MonotoneResult {
    double value = 0.0;
    RPoint argmin;
    bool converged = true;
    std::vector<double> start_values;  // per-start local minima, for agreement checks
};

namespace detail {

/// Total positive-part violation of the triseparability description plus
/// the state-space conditions; zero exactly on the accepted set.
inline double tsp_violation(const RPoint& s) {
    auto pos = [](double x) { return x > 0.0 ? x : 0.0; };
    const double rp = s.r_plus, rm = s.r_minus;
    const double r0 = s.r0();
    const double norm = std::sqrt(s.r1 * s.r1 + s.r2 * s.r2 + s.r3 * s.r3);
    double v = pos(-rp) + pos(-rm) + pos(-r0) + pos(norm - r0);
    v += pos(rm - (1.0 / 6.0 - 1e-9));
    v += pos((1.0 - 2.0 * rm) / 4.0 - rp);
    v += pos(rp - (1.0 - 5.0 * rm));
    v += pos(norm - (1.0 - 5.0 * rm - rp));
    v += pos(-(s.r1 + rp - rm));  // keeps the search off the spurious lobe
    const double lhs = (3.0 * s.r3 * s.r3 + std::pow(1.0 - 3.0 * rp - 3.0 * rm, 2)) * (1.0 - 6.0 * rm);
    const double rhs = (s.r1 + rp - rm) * (std::pow(s.r1 - 2.0 * (rp - rm), 2) - 3.0 * s.r2 * s.r2);
    v += pos(lhs - rhs);
    return v;
}

struct SimplexResult {
    std::array<double, 5> x{};
    double f = 0.0;
};

/// Nelder-Mead in five dimensions (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2).
template <typename F>
inline SimplexResult nelder_mead(F&& f, std::array<double, 5> x0, double scale, int max_iter) {
    constexpr int n = 5;
    std::array<std::pair<double, std::array<double, 5>>, n + 1> s;
    s[0] = {f(x0), x0};
    for (int i = 0; i < n; ++i) {
        auto x = x0;
        x[i] += scale;
        s[i + 1] = {f(x), x};
    }
    auto by_f = [](const auto& a, const auto& b) { return a.first < b.first; };
    for (int iter = 0; iter < max_iter; ++iter) {
        std::sort(s.begin(), s.end(), by_f);
        double diam = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int k = 0; k < n; ++k) diam = std::max(diam, std::abs(s[i].second[k] - s[0].second[k]));
        if (s[n].first - s[0].first < 1e-14 && diam < 1e-11) break;

        std::array<double, 5> c{};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) c[k] += s[i].second[k] / n;
        auto blend = [&](double t) {  // c + t (c - worst)
            std::array<double, 5> x;
            for (int k = 0; k < n; ++k) x[k] = c[k] + t * (c[k] - s[n].second[k]);
            return x;
        };
        const auto xr = blend(1.0);
        const double fr = f(xr);
        if (fr < s[0].first) {
            const auto xe = blend(2.0);
            const double fe = f(xe);
            s[n] = fe < fr ? std::pair{fe, xe} : std::pair{fr, xr};
        } else if (fr < s[n - 1].first) {
            s[n] = {fr, xr};
        } else {
            const auto xc = blend(fr < s[n].first ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, s[n].first)) {
                s[n] = {fc, xc};
            } else {  // shrink toward the best vertex
                for (int i = 1; i <= n; ++i) {
                    for (int k = 0; k < n; ++k) s[i].second[k] = 0.5 * (s[i].second[k] + s[0].second[k]);
                    s[i].first = f(s[i].second);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), by_f);
    return {s[0].second, s[0].first};
}

/// Greedy direction search with a geometric step ladder. The distance
/// objectives have polyhedral kinks that collapse simplex methods, so this
/// is used to polish their output: at each scale the candidate moves along
/// the best of the signed axes plus a batch of random directions until no
/// direction improves, then the scale shrinks.
template <typename F>
inline SimplexResult pattern_search(F&& f, std::array<double, 5> x, uint64_t seed, int max_moves = 400) {
    constexpr int n = 5;
    double fx = f(x);
    uint64_t batch = 0;
    auto make_dirs = [&] {
        std::vector<std::array<double, n>> dirs;
        for (int i = 0; i < n; ++i)
            for (double sgn : {1.0, -1.0}) {
                std::array<double, n> e{};
                e[i] = sgn;
                dirs.push_back(e);
            }
        CounterRng rng(seed, batch++);
        for (int k = 0; k < 48; ++k) {
            std::array<double, n> e{};
            double norm = 0.0;
            for (int i = 0; i < n; ++i) {
                e[i] = rng.normal();
                norm += e[i] * e[i];
            }
            norm = std::sqrt(norm);
            if (norm < 1e-12) continue;
            for (int i = 0; i < n; ++i) e[i] /= norm;
            dirs.push_back(e);
        }
        return dirs;
    };
    for (double scale = 0.6; scale > 1e-8; scale *= 0.45) {
        // resample the random directions on stall: the improving cone can be
        // narrow near a kink, so one batch per scale is not enough; the batch
        // cap keeps sub-threshold creep from stretching a level indefinitely
        const double gain = std::max(1e-13, 1e-10 * scale);
        for (int stall = 0, batches = 0; stall < 3 && batches < 12; ++batches) {
            const auto dirs = make_dirs();
            bool improved = false;
            for (int move = 0; move < max_moves; ++move) {
                double best_f = fx;
                std::array<double, n> best_x = x;
                std::array<double, n> best_e{};
                for (const auto& e : dirs) {
                    std::array<double, n> y = x;
                    for (int i = 0; i < n; ++i) y[i] += scale * e[i];
                    const double fy = f(y);
                    if (fy < best_f) {
                        best_f = fy;
                        best_x = y;
                        best_e = e;
                    }
                }
                if (best_f >= fx - gain) break;
                // accelerate along the winning direction while it keeps
                // improving: turns long creeps through curved valleys into a
                // logarithmic number of evaluations
                double step = scale;
                for (int k = 0; k < 40; ++k) {
                    step *= 2.0;
                    std::array<double, n> y = best_x;
                    for (int i = 0; i < n; ++i) y[i] += step * best_e[i];
                    const double fy = f(y);
                    if (fy < best_f) {
                        best_f = fy;
                        best_x = y;
                    } else {
                        break;
                    }
                }
                fx = best_f;
                x = best_x;
                improved = true;
            }
            stall = improved ? 0 : stall + 1;
        }
    }
    return {x, fx};
}

/// Pulls a point into the triseparable set by bisecting toward A along the
/// segment, which stays inside once it enters (convexity).
inline RPoint project_to_tsp(RPoint p, double tol = 1e-9) {
    if (is_triseparable(p, tol)) return p;
    const RPoint a = special_point("A");
    double lo = 0.0, hi = 1.0;  // p + t (A - p); t = 1 is A itself
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        RPoint q{p.r_plus + mid * (a.r_plus - p.r_plus), p.r_minus + mid * (a.r_minus - p.r_minus),
                 p.r1 + mid * (a.r1 - p.r1), p.r2 + mid * (a.r2 - p.r2), p.r3 + mid * (a.r3 - p.r3)};
        if (is_triseparable(q, tol)) hi = mid; else lo = mid;
    }
    return RPoint{p.r_plus + hi * (a.r_plus - p.r_plus), p.r_minus + hi * (a.r_minus - p.r_minus),
                  p.r1 + hi * (a.r1 - p.r1), p.r2 + hi * (a.r2 - p.r2), p.r3 + hi * (a.r3 - p.r3)};
}

}  // namespace detail

/// E_Delta(r) = min over triseparable sigma of the chosen distance.
/// Both objectives are convex over the convex body, so multistart local
/// search is globally correct; a penalty guards the boundary and the final
/// candidate is projected back onto the set before reporting.
inline MonotoneResult monotone(const RPoint& r, DistanceKind kind, const MonotoneOptions& opts = {}) {
    detail::require_state(r, 1e-9);
    MonotoneResult res;
    if (is_triseparable(r)) {
        res.argmin = r;
        return res;
    }

    auto objective = [&](const std::array<double, 5>& x) {
        const RPoint s = RPoint::from_array(x);
        const double v = detail::tsp_violation(s);
        double d;
        if (kind == DistanceKind::Trace) {
            d = trace_distance(r, s, 1.0);  // loose tol: the penalty handles feasibility
        } else {
            if (!validate_rpoint(s, std::nullopt, 1e-6)) return 1e6 + opts.penalty * v;
            d = relative_entropy(r, s, 1e-6);
            if (std::isinf(d)) d = 1e6 + trace_distance(r, s, 1.0);  // finite guide off-support
        }
        return d + opts.penalty * v;
    };

    std::vector<RPoint> starts;
    for (const char* name : {"A", "B", "C", "D"}) starts.push_back(special_point(name));
    CounterRng rng(opts.seed, 0x7453u);
    while (static_cast<int>(starts.size()) < opts.starts) {
        RPoint p = oracle::random_tsp_rpoint(rng);
        const double t = rng.uniform();  // random pull toward A keeps starts spread inside
        const RPoint a = special_point("A");
        starts.push_back(RPoint{p.r_plus + t * (a.r_plus - p.r_plus), p.r_minus + t * (a.r_minus - p.r_minus),
                                p.r1 + t * (a.r1 - p.r1), p.r2 + t * (a.r2 - p.r2), p.r3 + t * (a.r3 - p.r3)});
    }
    if (static_cast<int>(starts.size()) > opts.starts && opts.starts > 0)
        starts.resize(opts.starts);

    // A candidate is first clamped into the state space, then retracted
    // onto the triseparable set; the polish minimizes the distance measured
    // at the retracted point, so boundary walking has a wide improving cone
    // and every reported value is attained by a feasible point.
    auto sanitize = [](const std::array<double, 5>& x) {
        RPoint s{std::max(x[0], 0.0), std::max(x[1], 0.0), x[2], x[3], x[4]};
        const double w = s.r_plus + s.r_minus;
        if (w > 1.0) {
            s.r_plus /= w;
            s.r_minus /= w;
        }
        const double r0 = s.r0();
        const double norm = std::sqrt(s.r1 * s.r1 + s.r2 * s.r2 + s.r3 * s.r3);
        if (norm > r0) {
            const double f = r0 > 0.0 ? r0 / norm : 0.0;
            s.r1 *= f;
            s.r2 *= f;
            s.r3 *= f;
        }
        return s;
    };
    auto feasible_objective = [&](const std::array<double, 5>& x) {
        const RPoint s = detail::project_to_tsp(sanitize(x));
        if (kind == DistanceKind::Trace) return trace_distance(r, s, 1e-6);
        const double d = relative_entropy(r, s, 1e-6);
        return std::isinf(d) ? 1e6 + trace_distance(r, s, 1e-6) : d;
    };

    // Simplex descent finds the basin cheaply; the pattern-search polish
    // handles the polyhedral kinks that stall it.
    detail::SimplexResult best{};
    best.f = std::numeric_limits<double>::infinity();
    uint64_t start_idx = 0;
    for (const RPoint& s0 : starts) {
        auto run = detail::nelder_mead(objective, s0.as_array(), 0.08, opts.max_iter);
        run.f = feasible_objective(run.x);
        if (opts.fine_polish) run = detail::pattern_search(feasible_objective, run.x, opts.seed ^ (0x9e37u + start_idx));
        ++start_idx;
        res.start_values.push_back(run.f);
        if (run.f < best.f) best = run;
    }
    if (!opts.fine_polish) best = detail::pattern_search(feasible_objective, best.x, opts.seed ^ 0xb0115u);

    res.argmin = detail::project_to_tsp(sanitize(best.x));
    res.value = distance(r, res.argmin, kind, 1e-6);
    if (res.value <= opts.tol) res.value = std::max(res.value, 0.0);
    int agree = 0;
    for (double v : res.start_values)
        if (v <= best.f + 1e-4) ++agree;
    res.converged = agree >= 1 && std::isfinite(res.value);
    return res;
}

enum class ContourRegion { WpTriangle, QubitPlane };

struct ContourNode {
    double x = 0.0, y = 0.0;
    double e1 = 0.0, es = 0.0;
    bool tsp = false;
};

struct ContourGrid {
    ContourRegion region = ContourRegion::WpTriangle;
    double step = 0.01;
    std::vector<ContourNode> nodes;
};

inline RPoint contour_node_point(ContourRegion region, double x, double y) {
    return region == ContourRegion::WpTriangle ? RPoint{x, y, 0.0, 0.0, 0.0} : RPoint{x, 0.0, 0.0, 0.0, y};
}

/// Both monotones on a regular grid over a two-dimensional slice: the
/// permutation-averaged triangle (r+, r-) or the qubit plane (r+, r3).
/// Nodes are evaluated concurrently; output order is by node index.
inline ContourGrid contour_grid(ContourRegion region, double step, MonotoneOptions opts = {}) {
    if (!(step > 0.0) || step > 0.1) throw std::invalid_argument("contour_grid: step must be in (0, 0.1]");
    ContourGrid g;
    g.region = region;
    g.step = step;
    const double slack = 1e-12;
    if (region == ContourRegion::WpTriangle) {
        for (int i = 0; i * step <= 1.0 + slack; ++i)
            for (int j = 0; i * step + j * step <= 1.0 + slack; ++j)
                g.nodes.push_back(ContourNode{std::min(i * step, 1.0), std::min(j * step, 1.0)});
    } else {
        for (int i = 0; i * step <= 1.0 + slack; ++i) {
            const double x = std::min(i * step, 1.0);
            const int jmax = static_cast<int>((1.0 - x + slack) / step);
            for (int j = -jmax; j <= jmax; ++j) {
                double y = j * step;
                y = std::clamp(y, -(1.0 - x), 1.0 - x);
                g.nodes.push_back(ContourNode{x, y});
            }
        }
    }
    parallel_for(static_cast<int>(g.nodes.size()), [&](int idx) {
        ContourNode& node = g.nodes[idx];
        const RPoint p = contour_node_point(region, node.x, node.y);
        node.tsp = is_triseparable(p);
        MonotoneOptions local = opts;
        local.seed = opts.seed + 1000003ull * static_cast<uint64_t>(idx);
        node.e1 = monotone(p, DistanceKind::Trace, local).value;
        node.es = monotone(p, DistanceKind::Relent, local).value;
    });
    return g;
}

/// CSV: header x,y,E1,ES,tsp; 12 significant digits; infinities spelled
/// "inf" (possible in the ES column only).
inline void write_contour_csv(const ContourGrid& g, std::ostream& out) {
    out << "x,y,E1,ES,tsp\n";
    out << std::setprecision(12);
    for (const auto& n : g.nodes) {
        out << n.x << ',' << n.y << ',' << n.e1 << ',';
        if (std::isinf(n.es))
            out << "inf";
        else
            out << n.es;
        out << ',' << (n.tsp ? 1 : 0) << '\n';
    }
}

/// True iff the monotone is non-increasing (within 1e-5) along the n-point
/// discretization of the segment from r to a triseparable endpoint.
inline bool segment_monotonicity_check(const RPoint& r, const RPoint& sigma_ts, DistanceKind kind, int n,
                                       const MonotoneOptions& opts = {}) {
    if (!is_triseparable(sigma_ts)) throw std::invalid_argument("segment_monotonicity_check: endpoint not triseparable");
    if (n < 2) throw std::invalid_argument("segment_monotonicity_check: need n >= 2");
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / (n - 1);
        const RPoint p{r.r_plus + t * (sigma_ts.r_plus - r.r_plus), r.r_minus + t * (sigma_ts.r_minus - r.r_minus),
                       r.r1 + t * (sigma_ts.r1 - r.r1), r.r2 + t * (sigma_ts.r2 - r.r2),
                       r.r3 + t * (sigma_ts.r3 - r.r3)};
        const double val = monotone(p, kind, opts).value;
        if (val > prev + 1e-5) return false;
        prev = val;
    }
    return true;
}

}  // namespace tritwirl
