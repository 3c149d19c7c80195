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

// End-to-end acceptance checks. Each numbered criterion prints one
// PASS/FAIL line; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "tritwirl/monotones.hpp"
#include "tritwirl/sampling.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/suites.hpp"
#include "tritwirl/tilde_dual.hpp"
#include "tritwirl/werner.hpp"

using namespace tritwirl;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0.0 && elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL", label.c_str(), elapsed,
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

bool rat5_equal(const std::array<Rat, 5>& got, const std::array<Rat, 5>& want, const std::string& tag,
                std::string& detail) {
    if (got == want) return true;
    detail += tag + " mismatch; ";
    return false;
}

double spoint_diff(const SPoint& a, const SPoint& b) {
    return std::max({std::abs(a.s_plus - b.s_plus), std::abs(a.s_minus - b.s_minus), std::abs(a.s1 - b.s1),
                     std::abs(a.s2 - b.s2), std::abs(a.s3 - b.s3)});
}

// Euclidean distance from (x, y) to the closed triangle with the given
// vertices.
double triangle_distance(double x, double y, std::array<std::array<double, 2>, 3> v) {
    // inside test via signed areas
    auto cross = [](double ax, double ay, double bx, double by) { return ax * by - ay * bx; };
    double s1 = cross(v[1][0] - v[0][0], v[1][1] - v[0][1], x - v[0][0], y - v[0][1]);
    double s2 = cross(v[2][0] - v[1][0], v[2][1] - v[1][1], x - v[1][0], y - v[1][1]);
    double s3 = cross(v[0][0] - v[2][0], v[0][1] - v[2][1], x - v[2][0], y - v[2][1]);
    if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % 3];
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double len2 = dx * dx + dy * dy;
        double t = ((x - a[0]) * dx + (y - a[1]) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
        const double px = a[0] + t * dx - x, py = a[1] + t * dy - y;
        best = std::min(best, std::sqrt(px * px + py * py));
    }
    return best;
}

}  // namespace

int main() {
    criterion(1, "named-point catalog exact as rationals", 1.0, [](std::string& detail) {
        bool ok = true;
        const Rat z(0);
        ok &= rat5_equal(special_point_exact("A"), {Rat(1, 6), Rat(1, 6), z, z, z}, "A", detail);
        ok &= rat5_equal(special_point_exact("B"), {Rat(1), z, z, z, z}, "B", detail);
        ok &= rat5_equal(special_point_exact("C"), {Rat(1, 4), z, z, z, z}, "C", detail);
        ok &= rat5_equal(special_point_exact("D"), {Rat(1, 3), z, Rat(2, 3), z, z}, "D", detail);
        ok &= rat5_equal(special_point_exact("E"), {z, z, Rat(-1), z, z}, "E", detail);
        ok &= rat5_equal(special_point_exact("F"), {z, Rat(1, 3), Rat(-2, 3), z, z}, "F", detail);
        ok &= rat5_equal(special_point_exact("G"), {Rat(1, 5), z, z, z, z}, "G", detail);
        ok &= rat5_equal(tilde_special_point_exact("A", 3), {Rat(1, 2), Rat(1, 2), z, z, z}, "~A", detail);
        ok &= rat5_equal(tilde_special_point_exact("B", 3), {Rat(1, 2), z, Rat(1, 2), z, z}, "~B", detail);
        ok &= rat5_equal(tilde_special_point_exact("C", 3), {Rat(19, 32), Rat(3, 16), Rat(-5, 32), z, z}, "~C",
                         detail);
        ok &= rat5_equal(tilde_special_point_exact("D", 3), {Rat(1), z, z, z, z}, "~D", detail);
        ok &= rat5_equal(tilde_special_point_exact("E", 3), {z, Rat(1, 2), Rat(-1, 2), z, z}, "~E", detail);
        ok &= rat5_equal(tilde_special_point_exact("F", 3), {z, Rat(1), z, z, z}, "~F", detail);
        ok &= rat5_equal(tilde_special_point_exact("G", 3), {Rat(3, 5), Rat(1, 5), Rat(-1, 5), z, z}, "~G", detail);
        // the exact tuples drive the floating-point views
        for (const char* n : {"A", "B", "C", "D", "E", "F", "G"}) {
            const auto e = special_point_exact(n);
            const RPoint p = special_point(n);
            if (std::abs(p.r_plus - e[0].value()) != 0.0) ok = false;
            if (spoint_diff(tilde_special_point(n, 3), iota_apply(p, 3)) > 1e-12) {
                ok = false;
                detail += std::string(n) + " tilde image off; ";
            }
        }
        return ok;
    });

    criterion(2, "closed-form transpose test vs eigensolver, 10^4 points", 60.0, [](std::string& detail) {
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            CounterRng rng(7, static_cast<uint64_t>(i));
            const RPoint r = oracle::random_rpoint(rng, 3);
            const CMat pt = oracle::partial_transpose_1(reconstruct(r, 3));
            const bool oracle_ppt = hermitian_eigenvalues(pt).front() >= -1e-9;
            if (oracle_ppt != is_ppt1(r)) ++bad;
        }
        if (bad) detail = std::to_string(bad) + " disagreements";
        return bad == 0;
    });

    criterion(3, "sampling soundness, 10^4 product triples + 10^4 split vectors", 60.0, [](std::string& detail) {
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            CounterRng rng(11, static_cast<uint64_t>(i));
            if (!is_triseparable(oracle::random_tsp_rpoint(rng, 3), 1e-9)) ++bad;
            const auto psi1 = oracle::random_unit_vector(rng, 3);
            const auto phi23 = oracle::random_unit_vector(rng, 9);
            const RPoint b = rpoint_from_cparams(cparams_from_vector(psi1, phi23));
            if (!is_biseparable(b, Partition(1), 1e-9)) ++bad;
        }
        if (bad) detail = std::to_string(bad) + " failures";
        return bad == 0;
    });

    criterion(4, "swap-invariant slice: transpose test = biseparability, 50^3 grid", 30.0, [](std::string& detail) {
        int bad = 0, states = 0;
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 50; ++j)
                for (int k = 0; k < 50; ++k) {
                    const RPoint r{i / 49.0, j / 49.0, -1.0 + 2.0 * k / 49.0, 0.0, 0.0};
                    if (!validate_rpoint(r)) continue;
                    ++states;
                    if (is_ppt1(r) != is_biseparable(r, Partition(1))) ++bad;
                }
        detail = std::to_string(states) + " states";
        if (bad) detail += ", " + std::to_string(bad) + " disagreements";
        return bad == 0 && states > 10000;
    });

    criterion(5, "two-level slice: transpose test = biseparability, grid + random", 60.0, [](std::string& detail) {
        int bad = 0;
        for (int i = 0; i < 100; ++i)
            for (int j = 0; j < 100; ++j) {
                const RPoint r{i / 99.0, 0.0, -1.0 + 2.0 * j / 99.0, 0.0, 0.0};
                if (!validate_rpoint(r)) continue;
                if (is_ppt1(r) != is_biseparable(r, Partition(1))) ++bad;
            }
        for (int i = 0; i < 1000; ++i) {
            CounterRng rng(13, static_cast<uint64_t>(i));
            RPoint r;
            for (;;) {
                r = RPoint{rng.uniform(), 0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                           rng.uniform(-1.0, 1.0)};
                if (validate_rpoint(r) && std::abs(r.r2) > 1e-3 && std::abs(r.r3) > 1e-3) break;
            }
            if (is_ppt1(r) != is_biseparable(r, Partition(1))) ++bad;
        }
        if (bad) detail = std::to_string(bad) + " disagreements";
        return bad == 0;
    });

    criterion(6, "strict-inclusion witnesses", 5.0, [](std::string& detail) {
        bool ok = true;
        const RPoint g = special_point("G");
        for (int p = 1; p <= 3; ++p) ok &= is_biseparable(g, Partition(p));
        ok &= !is_triseparable(g);
        const RPoint w{0.27, 0.1, 0.0, 0.3, 0.0};
        ok &= validate_rpoint(w);
        ok &= !is_ppt1(w);
        ok &= hermitian_eigenvalues(oracle::partial_transpose_1(reconstruct(w, 3))).front() < -1e-9;
        if (!ok) detail = "witness check failed";
        return ok;
    });

    criterion(7, "basis relation identities at d = 2, 3, 4", 120.0, [](std::string& detail) {
        const auto rep = oracle::run_suite("algebra", 0, 0);
        if (!rep.pass()) detail = std::to_string(rep.failures.size()) + " identity failures";
        return rep.pass();
    });

    criterion(8, "coordinate change matrix matches its exact form", 5.0, [](std::string& detail) {
        const double s38 = std::sqrt(3.0 / 8.0);
        const double exact[6][6] = {{1.0 / 2, 0, 5.0 / 8, 5.0 / 8, 0, 0}, {0, 2, 1.0 / 4, -1.0 / 4, 0, 0},
                                    {1.0 / 2, -1, 1.0 / 8, -3.0 / 8, 0, 0}, {1.0 / 2, 1, -3.0 / 8, 1.0 / 8, 0, 0},
                                    {0, 0, 0, 0, s38, 0},                  {0, 0, 0, 0, 0, s38}};
        const auto& m = iota(3);
        double worst = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) worst = std::max(worst, std::abs(m[i][j] - exact[i][j]));
        detail = "max entry error " + oracle::detail::fmt(worst);
        return worst <= 1e-12;
    });

    criterion(9, "algebra distances match matrix computations", 120.0, [](std::string& detail) {
        double worst_trace = 0.0, worst_ent = 0.0, worst_dim = 0.0;
        for (int i = 0; i < 100; ++i) {
            CounterRng rng(17, static_cast<uint64_t>(i));
            {
                const RPoint r = oracle::random_rpoint(rng, 3);
                const RPoint s = oracle::random_rpoint(rng, 3);
                const double alg = trace_distance(r, s);
                worst_trace = std::max(worst_trace,
                                       std::abs(alg - oracle::matrix_trace_norm(reconstruct(r, 3) - reconstruct(s, 3))));
                RPoint r2 = r, s2 = s;
                r2.r_minus = 0.0;
                s2.r_minus = 0.0;
                worst_trace = std::max(
                    worst_trace,
                    std::abs(trace_distance(r2, s2) - oracle::matrix_trace_norm(reconstruct(r2, 2) - reconstruct(s2, 2))));
            }
            {
                RPoint r = oracle::detail::random_full_support_rpoint(rng);
                RPoint s = oracle::detail::random_full_support_rpoint(rng);
                const double alg = relative_entropy(r, s);
                worst_ent = std::max(worst_ent,
                                     std::abs(alg - oracle::matrix_relative_entropy(reconstruct(r, 3), reconstruct(s, 3))));
                r.r_minus = 0.0;
                s.r_minus = 0.0;
                const double m2 = oracle::matrix_relative_entropy(reconstruct(r, 2), reconstruct(s, 2));
                const double m3 = oracle::matrix_relative_entropy(reconstruct(r, 3), reconstruct(s, 3));
                worst_dim = std::max(worst_dim, std::abs(m2 - m3));
                worst_ent = std::max(worst_ent, std::abs(relative_entropy(r, s) - m2));
            }
        }
        detail = "trace " + oracle::detail::fmt(worst_trace) + ", entropy " + oracle::detail::fmt(worst_ent) +
                 ", dim " + oracle::detail::fmt(worst_dim);
        return worst_trace <= 1e-10 && worst_ent <= 1e-8 && worst_dim <= 1e-8;
    });

    criterion(10, "monotone properties and contour emission", 600.0, [](std::string& detail) {
        bool ok = true;
        // zero on the triseparable set
        for (int i = 0; i < 1000; ++i) {
            CounterRng rng(19, static_cast<uint64_t>(i));
            const RPoint r = oracle::random_tsp_rpoint(rng, 3);
            if (monotone(r, DistanceKind::Trace).value > 1e-6 || monotone(r, DistanceKind::Relent).value > 1e-6) {
                ok = false;
                detail += "nonzero on sample " + std::to_string(i) + "; ";
                break;
            }
        }
        // clearly positive at the far points, multistart agreement
        for (const char* name : {"E", "F", "Q3"}) {
            for (auto kind : {DistanceKind::Trace, DistanceKind::Relent}) {
                const auto res = monotone(special_point(name), kind);
                if (res.value < 1e-3) {
                    ok = false;
                    detail += std::string(name) + " too small; ";
                }
                double lo = res.start_values[0], hi = res.start_values[0];
                for (double v : res.start_values) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (hi - lo > 1e-5) {
                    ok = false;
                    detail += std::string(name) + " start spread " + oracle::detail::fmt(hi - lo) + "; ";
                }
            }
        }
        // segment monotonicity on random pairs
        {
            MonotoneOptions opts;
            opts.starts = 6;
            opts.fine_polish = false;
            int bad = 0;
            for (int i = 0; i < 100; ++i) {
                CounterRng rng(23, static_cast<uint64_t>(i));
                const RPoint r = oracle::random_rpoint(rng, 3);
                const RPoint sigma = oracle::random_tsp_rpoint(rng, 3);
                const auto kind = (i % 2 == 0) ? DistanceKind::Trace : DistanceKind::Relent;
                if (!segment_monotonicity_check(r, sigma, kind, 8, opts)) ++bad;
            }
            if (bad) {
                ok = false;
                detail += std::to_string(bad) + " segment failures; ";
            }
        }
        // zero set over the permutation-invariant triangle at step 0.01
        {
            MonotoneOptions opts;
            opts.starts = 4;
            opts.fine_polish = false;
            const double step = 0.01;
            const std::array<std::array<double, 2>, 3> tri = {{{1.0 / 6, 1.0 / 6}, {1.0, 0.0}, {0.25, 0.0}}};
            int zero_off = 0, inside_nonzero = 0;
            std::vector<std::pair<double, double>> nodes;
            for (int i = 0; i * step <= 1.0 + 1e-12; ++i)
                for (int j = 0; i * step + j * step <= 1.0 + 1e-12; ++j)
                    nodes.emplace_back(std::min(i * step, 1.0), std::min(j * step, 1.0));
            std::vector<double> vals(nodes.size());
            parallel_for(static_cast<int>(nodes.size()), [&](int idx) {
                MonotoneOptions local = opts;
                local.seed = 19 + 1000003ull * static_cast<uint64_t>(idx);
                vals[idx] = monotone(RPoint{nodes[idx].first, nodes[idx].second, 0, 0, 0}, DistanceKind::Trace, local)
                                .value;
            });
            for (size_t idx = 0; idx < nodes.size(); ++idx) {
                const double dist = triangle_distance(nodes[idx].first, nodes[idx].second, tri);
                if (vals[idx] <= 1e-6 && dist > step * 1.0001) ++zero_off;
                if (dist == 0.0 && vals[idx] > 1e-6) ++inside_nonzero;
            }
            if (zero_off || inside_nonzero) {
                ok = false;
                detail += "zero set off by " + std::to_string(zero_off) + "+" + std::to_string(inside_nonzero) + "; ";
            }
        }
        // contour CSV for both monotones at step 0.02
        {
            MonotoneOptions opts;
            opts.starts = 8;
            opts.fine_polish = false;
            const ContourGrid g = contour_grid(ContourRegion::WpTriangle, 0.02, opts);
            std::ofstream out("contour_wp.csv");
            write_contour_csv(g, out);
            if (g.nodes.size() != 1326) {
                ok = false;
                detail += "unexpected node count; ";
            }
        }
        return ok;
    });

    criterion(11, "transpose-set extreme sampler and affine directions, 10^3 points", 120.0,
              [](std::string& detail) {
        int found = 0, bad = 0;
        uint64_t stream = 0;
        while (found < 1000 && stream < 100000) {
            CounterRng rng(29, stream++);
            const double rp = rng.uniform(0.0, 0.7);
            const double rm = rng.uniform(0.0, 0.5);
            const auto branch = (stream % 2 == 0) ? MStarBranch::Upper : MStarBranch::Lower;
            const auto p = ppt_extreme_mstar(rp, rm, branch);
            if (!p) continue;
            ++found;
            const RPoint& r = *p;
            bool good = std::abs(mstar_residual(r)) <= 1e-8;
            good = good && std::abs(ppt_radius_1(r) - ppt_radius_2(r)) <= 1e-8;
            good = good && std::abs(r.r2 * r.r2 + r.r3 * r.r3 - ppt_radius_1(r)) <= 1e-8;
            good = good && std::abs(r.r2 * r.r2 + r.r3 * r.r3 - ppt_radius_2(r)) <= 1e-8;
            const auto dirs = affine_directions(r);
            for (int which = 0; which < 2 && good; ++which) {
                const auto& a = which == 0 ? dirs.a1 : dirs.a2;
                const std::array<double, 3> e{1.0, 0.3, -0.2};
                std::array<double, 3> t{a[1] * e[2] - a[2] * e[1], a[2] * e[0] - a[0] * e[2],
                                        a[0] * e[1] - a[1] * e[0]};
                const double len = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
                if (len < 1e-8) continue;
                for (auto& c : t) c /= len;
                auto radius = [&](double h) {
                    const RPoint q{r.r_plus + h * t[0], r.r_minus + h * t[1], r.r1 + h * t[2], 0.0, 0.0};
                    return which == 0 ? ppt_radius_1(q) : ppt_radius_2(q);
                };
                const double h = 1e-4;
                const double f0 = radius(0.0), fp = radius(h), fm = radius(-h);
                if (f0 < 1e-8 || fp < 1e-8 || fm < 1e-8) continue;  // rim of the patch
                const double second = std::sqrt(fp) - 2.0 * std::sqrt(f0) + std::sqrt(fm);
                good = good && std::abs(second) <= 1e-6;
            }
            if (!good) ++bad;
        }
        detail = std::to_string(found) + " points";
        if (bad) detail += ", " + std::to_string(bad) + " bad";
        return found == 1000 && bad == 0;
    });

    if (g_failures == 0) {
        std::printf("all 11 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
