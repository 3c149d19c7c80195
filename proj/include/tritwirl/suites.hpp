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

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tritwirl/matrix.hpp"
#include "tritwirl/monotones.hpp"
#include "tritwirl/oracle.hpp"
#include "tritwirl/parallel.hpp"
#include "tritwirl/perm_algebra.hpp"
#include "tritwirl/sampling.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/tilde_dual.hpp"
#include "tritwirl/werner.hpp"

namespace tritwirl::oracle {

/// Kronecker product of vectors.
inline std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

/// Trace norm via the eigensolver; inputs Hermitian.
inline double matrix_trace_norm(const CMat& h) {
    double s = 0.0;
    for (double ev : hermitian_eigenvalues(h)) s += std::abs(ev);
    return s;
}

/// tr rho (ln rho - ln sigma) via full eigendecompositions, with support
/// bookkeeping: a rho-eigenvector of weight > tol lying in sigma's kernel
/// gives +infinity.
inline double matrix_relative_entropy(const CMat& rho, const CMat& sigma, double support_tol = 1e-9) {
    const auto er = hermitian_eigensystem(rho);
    const auto es = hermitian_eigensystem(sigma);
    const int n = rho.size();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lam = er.values[i];
        if (lam <= support_tol) continue;
        total += lam * std::log(lam);
        for (int j = 0; j < n; ++j) {
            cplx ov = 0.0;
            for (int k = 0; k < n; ++k) ov += std::conj(er.vectors(k, i)) * es.vectors(k, j);
            const double w = lam * std::norm(ov);
            const double mu = es.values[j];
            if (mu <= support_tol) {
                if (w > support_tol) return std::numeric_limits<double>::infinity();
                continue;
            }
            total -= w * std::log(mu);
        }
    }
    return total;
}

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite;
    int samples = 0;
    std::vector<SuiteFailure> failures;
    double elapsed = 0.0;

    bool pass() const { return failures.empty(); }

    std::string to_json() const {
        auto esc = [](const std::string& s) {
            std::string o;
            for (char c : s) {
                if (c == '"' || c == '\\') o += '\\';
                o += c;
            }
            return o;
        };
        std::ostringstream out;
        out.precision(17);
        out << "{\"suite\":\"" << esc(suite) << "\",\"samples\":" << samples << ",\"elapsed\":" << elapsed
            << ",\"pass\":" << (pass() ? "true" : "false") << ",\"failures\":[";
        for (size_t i = 0; i < failures.size(); ++i) {
            if (i) out << ',';
            out << "{\"input\":\"" << esc(failures[i].input) << "\",\"expected\":\"" << esc(failures[i].expected)
                << "\",\"got\":\"" << esc(failures[i].got) << "\"}";
        }
        out << "]}";
        return out.str();
    }
};

namespace detail {

inline std::string fmt(double x) {
    std::ostringstream o;
    o.precision(17);
    o << x;
    return o.str();
}

inline void expect(std::vector<SuiteFailure>& out, bool ok, const std::string& input, const std::string& expected,
                   const std::string& got) {
    if (!ok) out.push_back(SuiteFailure{input, expected, got});
}

inline void expect_near(std::vector<SuiteFailure>& out, double got, double expected, double tol,
                        const std::string& input) {
    if (!(std::abs(got - expected) <= tol)) out.push_back(SuiteFailure{input, fmt(expected), fmt(got)});
}

/// Shards sample indices across workers; failure lists merge by index, so
/// the report is deterministic regardless of scheduling.
template <typename Fn>
inline void shard(SuiteReport& rep, int samples, uint64_t seed, Fn&& fn) {
    std::vector<std::vector<SuiteFailure>> buf(samples);
    parallel_for(samples, [&](int i) {
        CounterRng rng(seed, static_cast<uint64_t>(i));
        fn(i, rng, buf[i]);
    });
    for (auto& b : buf)
        for (auto& f : b) rep.failures.push_back(std::move(f));
}

/// Interior point with all invariant-summand weights bounded away from 0.
inline RPoint random_full_support_rpoint(CounterRng& rng) {
    RPoint r;
    r.r_plus = rng.uniform(0.05, 0.35);
    r.r_minus = rng.uniform(0.05, 0.35);
    const double mag = rng.uniform(0.0, 0.85) * r.r0();
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    r.r1 = mag * s * std::cos(phi);
    r.r2 = mag * s * std::sin(phi);
    r.r3 = mag * z;
    return r;
}

inline void check_projector_family(std::vector<SuiteFailure>& out, const std::array<CMat, 6>& m, int n,
                                   const std::string& tag) {
    const CMat one = CMat::identity(n);
    auto near_zero = [&](const CMat& a, const std::string& what) {
        expect_near(out, a.max_abs(), 0.0, 1e-12, tag + ": " + what);
    };
    near_zero(m[0] * m[0] - m[0], "P+ idempotent");
    near_zero(m[1] * m[1] - m[1], "P- idempotent");
    near_zero(m[0] * m[1], "P+ P- orthogonal");
    near_zero(m[0] + m[1] + m[2] - one, "P+ + P- + P0 = 1");
    for (int i = 3; i < 6; ++i) {
        near_zero(m[2] * m[i] - m[i], "P0 absorbs generators");
        near_zero(m[0] * m[i], "P+ annihilates generators");
        near_zero(m[1] * m[i], "P- annihilates generators");
        for (int j = 3; j < 6; ++j) {
            CMat anti = m[i] * m[j] + m[j] * m[i];
            if (i == j) anti -= 2.0 * m[2];
            near_zero(anti, "Pauli anticommutator");
        }
    }
}

}  // namespace detail

inline SuiteReport suite_algebra(int /*samples*/, uint64_t /*seed*/) {
    SuiteReport rep;
    rep.suite = "algebra";
    auto& out = rep.failures;
    // group-algebra level identities, dimension independent
    {
        auto ga_zero = [&](const GAElem& a, const std::string& what) {
            double m = 0.0;
            for (const auto& x : a.mu) m = std::max(m, std::abs(x));
            detail::expect_near(out, m, 0.0, 1e-12, what);
        };
        const auto R = [](int k) { return r_basis_elem(static_cast<RIndex>(k)); };
        auto minus = [](GAElem a, const GAElem& b) {
            for (int k = 0; k < kNumPerms; ++k) a.mu[k] -= b.mu[k];
            return a;
        };
        ga_zero(minus(ga_multiply(R(0), R(0)), R(0)), "R+ idempotent");
        ga_zero(minus(ga_multiply(R(1), R(1)), R(1)), "R- idempotent");
        ga_zero(ga_multiply(R(0), R(1)), "R+ R- orthogonal");
        ga_zero(minus(ga_multiply(R(2), R(2)), R(2)), "R0 idempotent");
        for (int i = 3; i < 6; ++i) {
            ga_zero(minus(ga_multiply(R(2), R(i)), R(i)), "R0 absorbs");
            ga_zero(minus(ga_multiply(R(i), R(2)), R(i)), "R0 absorbs right");
            ga_zero(ga_multiply(R(0), R(i)), "R+ annihilates");
            ga_zero(ga_multiply(R(1), R(i)), "R- annihilates");
            for (int j = 3; j < 6; ++j) {
                GAElem anti = ga_multiply(R(i), R(j));
                const GAElem ji = ga_multiply(R(j), R(i));
                for (int k = 0; k < kNumPerms; ++k) anti.mu[k] += ji.mu[k];
                if (i == j)
                    for (int k = 0; k < kNumPerms; ++k) anti.mu[k] -= 2.0 * R(2).mu[k];
                ga_zero(anti, "R Pauli anticommutator");
            }
        }
    }
    for (int d = 2; d <= 4; ++d) {
        const std::string tag = "d=" + std::to_string(d);
        rep.samples += 1;
        for (int k = 0; k < kNumPerms; ++k) {
            const Perm p = static_cast<Perm>(k);
            const double tr = oracle::permutation_matrix(p, d).trace().real();
            detail::expect_near(out, tr, std::pow(d, cycle_count(p)), 1e-12, tag + " trace V_" + perm_name(p));
        }
        for (int a = 0; a < kNumPerms; ++a)
            for (int b = 0; b < kNumPerms; ++b) {
                const Perm pa = static_cast<Perm>(a), pb = static_cast<Perm>(b);
                const CMat lhs = oracle::permutation_matrix(pa, d) * oracle::permutation_matrix(pb, d);
                const CMat rhs = oracle::permutation_matrix(compose(pa, pb), d);
                detail::expect_near(out, lhs.max_abs_diff(rhs), 0.0, 1e-12, tag + " V_p V_q composition");
            }
        // matrix images of the R_k form the same projector/Pauli family
        std::array<CMat, 6> rm;
        for (int k = 0; k < 6; ++k) rm[k] = oracle::r_matrix(static_cast<RIndex>(k), d);
        if (d > 2) {  // the d=2 image is not faithful (antisymmetric summand absent)
            detail::check_projector_family(out, rm, d * d * d, tag + " R matrices");
        }
        // generators of the partial-transpose algebra
        const auto [x, v] = xv_generators(d);
        const CMat one = CMat::identity(d * d * d);
        detail::expect_near(out, (x * x - cplx(d) * x).max_abs(), 0.0, 1e-12, tag + " X^2 = dX");
        detail::expect_near(out, (v * v - one).max_abs(), 0.0, 1e-12, tag + " V^2 = 1");
        detail::expect_near(out, (x * v * x - x).max_abs(), 0.0, 1e-12, tag + " XVX = X");
        const CMat pt13 = oracle::partial_transpose_1(oracle::permutation_matrix(Perm::T13, d));
        const CMat pt123 = oracle::partial_transpose_1(oracle::permutation_matrix(Perm::C123, d));
        const CMat pt132 = oracle::partial_transpose_1(oracle::permutation_matrix(Perm::C132, d));
        detail::expect_near(out, (pt13 - v * x * v).max_abs(), 0.0, 1e-12, tag + " V13^T1 = VXV");
        detail::expect_near(out, (pt123 - x * v).max_abs(), 0.0, 1e-12, tag + " V123^T1 = XV");
        detail::expect_near(out, (pt132 - v * x).max_abs(), 0.0, 1e-12, tag + " V321^T1 = VX");
        detail::check_projector_family(out, s_matrices(d), d * d * d, tag + " S matrices");
    }
    return rep;
}

inline SuiteReport suite_tsp(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "tsp";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const auto p1 = random_unit_vector(rng, 3);
        const auto p2 = random_unit_vector(rng, 3);
        const auto p3 = random_unit_vector(rng, 3);
        const APoint a = apoint_from_vectors(p1, p2, p3);
        const std::string tag = "sample " + std::to_string(i);
        detail::expect(out, validate_apoint(a, 3), tag, "valid overlap parameters", "invalid");
        const RPoint r = rpoint_from_apoint(a);
        detail::expect(out, validate_rpoint(r), tag + " " + format_rpoint(r), "state", "not a state");
        detail::expect(out, is_triseparable(r), tag + " " + format_rpoint(r), "triseparable", "rejected");
        if (i % 4 == 0) {  // convexity: mixtures stay inside
            const RPoint q = random_tsp_rpoint(rng);
            const double t = rng.uniform();
            const RPoint mix{r.r_plus + t * (q.r_plus - r.r_plus), r.r_minus + t * (q.r_minus - r.r_minus),
                             r.r1 + t * (q.r1 - r.r1), r.r2 + t * (q.r2 - r.r2), r.r3 + t * (q.r3 - r.r3)};
            detail::expect(out, is_triseparable(mix), tag + " mixture " + format_rpoint(mix), "triseparable",
                           "rejected");
        }
        if (i % 4 == 1) {  // matrix-level pipeline agreement
            const auto full = kron(kron(p1, p2), p3);
            const RPoint t = twirl(pure_state(full));
            detail::expect_near(out, max_abs_diff(t, r), 0.0, 1e-10, tag + " twirl vs overlap pipeline");
        }
    });
    detail::expect(rep.failures, is_triseparable(special_point("A")), "point A", "triseparable", "rejected");
    detail::expect(rep.failures, !is_triseparable(special_point("G")), "point G", "not triseparable", "accepted");
    return rep;
}

inline SuiteReport suite_bsp(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "bsp";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const auto psi1 = random_unit_vector(rng, 3);
        const auto phi23 = random_unit_vector(rng, 9);
        const CParams c = cparams_from_vector(psi1, phi23);
        const std::string tag = "sample " + std::to_string(i);
        detail::expect(out, validate_cparams(c, 3), tag, "valid pair parameters", "invalid");
        const RPoint r = rpoint_from_cparams(c);
        detail::expect(out, validate_rpoint(r), tag + " " + format_rpoint(r), "state", "not a state");
        detail::expect(out, is_biseparable(r, Partition(1)), tag + " " + format_rpoint(r), "biseparable 1|23",
                       "rejected");
        if (i % 8 == 0) {  // pivot rotation vs matrix permutation
            const auto full = kron(psi1, phi23);
            const CMat rho = pure_state(full);
            detail::expect_near(out, max_abs_diff(twirl(rho), r), 0.0, 1e-10, tag + " twirl vs pair pipeline");
            for (int pivot = 2; pivot <= 3; ++pivot) {
                const Perm swap = pivot == 2 ? Perm::T12 : Perm::T13;
                const CMat v = oracle::permutation_matrix(swap, 3);
                const RPoint moved = twirl(v * rho * v);
                detail::expect(out, is_biseparable(moved, Partition(pivot)),
                               tag + " pivot " + std::to_string(pivot) + " " + format_rpoint(moved),
                               "biseparable", "rejected");
            }
        }
        if (i % 8 == 4) {  // extreme-sphere points are members
            const BspExtreme e = bsp_extreme(rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI));
            detail::expect(out, is_biseparable(e.point, Partition(1), 1e-8),
                           tag + " sphere " + format_rpoint(e.point), "biseparable", "rejected");
        }
    });
    return rep;
}

inline SuiteReport suite_ppt(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "ppt";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const RPoint r = random_rpoint(rng, 3);
        const CMat rho = reconstruct(r, 3);
        const CMat pt = oracle::partial_transpose_1(rho);
        const auto ev = hermitian_eigenvalues(pt);
        const bool oracle_ppt = ev.front() >= -1e-9;
        const bool claimed = is_ppt1(r);
        detail::expect(out, oracle_ppt == claimed, "sample " + std::to_string(i) + " " + format_rpoint(r),
                       oracle_ppt ? "ppt" : "not ppt", claimed ? "ppt" : "not ppt");
        if (i % 10 == 0) {  // second partition via swap conjugation
            const CMat v = oracle::permutation_matrix(Perm::T12, 3);
            const auto ev2 = hermitian_eigenvalues(v * oracle::partial_transpose_1(v * rho * v) * v);
            const bool oracle2 = ev2.front() >= -1e-9;
            const bool claimed2 = is_ppt(r, Partition(2));
            detail::expect(out, oracle2 == claimed2, "sample " + std::to_string(i) + " pivot 2 " + format_rpoint(r),
                           oracle2 ? "ppt" : "not ppt", claimed2 ? "ppt" : "not ppt");
        }
    });
    return rep;
}

inline SuiteReport suite_iota(int /*samples*/, uint64_t /*seed*/) {
    SuiteReport rep;
    rep.suite = "iota";
    auto& out = rep.failures;
    // exact form of the coordinate change at d = 3
    const double s38 = std::sqrt(3.0 / 8.0);
    const double exact[6][6] = {{1.0 / 2, 0, 5.0 / 8, 5.0 / 8, 0, 0}, {0, 2, 1.0 / 4, -1.0 / 4, 0, 0},
                                {1.0 / 2, -1, 1.0 / 8, -3.0 / 8, 0, 0}, {1.0 / 2, 1, -3.0 / 8, 1.0 / 8, 0, 0},
                                {0, 0, 0, 0, s38, 0},                  {0, 0, 0, 0, 0, s38}};
    const auto& m = iota(3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            detail::expect_near(out, m[i][j], exact[i][j], 1e-12,
                                "iota(3)[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    // catalog images, three independent routes
    for (const char* name : {"A", "B", "C", "D", "E", "F", "G"}) {
        rep.samples += 1;
        const RPoint r = special_point(name);
        const SPoint want = tilde_special_point(name, 3);
        const SPoint via_map = iota_apply(r, 3);
        auto diff = [](const SPoint& a, const SPoint& b) {
            return std::max({std::abs(a.s_plus - b.s_plus), std::abs(a.s_minus - b.s_minus), std::abs(a.s1 - b.s1),
                             std::abs(a.s2 - b.s2), std::abs(a.s3 - b.s3)});
        };
        detail::expect_near(out, diff(via_map, want), 0.0, 1e-12, std::string("iota image of ") + name);
        const SPoint via_matrix = tilde_twirl(oracle::partial_transpose_1(reconstruct(r, 3)));
        detail::expect_near(out, diff(via_matrix, want), 0.0, 1e-10, std::string("matrix image of ") + name);
        const RPoint back = iota_invert(want, 3);
        detail::expect_near(out, max_abs_diff(back, r), 0.0, 1e-10, std::string("inverse image of ") + name);
    }
    // invertibility on random points at d = 3, 4
    CounterRng rng(99, 0);
    for (int d = 3; d <= 4; ++d)
        for (int k = 0; k < 20; ++k) {
            const RPoint r = random_rpoint(rng, d);
            const RPoint back = iota_invert(iota_apply(r, d), d);
            detail::expect_near(out, max_abs_diff(back, r), 0.0, 1e-10,
                                "roundtrip d=" + std::to_string(d) + " " + format_rpoint(r));
        }
    // the two dual-average routes agree on a random Hermitian operator
    {
        const int n = 27;
        CMat a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = 0.1 * rng.complex_normal();
        a.symmetrize();
        const CMat p1 = tilde_average_via_pt(a);
        const CMat p2 = tilde_average_via_span(a);
        detail::expect_near(out, p1.max_abs_diff(p2), 0.0, 1e-10, "dual average routes");
    }
    return rep;
}

inline SuiteReport suite_entropy(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "entropy";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const std::string tag = "sample " + std::to_string(i);
        RPoint r = detail::random_full_support_rpoint(rng);
        RPoint s = detail::random_full_support_rpoint(rng);
        const double alg = relative_entropy(r, s);
        const double mat3 = matrix_relative_entropy(reconstruct(r, 3), reconstruct(s, 3));
        detail::expect_near(out, alg, mat3, 1e-8, tag + " algebra vs matrix d=3");
        // same pair squashed onto r- = 0: computable at both d = 2 and d = 3
        r.r_minus = 0.0;
        s.r_minus = 0.0;
        const double alg0 = relative_entropy(r, s);
        const double m2 = matrix_relative_entropy(reconstruct(r, 2), reconstruct(s, 2));
        const double m3 = matrix_relative_entropy(reconstruct(r, 3), reconstruct(s, 3));
        detail::expect_near(out, m2, m3, 1e-8, tag + " d=2 vs d=3");
        detail::expect_near(out, alg0, m2, 1e-8, tag + " algebra vs matrix d=2");
    });
    // catalog values
    detail::expect_near(rep.failures, relative_entropy(special_point("B"), special_point("A")), std::log(6.0), 1e-12,
                        "B vs A");
    detail::expect(rep.failures, std::isinf(relative_entropy(special_point("A"), special_point("B"))), "A vs B",
                   "infinite", "finite");
    return rep;
}

inline SuiteReport suite_tracenorm(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "tracenorm";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const std::string tag = "sample " + std::to_string(i);
        RPoint r = random_rpoint(rng, 3);
        RPoint s = random_rpoint(rng, 3);
        const double alg = trace_distance(r, s);
        const double mat = matrix_trace_norm(reconstruct(r, 3) - reconstruct(s, 3));
        detail::expect_near(out, alg, mat, 1e-10, tag + " d=3");
        if (i % 2 == 0) {
            r.r_minus = 0.0;
            s.r_minus = 0.0;
            const double alg0 = trace_distance(r, s);
            const double mat2 = matrix_trace_norm(reconstruct(r, 2) - reconstruct(s, 2));
            detail::expect_near(out, alg0, mat2, 1e-10, tag + " d=2");
        }
    });
    detail::expect_near(rep.failures, trace_distance(special_point("B"), special_point("A")), 5.0 / 3.0, 1e-12,
                        "B vs A");
    detail::expect_near(rep.failures, trace_distance(special_point("B"), special_point("D")), 4.0 / 3.0, 1e-12,
                        "B vs D");
    return rep;
}

inline SuiteReport suite_tetra(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "tetra";
    rep.samples = samples;
    // vertex / facet incidence
    for (auto kind : {TetraKind::State, TetraKind::Ppt}) {
        const Tetrahedron t = v23_tetrahedron(kind, 3);
        const std::string tag = kind == TetraKind::State ? "state tetra" : "ppt tetra";
        for (const auto& vtx : t.vertices) {
            int on = 0;
            for (const auto& h : t.planes) {
                const double e = h.eval(vtx[0], vtx[1], vtx[2]);
                detail::expect(rep.failures, e >= -1e-12, tag + " vertex inside", ">= 0", detail::fmt(e));
                if (std::abs(e) <= 1e-12) ++on;
            }
            detail::expect(rep.failures, on >= 3, tag + " vertex on 3 facets", ">= 3", std::to_string(on));
        }
    }
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const std::string tag = "sample " + std::to_string(i);
        // swap-invariant slice: positivity of the partial transpose is
        // exactly biseparability there
        for (;;) {
            const RPoint r{rng.uniform(), rng.uniform(), rng.uniform(-1.0, 1.0), 0.0, 0.0};
            if (!validate_rpoint(r)) continue;
            const bool p = is_ppt1(r);
            const bool b = is_biseparable(r, Partition(1));
            detail::expect(out, p == b, tag + " " + format_rpoint(r), p ? "ppt==bisep (ppt)" : "ppt==bisep (npt)",
                           "mismatch");
            break;
        }
        // representative extreme points of the positive-partial-transpose set
        const double rp = rng.uniform(0.0, 0.7);
        const double rm = rng.uniform(0.0, 0.5);
        for (auto branch : {MStarBranch::Upper, MStarBranch::Lower}) {
            const auto pt = ppt_extreme_mstar(rp, rm, branch);
            if (!pt) continue;
            const RPoint& r = *pt;
            detail::expect_near(out, mstar_residual(r), 0.0, 1e-8, tag + " hyperboloid residual");
            detail::expect_near(out, ppt_radius_1(r) - ppt_radius_2(r), 0.0, 1e-8, tag + " R1 = R2");
            detail::expect_near(out, r.r2 * r.r2 + r.r3 * r.r3 - ppt_radius_1(r), 0.0, 1e-8,
                                tag + " radius saturation");
            detail::expect(out, is_ppt1(r, 1e-7), tag + " " + format_rpoint(r), "ppt", "rejected");
            // second differences of the radius functions vanish along the
            // affine directions
            const auto dirs = affine_directions(r);
            for (int which = 0; which < 2; ++which) {
                const auto& a = which == 0 ? dirs.a1 : dirs.a2;
                // pick a tangent direction orthogonal to the normal
                std::array<double, 3> e{1.0, 0.3, -0.2};
                std::array<double, 3> t{a[1] * e[2] - a[2] * e[1], a[2] * e[0] - a[0] * e[2],
                                        a[0] * e[1] - a[1] * e[0]};
                double len = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
                if (len < 1e-8) continue;
                for (auto& c : t) c /= len;
                auto radius = [&](double h) {
                    const RPoint q{r.r_plus + h * t[0], r.r_minus + h * t[1], r.r1 + h * t[2], 0.0, 0.0};
                    return which == 0 ? ppt_radius_1(q) : ppt_radius_2(q);
                };
                const double h = 1e-4;
                const double f0 = radius(0.0), fp = radius(h), fm = radius(-h);
                if (f0 < 1e-8 || fp < 1e-8 || fm < 1e-8) continue;  // too close to the rim
                const double second = std::sqrt(fp) - 2.0 * std::sqrt(f0) + std::sqrt(fm);
                detail::expect_near(out, second, 0.0, 1e-6, tag + " affine direction " + std::to_string(which + 1));
            }
        }
    });
    return rep;
}

inline SuiteReport suite_qubit(int samples, uint64_t seed) {
    SuiteReport rep;
    rep.suite = "qubit";
    rep.samples = samples;
    detail::shard(rep, samples, seed, [&](int i, CounterRng& rng, std::vector<SuiteFailure>& out) {
        const std::string tag = "sample " + std::to_string(i);
        const auto p1 = random_unit_vector(rng, 2);
        const auto p2 = random_unit_vector(rng, 2);
        const auto p3 = random_unit_vector(rng, 2);
        const APoint a = apoint_from_vectors(p1, p2, p3);
        detail::expect(out, validate_apoint(a, 2), tag, "two-level overlap constraint", "violated");
        const RPoint r = rpoint_from_apoint(a);
        detail::expect(out, validate_rpoint(r, 2), tag + " " + format_rpoint(r), "two-level state", "invalid");
        detail::expect_near(out, r.r_minus, 0.0, 1e-12, tag + " vanishing antisymmetric weight");
        detail::expect(out, is_triseparable(r), tag + " " + format_rpoint(r), "triseparable", "rejected");
        if (i % 4 == 0) {
            const auto full = kron(kron(p1, p2), p3);
            const RPoint t = twirl(pure_state(full));
            detail::expect_near(out, max_abs_diff(t, r), 0.0, 1e-10, tag + " matrix twirl agreement");
            const RPoint back = twirl(reconstruct(t, 2));
            detail::expect_near(out, max_abs_diff(back, t), 0.0, 1e-10, tag + " reconstruct roundtrip d=2");
        }
        // on the r- = 0 slice positivity of the partial transpose equals
        // biseparability even off the r2 = r3 = 0 plane
        const RPoint q = [&] {
            for (;;) {
                RPoint c{rng.uniform(), 0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
                if (validate_rpoint(c)) return c;
            }
        }();
        const bool p = is_ppt1(q);
        const bool b = is_biseparable(q, Partition(1));
        detail::expect(out, p == b, tag + " slice " + format_rpoint(q), p ? "ppt==bisep (ppt)" : "ppt==bisep (npt)",
                       "mismatch");
    });
    return rep;
}

inline SuiteReport run_suite(const std::string& name, int samples, uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (name == "algebra")
        rep = suite_algebra(samples, seed);
    else if (name == "tsp")
        rep = suite_tsp(samples, seed);
    else if (name == "bsp")
        rep = suite_bsp(samples, seed);
    else if (name == "ppt")
        rep = suite_ppt(samples, seed);
    else if (name == "iota")
        rep = suite_iota(samples, seed);
    else if (name == "entropy")
        rep = suite_entropy(samples, seed);
    else if (name == "tracenorm")
        rep = suite_tracenorm(samples, seed);
    else if (name == "tetra")
        rep = suite_tetra(samples, seed);
    else if (name == "qubit")
        rep = suite_qubit(samples, seed);
    else
        throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "tsp",       "bsp",   "ppt",  "iota",
                                                   "entropy", "tracenorm", "tetra", "qubit"};
    return names;
}

}  // namespace tritwirl::oracle
