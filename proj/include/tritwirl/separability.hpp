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

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tritwirl/points.hpp"
#include "tritwirl/werner.hpp"

namespace tritwirl {

/// Overlap parameters of a product vector psi1 x psi2 x psi3.
struct APoint {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0, a5 = 0.0;
};

/// Parameters of a biseparable pure vector |1> x Phi after rotating the
/// first factor onto the basis vector |1>.
struct CParams {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
};

/// The singled-out subsystem of a split pivot|rest.
struct Partition {
    int pivot = 1;
    Partition() = default;
    explicit Partition(int p) : pivot(p) {
        if (p < 1 || p > 3) throw std::invalid_argument("Partition: pivot must be 1, 2 or 3");
    }
};

namespace detail {
inline void check_unit(const std::vector<cplx>& v, double tol = 1e-10) {
    double n2 = 0.0;
    for (const auto& x : v) n2 += std::norm(x);
    if (std::abs(n2 - 1.0) > tol) throw std::invalid_argument("vector is not normalized");
}

inline cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}
}  // namespace detail

inline APoint apoint_from_vectors(const std::vector<cplx>& psi1, const std::vector<cplx>& psi2,
                                  const std::vector<cplx>& psi3) {
    detail::check_unit(psi1);
    detail::check_unit(psi2);
    detail::check_unit(psi3);
    const cplx s12 = detail::inner(psi1, psi2);
    const cplx s23 = detail::inner(psi2, psi3);
    const cplx s31 = detail::inner(psi3, psi1);
    APoint a;
    a.a1 = std::norm(s23);
    a.a2 = std::norm(s31);
    a.a3 = std::norm(s12);
    const cplx loop = s12 * s23 * s31;
    a.a4 = loop.real();
    a.a5 = loop.imag();
    return a;
}

/// Membership in the exact range of the product-vector parameters:
/// 0 <= a_i <= 1, a4^2 + a5^2 = a1 a2 a3, and 1 - a1 - a2 - a3 + 2 a4 >= 0
/// (an equality when d = 2).
inline bool validate_apoint(const APoint& a, int d, double tol = 1e-9) {
    for (double ai : {a.a1, a.a2, a.a3})
        if (ai < -tol || ai > 1.0 + tol) return false;
    if (std::abs(a.a4 * a.a4 + a.a5 * a.a5 - a.a1 * a.a2 * a.a3) > tol) return false;
    const double gram = 1.0 - a.a1 - a.a2 - a.a3 + 2.0 * a.a4;
    if (gram < -tol) return false;
    if (d == 2 && std::abs(gram) > tol) return false;
    return true;
}

inline RPoint rpoint_from_apoint(const APoint& a) {
    const double sum = a.a1 + a.a2 + a.a3;
    RPoint r;
    r.r_plus = (1.0 + sum + 2.0 * a.a4) / 6.0;
    r.r_minus = (1.0 - sum + 2.0 * a.a4) / 6.0;
    r.r1 = (2.0 * a.a1 - a.a2 - a.a3) / 3.0;
    r.r2 = (a.a3 - a.a2) / std::sqrt(3.0);
    r.r3 = 2.0 * a.a5 / std::sqrt(3.0);
    return r;
}

namespace detail {
inline void require_state(const RPoint& r, double tol) {
    if (!validate_rpoint(r, std::nullopt, tol)) throw std::invalid_argument("point is not a state");
}
}  // namespace detail

/// Closed-form membership in the triseparable set. All inequalities are
/// taken closed (the set is a convex hull, hence closed); the r- = 1/6
/// boundary slice degenerates to the single point A. The set is the cone
/// over the r- = 0 body from A, so besides the published cubic bound the
/// central projection of the point onto r- = 0 must itself be a state:
/// |r_vec| <= 1 - 5r- - r+ (tight for every mixture, and without it the
/// cleared-denominator form of the cubic admits far-away false positives).
inline bool is_triseparable(const RPoint& r, double tol = 1e-9) {
    detail::require_state(r, tol);
    const RPoint a = special_point("A");
    if (max_abs_diff(r, a) <= tol) return true;
    const double rm = r.r_minus, rp = r.r_plus;
    if (rm < -tol) return false;
    if (rm >= 1.0 / 6.0 - tol) return false;  // only A survives there
    if (rp < (1.0 - 2.0 * rm) / 4.0 - tol) return false;
    if (rp > 1.0 - 5.0 * rm + tol) return false;
    const double norm = std::sqrt(r.r1 * r.r1 + r.r2 * r.r2 + r.r3 * r.r3);
    if (norm > 1.0 - 5.0 * rm - rp + tol) return false;
    // The product inequality below also holds on a thin spurious lobe where
    // both factors of its right side are negative; the accepted set has
    // r1 + r+ - r- >= 0 (a supporting half-space through the vertex where
    // both factors vanish), which excludes that lobe. With the first factor
    // nonnegative, a negative second factor fails the product inequality on
    // its own, so this single linear cut suffices.
    if (r.r1 + rp - rm < -tol) return false;
    const double lhs = (3.0 * r.r3 * r.r3 + std::pow(1.0 - 3.0 * rp - 3.0 * rm, 2)) * (1.0 - 6.0 * rm);
    const double rhs =
        (r.r1 + rp - rm) * (std::pow(r.r1 - 2.0 * (rp - rm), 2) - 3.0 * r.r2 * r.r2);
    return lhs <= rhs + tol;
}

/// The nonnegative root h of the boundary relation on the r- = 0 slice:
/// 3 h^2 = (r1+r+)(r1-sqrt3 r2-2r+)(r1+sqrt3 r2-2r+) - (1-3r+)^2,
/// or nullopt when the right side is negative.
inline std::optional<double> tsp_boundary_r3(double r_plus, double r1, double r2) {
    const double s3 = std::sqrt(3.0);
    const double rhs = (r1 + r_plus) * (r1 - s3 * r2 - 2.0 * r_plus) * (r1 + s3 * r2 - 2.0 * r_plus) -
                       std::pow(1.0 - 3.0 * r_plus, 2);
    if (rhs < 0.0) return std::nullopt;
    return std::sqrt(rhs / 3.0);
}

/// Rotates the coordinates so that membership tests for pivot 2 or 3 reduce
/// to the pivot-1 formulas; pivots 2 and 3 rotate (r1, r2) by +2pi/3 and
/// -2pi/3 respectively (convention fixed against the matrix twirl; the swap
/// conjugations act as reflections, which match these rotations up to the
/// r2, r3 sign symmetry of the pivot-1 membership formulas).
inline RPoint rotate_partition(const RPoint& r, Partition p) {
    if (p.pivot == 1) return r;
    const double c = -0.5;
    const double s = (p.pivot == 2 ? 1.0 : -1.0) * std::sqrt(3.0) / 2.0;
    RPoint out = r;
    out.r1 = c * r.r1 - s * r.r2;
    out.r2 = s * r.r1 + c * r.r2;
    return out;
}

/// Closed-form membership in the biseparable set for the split pivot|rest.
inline bool is_biseparable(const RPoint& r_in, Partition p, double tol = 1e-9) {
    detail::require_state(r_in, tol);
    const RPoint r = rotate_partition(r_in, p);
    for (const char* name : {"F", "B", "D"})
        if (max_abs_diff(r, special_point(name)) <= tol) return true;
    const double rm = r.r_minus, rp = r.r_plus, r1 = r.r1;
    if (rm < -tol) return false;
    const double den = 1.0 - 3.0 * rm;
    if (den <= tol) return false;  // the r- = 1/3 slice degenerates to F
    const double num = 1.0 + r1 - rm - 2.0 * rp;
    if (std::abs(num) > den + tol) return false;  // q outside [-1, 1]
    const double q = num / den;
    const double quad = 3.0 * r.r2 * r.r2 + 3.0 * r.r3 * r.r3;
    bool ok = true;
    if (q <= tol)
        ok = ok && quad + std::pow(1.0 + 2.0 * r1 + rm - rp, 2) <=
                       std::pow(2.0 + r1 - 4.0 * rm - 2.0 * rp, 2) + tol;
    if (q >= -tol)
        ok = ok && quad + std::pow(1.0 - 3.0 * rm - 3.0 * rp, 2) <=
                       std::pow(r1 + 2.0 * rm - 2.0 * rp, 2) + tol;
    return ok;
}

struct BspExtreme {
    RPoint point;
    bool non_extreme = false;  // the exceptional point (2/3,0,1/3,0,0) = (B+D)/2
};

/// Parameterization of the sphere of extreme points of the biseparable set
/// (pivot 1): r- = 0, r+ = (r1+1)/2, (1/4)(3r1+1)^2 + 3r2^2 + 3r3^2 = 1.
inline BspExtreme bsp_extreme(double theta, double phi) {
    BspExtreme e;
    const double s3 = std::sqrt(3.0);
    e.point.r_minus = 0.0;
    e.point.r1 = (2.0 * std::cos(theta) - 1.0) / 3.0;
    e.point.r2 = std::sin(theta) * std::cos(phi) / s3;
    e.point.r3 = std::sin(theta) * std::sin(phi) / s3;
    e.point.r_plus = (e.point.r1 + 1.0) / 2.0;
    e.non_extreme = max_abs_diff(e.point, RPoint{2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0, 0.0}) <= 1e-12;
    return e;
}

inline double ppt_radius_1(const RPoint& r) {
    return (1.0 - r.r1 - 5.0 * r.r_minus - r.r_plus) * (-1.0 - r.r1 + r.r_minus + 5.0 * r.r_plus) / 3.0;
}

inline double ppt_radius_2(const RPoint& r) {
    return (1.0 - r.r1 - r.r_minus - r.r_plus) * (1.0 + r.r1 - r.r_minus - r.r_plus);
}

/// Positivity of the partial transpose on the first factor, in closed form.
inline bool is_ppt1(const RPoint& r, double tol = 1e-9) {
    detail::require_state(r, tol);
    if (r.r_minus < -tol) return false;
    if (r.r1 - r.r_plus - r.r_minus + 1.0 < -tol) return false;
    if (1.0 - r.r1 - 5.0 * r.r_minus - r.r_plus < -tol) return false;
    if (-1.0 - r.r1 + r.r_minus + 5.0 * r.r_plus < -tol) return false;
    const double rad = r.r2 * r.r2 + r.r3 * r.r3;
    if (rad > ppt_radius_1(r) + tol) return false;
    if (rad > ppt_radius_2(r) + tol) return false;
    return true;
}

inline bool is_ppt(const RPoint& r, Partition p, double tol = 1e-9) {
    return is_ppt1(rotate_partition(r, p), tol);
}

/// A hyperplane a . (r+, r-, r1) + b >= 0, oriented toward the interior.
struct Hyperplane {
    double a_plus = 0.0, a_minus = 0.0, a1 = 0.0, b = 0.0;
    double eval(double rp, double rm, double r1) const { return a_plus * rp + a_minus * rm + a1 * r1 + b; }
};

struct Tetrahedron {
    std::array<std::array<double, 3>, 4> vertices;  // (r+, r-, r1)
    std::array<Hyperplane, 4> planes;

    bool contains(double rp, double rm, double r1, double tol = 1e-9) const {
        for (const auto& h : planes)
            if (h.eval(rp, rm, r1) < -tol) return false;
        return true;
    }
    bool strictly_contains(double rp, double rm, double r1, double margin = 1e-9) const {
        for (const auto& h : planes)
            if (h.eval(rp, rm, r1) <= margin) return false;
        return true;
    }
};

enum class TetraKind { State, Ppt };

/// The V(23)-invariant tetrahedra in (r+, r-, r1): the state-space one with
/// vertices P1..P4, and the positive-partial-transpose one with vertices
/// Q1..Q4(d). Their intersection is spanned by E, B, F, D.
inline Tetrahedron v23_tetrahedron(TetraKind kind, int d = 3) {
    Tetrahedron t;
    auto vec3 = [](const std::array<Rat, 5>& p) {
        return std::array<double, 3>{p[0].value(), p[1].value(), p[2].value()};
    };
    if (kind == TetraKind::State) {
        t.vertices = {vec3(special_point_exact("P1")), vec3(special_point_exact("P2")),
                      vec3(special_point_exact("P3")), vec3(special_point_exact("P4"))};
        t.planes = {Hyperplane{1, 0, 0, 0},          // r+ >= 0
                    Hyperplane{0, 1, 0, 0},          // r- >= 0
                    Hyperplane{-1, -1, -1, 1},       // r1 <= 1 - r+ - r-
                    Hyperplane{-1, -1, 1, 1}};       // r1 >= r+ + r- - 1
    } else {
        t.vertices = {vec3(special_point_exact("Q1", d)), vec3(special_point_exact("Q2", d)),
                      vec3(special_point_exact("Q3", d)), vec3(special_point_exact("Q4", d))};
        const double dd = d;
        t.planes = {Hyperplane{-4.0 + dd, -2.0 - dd, 2.0 + dd, 2.0 + dd},   // 2(1+r1-r- -2r+) + d(1+r1-r- +r+)
                    Hyperplane{2.0 - dd, 4.0 + dd, 2.0 - dd, -2.0 + dd},    // 2(-1+r1+2r- +r+) + d(1-r1+r- -r+)
                    Hyperplane{-1, -5, -1, 1},                              // 1 - r1 - 5r- - r+ >= 0
                    Hyperplane{5, 1, -1, -1}};                              // -1 - r1 + r- + 5r+ >= 0
    }
    return t;
}

enum class MStarBranch { Upper, Lower };

/// A representative extreme point of the positive-partial-transpose set over
/// the base point (r+, r-): solves the R1 = R2 hyperboloid for r1, then puts
/// the full radius into r2. Returns nullopt when no real root lands in the
/// interior of the intersection tetrahedron.
inline std::optional<RPoint> ppt_extreme_mstar(double r_plus, double r_minus,
                                               MStarBranch branch = MStarBranch::Upper, int d = 3) {
    const double rp = r_plus, rm = r_minus;
    // r1^2 + (rm - rp) r1 + (3rm - 2rm^2 + 3rp - 8 rm rp - 2rp^2 - 1) = 0
    const double b = rm - rp;
    const double c = 3.0 * rm - 2.0 * rm * rm + 3.0 * rp - 8.0 * rm * rp - 2.0 * rp * rp - 1.0;
    const double disc = b * b - 4.0 * c;
    if (disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    const double r1 = (branch == MStarBranch::Upper) ? (-b + root) / 2.0 : (-b - root) / 2.0;
    const Tetrahedron state = v23_tetrahedron(TetraKind::State);
    const Tetrahedron ppt = v23_tetrahedron(TetraKind::Ppt, d);
    if (!state.strictly_contains(rp, rm, r1) || !ppt.strictly_contains(rp, rm, r1)) return std::nullopt;
    RPoint r{rp, rm, r1, 0.0, 0.0};
    const double rad = ppt_radius_1(r);
    if (rad < 0.0) return std::nullopt;
    r.r2 = std::sqrt(rad);
    return r;
}

/// Whether (r+, r-, r1) satisfies the R1 = R2 hyperboloid relation.
inline double mstar_residual(const RPoint& r) {
    const double rp = r.r_plus, rm = r.r_minus, r1 = r.r1;
    return r1 * r1 + 3.0 * rm + r1 * rm - 2.0 * rm * rm + 3.0 * rp - r1 * rp - 8.0 * rm * rp -
           2.0 * rp * rp - 1.0;
}

struct AffineDirections {
    std::array<double, 3> a1;  // normal of the affine-direction plane for R1
    std::array<double, 3> a2;  // same for R2
};

/// Normals of the affine-direction planes at a point of the R1 = R2
/// hyperboloid: a direction t in (r+, r-, r1) is affine for the radius
/// function sqrt(R_i) iff t . A_i = 0.
inline AffineDirections affine_directions(const RPoint& r, double tol = 1e-8) {
    if (std::abs(mstar_residual(r)) > tol)
        throw std::invalid_argument("affine_directions: point is not on the R1 = R2 hyperboloid");
    const double rp = r.r_plus, rm = r.r_minus, r1 = r.r1;
    AffineDirections d;
    d.a1 = {2.0 - 3.0 * r1 - 12.0 * rm, -2.0 - 3.0 * r1 + 12.0 * rp, -1.0 + 3.0 * rm + 3.0 * rp};
    d.a2 = {-r1, -r1, -1.0 + rm + rp};
    return d;
}

// --- biseparable pure-state parameterization ------------------------------

/// Parameters of psi1 x phi23 after the U x U x U rotation taking psi1 to
/// the basis vector |1>. phi23 lives on the pair, dimension d^2.
inline CParams cparams_from_vector(const std::vector<cplx>& psi1, const std::vector<cplx>& phi23) {
    detail::check_unit(psi1);
    detail::check_unit(phi23);
    const int d = static_cast<int>(psi1.size());
    if (static_cast<int>(phi23.size()) != d * d)
        throw std::invalid_argument("cparams_from_vector: phi23 must have dimension d^2");

    // Householder reflection taking psi1 to (a phase times) |1>.
    std::vector<cplx> w(d);
    const cplx overlap = psi1[0];
    const cplx phase = (std::abs(overlap) > 1e-14) ? overlap / std::abs(overlap) : cplx(1.0);
    double wn2 = 0.0;
    for (int i = 0; i < d; ++i) {
        w[i] = psi1[i] - (i == 0 ? phase : cplx(0.0));
        wn2 += std::norm(w[i]);
    }
    auto u_apply = [&](const cplx* in, cplx* out) {
        // out = (I - 2 w w* / |w|^2) in
        if (wn2 < 1e-24) {
            for (int i = 0; i < d; ++i) out[i] = in[i];
            return;
        }
        cplx dot = 0.0;
        for (int i = 0; i < d; ++i) dot += std::conj(w[i]) * in[i];
        const cplx f = 2.0 * dot / wn2;
        for (int i = 0; i < d; ++i) out[i] = in[i] - f * w[i];
    };

    // m = (U x U) phi23, applied factor by factor.
    std::vector<cplx> tmp(d * d), m(d * d);
    std::vector<cplx> col_in(d), col_out(d);
    for (int j = 0; j < d; ++j) {  // act on the first pair index
        for (int i = 0; i < d; ++i) col_in[i] = phi23[i * d + j];
        u_apply(col_in.data(), col_out.data());
        for (int i = 0; i < d; ++i) tmp[i * d + j] = col_out[i];
    }
    for (int i = 0; i < d; ++i) {  // act on the second pair index
        u_apply(tmp.data() + i * d, m.data() + i * d);
    }

    CParams c;
    c.c0 = std::norm(m[0]);
    for (int j = 1; j < d; ++j) c.c1 += std::norm(m[j]);
    for (int i = 1; i < d; ++i) c.c2 += std::norm(m[i * d]);
    cplx c3 = 0.0, c45 = 0.0;
    for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j) c3 += std::conj(m[i * d + j]) * m[j * d + i];
    for (int j = 1; j < d; ++j) c45 += std::conj(m[j * d]) * m[j];
    c.c3 = c3.real();
    c.c4 = c45.real();
    c.c5 = c45.imag();
    return c;
}

/// Range conditions for the biseparable parameters; both inequalities are
/// equalities at d = 2.
inline bool validate_cparams(const CParams& c, int d, double tol = 1e-9) {
    if (c.c0 < -tol || c.c1 < -tol || c.c2 < -tol) return false;
    const double cs = c.c4 * c.c4 + c.c5 * c.c5 - c.c1 * c.c2;
    if (cs > tol) return false;
    const double rem = 1.0 - c.c0 - c.c1 - c.c2;
    if (std::abs(c.c3) > rem + tol) return false;
    if (d == 2 && (std::abs(cs) > tol || std::abs(std::abs(c.c3) - rem) > tol)) return false;
    return true;
}

inline RPoint rpoint_from_cparams(const CParams& c) {
    RPoint r;
    r.r_plus = (1.0 + 5.0 * c.c0 + c.c1 + c.c2 + c.c3 + 4.0 * c.c4) / 6.0;
    r.r_minus = (1.0 - c.c0 - c.c1 - c.c2 - c.c3) / 6.0;
    r.r1 = (-c.c1 - c.c2 + 2.0 * c.c3 + 4.0 * c.c4) / 3.0;
    r.r2 = (c.c1 - c.c2) / std::sqrt(3.0);
    r.r3 = 2.0 * c.c5 / std::sqrt(3.0);
    return r;
}

}  // namespace tritwirl
