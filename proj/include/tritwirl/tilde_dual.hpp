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
#include <stdexcept>
#include <vector>

#include "tritwirl/matrix.hpp"
#include "tritwirl/oracle.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/werner.hpp"

namespace tritwirl {

namespace detail {

/// Gaussian elimination with partial pivoting; A is n x n row-major.
template <typename T>
inline std::vector<T> solve_linear(std::vector<T> a, std::vector<T> b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-13) throw std::runtime_error("solve_linear: singular system");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const T f = a[r * n + col] / a[col * n + col];
            if (f == T{}) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<T> x(n);
    for (int r = n - 1; r >= 0; --r) {
        T s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

}  // namespace detail

struct XVGenerators {
    CMat x;  // V(12)^{T1} = |Phi><Phi| x 1, Phi = sum_i |ii>
    CMat v;  // V(23), invariant under the partial transpose
};

/// Generators of the algebra spanned by partial transposes of permutations;
/// they satisfy X^2 = dX, V^2 = 1, XVX = X.
inline XVGenerators xv_generators(int d) {
    XVGenerators g;
    g.x = oracle::partial_transpose_1(oracle::permutation_matrix(Perm::T12, d));
    g.v = oracle::permutation_matrix(Perm::T23, d);
    return g;
}

/// The six S_k matrices at local dimension d, ordered (+, -, 0, 1, 2, 3).
/// They satisfy the same relation set as the R_k.
inline const std::array<CMat, 6>& s_matrices(int d) {
    if (d < 2 || d > 4) throw std::invalid_argument("s_matrices: supported oracle dimensions are d in {2,3,4}");
    static const auto cache = [] {
        std::vector<std::array<CMat, 6>> t;
        for (int d = 2; d <= 4; ++d) {
            const auto [x, v] = xv_generators(d);
            const int n = d * d * d;
            const CMat one = CMat::identity(n);
            const CMat vxv = v * x * v;
            const CMat xv = x * v;
            const CMat vx = v * x;
            const double w = d * d - 1.0;
            const double sw = std::sqrt(w);
            CMat sym = one + v;
            sym *= 0.5;
            CMat asym = one - v;
            asym *= 0.5;
            std::array<CMat, 6> s = {
                sym * (one - (2.0 / (d + 1.0)) * x) * sym,
                asym * (one - (2.0 / (d - 1.0)) * x) * asym,
                (1.0 / w) * (cplx(d) * (x + vxv) - (xv + vx)),
                (1.0 / w) * (cplx(d) * (xv + vx) - (x + vxv)),
                (1.0 / sw) * (x - vxv),
                (cplx(0.0, 1.0) / sw) * (xv - vx),
            };
            t.push_back(std::move(s));
        }
        return t;
    }();
    return cache[d - 2];
}

/// Spec-facing name for the six matrices.
inline const std::array<CMat, 6>& s_operators(int d) { return s_matrices(d); }

inline bool validate_spoint(const SPoint& s, double tol = 1e-9) {
    if (s.s_plus < -tol || s.s_minus < -tol) return false;
    const double s0 = s.s0();
    if (s0 < -tol) return false;
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) <= s0 + tol;
}

/// S_k expectations of an arbitrary density matrix; these are the
/// coordinates of its average over conjugations by conj(U) x U x U.
inline SPoint tilde_twirl(CMat rho, double herm_tol = 1e-10) {
    if (!rho.is_hermitian(herm_tol)) throw std::invalid_argument("tilde_twirl: input not Hermitian");
    rho.symmetrize();
    const int d = oracle::local_dim_from_size(rho.size());
    if (std::abs(rho.trace() - 1.0) > 1e-8) throw std::invalid_argument("tilde_twirl: input trace is not 1");
    const auto& s = s_matrices(d);
    auto expectation = [&](int k) { return (rho * s[k]).trace().real(); };
    return SPoint{expectation(0), expectation(1), expectation(3), expectation(4), expectation(5)};
}

/// The 6x6 linear map taking (r+, r-, r0, r1, r2, r3) of an invariant state
/// to the (s+, s-, s0, s1, s2, s3) of its dual-twirl image. Derived from the
/// matrices, not transcribed. d = 2 is degenerate (the r- column has no
/// preimage) and rejected.
inline const std::array<std::array<double, 6>, 6>& iota(int d) {
    if (d < 3 || d > 4) throw std::invalid_argument("iota: needs d in {3,4} (d=2 is degenerate)");
    static const auto cache = [] {
        std::vector<std::array<std::array<double, 6>, 6>> t;
        for (int d = 3; d <= 4; ++d) {
            const auto& s = s_matrices(d);
            const std::array<double, 6> divisor = {sym_dim(d),      antisym_dim(d),  pauli_weight(d),
                                                   pauli_weight(d), pauli_weight(d), pauli_weight(d)};
            std::array<std::array<double, 6>, 6> m{};
            for (int j = 0; j < 6; ++j) {
                const CMat rj = oracle::partial_transpose_1(oracle::r_matrix(static_cast<RIndex>(j), d));
                for (int k = 0; k < 6; ++k) m[k][j] = (rj * s[k]).trace().real() / divisor[j];
            }
            t.push_back(m);
        }
        return t;
    }();
    return cache[d - 3];
}

inline std::array<double, 6> apply_iota(const std::array<std::array<double, 6>, 6>& m,
                                        const std::array<double, 6>& v) {
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline SPoint iota_apply(const RPoint& r, int d) {
    const auto s = apply_iota(iota(d), {r.r_plus, r.r_minus, r.r0(), r.r1, r.r2, r.r3});
    return SPoint{s[0], s[1], s[3], s[4], s[5]};
}

inline RPoint iota_invert(const SPoint& s, int d) {
    const auto& m = iota(d);
    std::vector<double> a(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i * 6 + j] = m[i][j];
    const std::vector<double> b = {s.s_plus, s.s_minus, s.s0(), s.s1, s.s2, s.s3};
    const auto r = detail::solve_linear(a, b, 6);
    return RPoint{r[0], r[1], r[3], r[4], r[5]};
}

enum class TildeSet { Triseparable, Biseparable1, PptImage };

/// Membership in the transported separability classes on the dual side:
/// map back through iota and delegate to the closed-form predicates.
inline bool tilde_membership(const SPoint& s, TildeSet set, int d, double tol = 1e-9) {
    const RPoint r = iota_invert(s, d);
    switch (set) {
        case TildeSet::Triseparable:
            return is_triseparable(r, tol);
        case TildeSet::Biseparable1:
            return is_biseparable(r, Partition(1), tol);
        case TildeSet::PptImage:
            return is_ppt1(r, tol);
    }
    throw std::logic_error("tilde_membership: bad set");
}

/// Exact dual-twirl coordinates (s+, s-, s1, s2, s3) of the named points
/// A..G, as rational functions of d.
inline std::array<Rat, 5> tilde_special_point_exact(const std::string& name, int d) {
    const Rat z(0);
    if (name == "A") return {Rat(1, 2), Rat(1, 2), z, z, z};
    if (name == "B") return {Rat(d - 1, d + 1), z, Rat(2, d + 1), z, z};
    if (name == "C") return {Rat(4 + 5 * d, 8 + 8 * d), Rat(3 * d - 6, 8 * d - 8), Rat(d + 2, 4 - 4 * d * d), z, z};
    if (name == "D") return {Rat(1), z, z, z, z};
    if (name == "E") return {z, Rat(d - 2, d - 1), Rat(1, 1 - d), z, z};
    if (name == "F") return {z, Rat(1), z, z, z};
    if (name == "G") return {Rat(3, 5), Rat(2 * d - 4, 5 * d - 5), Rat(2, 5 - 5 * d), z, z};
    throw std::invalid_argument("tilde_special_point_exact: unknown point '" + name + "'");
}

inline SPoint tilde_special_point(const std::string& name, int d) {
    const auto e = tilde_special_point_exact(name, d);
    return SPoint{e[0].value(), e[1].value(), e[2].value(), e[3].value(), e[4].value()};
}

// --- averaging helpers used by the cross-validation suites ----------------

/// Invariant-algebra projection of an arbitrary operator: the conditional
/// expectation onto the span of the permutation operators.
inline CMat project_onto_perm_algebra(const CMat& a) {
    const int d = oracle::local_dim_from_size(a.size());
    CMat out(a.size());
    const std::array<double, 6> divisor = {sym_dim(d),      antisym_dim(d),  pauli_weight(d),
                                           pauli_weight(d), pauli_weight(d), pauli_weight(d)};
    for (int k = 0; k < 6; ++k) {
        if (divisor[k] == 0.0) continue;  // antisymmetric summand absent at d=2
        const CMat& rk = oracle::r_matrix(static_cast<RIndex>(k), d);
        const cplx coeff = (a * rk).trace() / divisor[k];
        if (coeff == cplx{}) continue;
        CMat term = rk;
        term *= coeff;
        out += term;
    }
    return out;
}

/// Dual twirl computed through the partial transpose:
/// (P(A^{T1}))^{T1} where P is the permutation-algebra projection.
inline CMat tilde_average_via_pt(const CMat& a) {
    return oracle::partial_transpose_1(project_onto_perm_algebra(oracle::partial_transpose_1(a)));
}

/// Dual twirl computed as the Hilbert-Schmidt orthogonal projection onto
/// the span of {1, X, V, VXV, XV, VX}; independent route for cross-checks.
inline CMat tilde_average_via_span(const CMat& a) {
    const int d = oracle::local_dim_from_size(a.size());
    const auto [x, v] = xv_generators(d);
    const int n = a.size();
    std::vector<CMat> basis;
    basis.push_back(CMat::identity(n));
    basis.push_back(x);
    basis.push_back(v);
    basis.push_back(v * x * v);
    basis.push_back(x * v);
    basis.push_back(v * x);
    // Hilbert-Schmidt Gram-Schmidt; the six operators are dependent at d=2,
    // so near-zero remainders are dropped instead of solving a Gram system.
    auto hs = [](const CMat& p, const CMat& q) { return (p.adjoint() * q).trace(); };
    std::vector<CMat> ortho;
    for (CMat b : basis) {
        for (const CMat& e : ortho) {
            const cplx c = hs(e, b);
            CMat term = e;
            term *= c;
            b -= term;
        }
        const double norm = std::sqrt(hs(b, b).real());
        if (norm < 1e-8) continue;
        b *= 1.0 / norm;
        ortho.push_back(std::move(b));
    }
    CMat out(n);
    for (const CMat& e : ortho) {
        CMat term = e;
        term *= hs(e, a);
        out += term;
    }
    return out;
}

}  // namespace tritwirl
