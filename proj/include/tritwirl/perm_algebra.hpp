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
#include <stdexcept>
#include <string>
#include <utility>

#include "tritwirl/points.hpp"

namespace tritwirl {

/// The six permutations of three letters, in cycle notation.
enum class Perm : int {
    Id = 0,     // e
    T12 = 1,    // (12)
    T23 = 2,    // (23)
    T13 = 3,    // (13)
    C123 = 4,   // (123): 1->2->3->1
    C132 = 5,   // (132): 1->3->2->1
};

constexpr int kNumPerms = 6;

namespace detail {
// images[p][i] = p(i) on letters {0,1,2}.
constexpr int kImages[kNumPerms][3] = {
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
};
constexpr int kInverse[kNumPerms] = {0, 1, 2, 3, 5, 4};
constexpr int kCycleCount[kNumPerms] = {3, 2, 2, 2, 1, 1};
}  // namespace detail

inline int apply(Perm p, int letter) { return detail::kImages[static_cast<int>(p)][letter]; }

/// Composition with the apply-right-first convention: compose(p,q)(i) = p(q(i)).
/// This matches the matrix product V_p V_q = V_{compose(p,q)}.
inline Perm compose(Perm p, Perm q) {
    int img[3];
    for (int i = 0; i < 3; ++i) img[i] = apply(p, apply(q, i));
    for (int k = 0; k < kNumPerms; ++k) {
        if (detail::kImages[k][0] == img[0] && detail::kImages[k][1] == img[1] && detail::kImages[k][2] == img[2])
            return static_cast<Perm>(k);
    }
    throw std::logic_error("compose: not a permutation");
}

inline Perm inverse(Perm p) { return static_cast<Perm>(detail::kInverse[static_cast<int>(p)]); }

/// Number of cycles (fixed points included); tr V_pi = d^cycle_count(pi).
inline int cycle_count(Perm p) { return detail::kCycleCount[static_cast<int>(p)]; }

inline const char* perm_name(Perm p) {
    static const char* names[kNumPerms] = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
    return names[static_cast<int>(p)];
}

/// An element of the group algebra of S3: one complex coefficient per
/// permutation, representing sum_pi mu(pi) V_pi.
struct GAElem {
    std::array<cplx, kNumPerms> mu{};

    cplx& operator[](Perm p) { return mu[static_cast<int>(p)]; }
    const cplx& operator[](Perm p) const { return mu[static_cast<int>(p)]; }

    static GAElem delta(Perm p) {
        GAElem a;
        a[p] = 1.0;
        return a;
    }

    GAElem& operator+=(const GAElem& o) {
        for (int k = 0; k < kNumPerms; ++k) mu[k] += o.mu[k];
        return *this;
    }
    friend GAElem operator+(GAElem a, const GAElem& b) { return a += b; }
    friend GAElem operator*(cplx s, GAElem a) {
        for (auto& x : a.mu) x *= s;
        return a;
    }

    /// Hermitian as an operator iff mu(pi^-1) = conj(mu(pi)).
    bool is_hermitian(double tol) const {
        for (int k = 0; k < kNumPerms; ++k)
            if (std::abs(mu[k] - std::conj(mu[detail::kInverse[k]])) > tol) return false;
        return true;
    }
};

/// Group-algebra convolution: (ab)_tau = sum over pi sigma = tau of a_pi b_sigma.
inline GAElem ga_multiply(const GAElem& a, const GAElem& b) {
    GAElem c;
    for (int p = 0; p < kNumPerms; ++p) {
        if (a.mu[p] == cplx{}) continue;
        for (int q = 0; q < kNumPerms; ++q) {
            const Perm t = compose(static_cast<Perm>(p), static_cast<Perm>(q));
            c[t] += a.mu[p] * b.mu[q];
        }
    }
    return c;
}

/// tr(sum mu(pi) V_pi) = sum mu(pi) d^cycles(pi) at local dimension d.
inline cplx ga_trace(const GAElem& a, int d) {
    if (d < 2) throw std::invalid_argument("ga_trace: d must be >= 2");
    cplx t = 0.0;
    for (int k = 0; k < kNumPerms; ++k) {
        double w = 1.0;
        for (int c = 0; c < detail::kCycleCount[k]; ++c) w *= d;
        t += a.mu[k] * w;
    }
    return t;
}

enum class RIndex : int { Plus = 0, Minus = 1, Zero = 2, One = 3, Two = 4, Three = 5 };

/// The R_k expressed in the group algebra. Coefficient order follows Perm:
/// e, (12), (23), (13), (123), (132).
inline const GAElem& r_basis_elem(RIndex k) {
    static const std::array<GAElem, 6> table = [] {
        std::array<GAElem, 6> t{};
        const double s3 = 1.0 / std::sqrt(3.0);
        t[0].mu = {cplx(1.0 / 6), cplx(1.0 / 6), cplx(1.0 / 6), cplx(1.0 / 6), cplx(1.0 / 6), cplx(1.0 / 6)};
        t[1].mu = {cplx(1.0 / 6), cplx(-1.0 / 6), cplx(-1.0 / 6), cplx(-1.0 / 6), cplx(1.0 / 6), cplx(1.0 / 6)};
        t[2].mu = {cplx(2.0 / 3), cplx(0), cplx(0), cplx(0), cplx(-1.0 / 3), cplx(-1.0 / 3)};
        t[3].mu = {cplx(0), cplx(-1.0 / 3), cplx(2.0 / 3), cplx(-1.0 / 3), cplx(0), cplx(0)};
        t[4].mu = {cplx(0), cplx(s3), cplx(0), cplx(-s3), cplx(0), cplx(0)};
        t[5].mu = {cplx(0), cplx(0), cplx(0), cplx(0), cplx(0, s3), cplx(0, -s3)};
        return t;
    }();
    return table[static_cast<int>(k)];
}

/// Block decomposition of a group-algebra functional: two scalar weights
/// plus the 2x2 Hermitian block of the two-dimensional summand.
struct BlockForm {
    double w_plus = 0.0;
    double w_minus = 0.0;
    std::array<cplx, 4> block{};  // row-major 2x2

    double block_trace() const { return (block[0] + block[3]).real(); }

    /// Eigenvalues of the 2x2 block, ascending.
    std::pair<double, double> block_eigenvalues() const {
        const double tr = block_trace();
        const double a = block[0].real(), d = block[3].real();
        const double det = a * d - std::norm(block[1]);
        const double disc = std::sqrt(std::max(0.0, 0.25 * (a - d) * (a - d) + std::norm(block[1])));
        return {0.5 * tr - disc, 0.5 * tr + disc};
    }
};

/// block = (r0 I + r1 s1 + r2 s2 + r3 s3)/2 with the standard Pauli matrices.
inline BlockForm rpoint_to_blockform(const RPoint& r) {
    BlockForm b;
    b.w_plus = r.r_plus;
    b.w_minus = r.r_minus;
    const double r0 = r.r0();
    b.block[0] = 0.5 * (r0 + r.r3);
    b.block[1] = 0.5 * cplx(r.r1, -r.r2);
    b.block[2] = 0.5 * cplx(r.r1, r.r2);
    b.block[3] = 0.5 * (r0 - r.r3);
    return b;
}

inline bool blockform_is_positive(const BlockForm& b, double tol = 1e-9) {
    if (b.w_plus < -tol || b.w_minus < -tol) return false;
    return b.block_eigenvalues().first >= -tol;
}

/// Reads the R_k expectations of a Hermitian unit-trace group-algebra
/// element: r_k = tr(a R_k). Also returns r0, which must match
/// 1 - r+ - r- for a consistent input.
inline std::pair<RPoint, double> ga_to_rpoint(const GAElem& a, int d, double tol = 1e-9) {
    if (!a.is_hermitian(tol)) throw std::invalid_argument("ga_to_rpoint: element not Hermitian");
    const cplx tr = ga_trace(a, d);
    if (std::abs(tr - 1.0) > tol) throw std::invalid_argument("ga_to_rpoint: trace is not 1");
    auto expectation = [&](RIndex k) { return ga_trace(ga_multiply(a, r_basis_elem(k)), d).real(); };
    RPoint r;
    r.r_plus = expectation(RIndex::Plus);
    r.r_minus = expectation(RIndex::Minus);
    r.r1 = expectation(RIndex::One);
    r.r2 = expectation(RIndex::Two);
    r.r3 = expectation(RIndex::Three);
    const double r0 = expectation(RIndex::Zero);
    return {r, r0};
}

}  // namespace tritwirl
