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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritwirl/matrix.hpp"
#include "tritwirl/oracle.hpp"
#include "tritwirl/perm_algebra.hpp"
#include "tritwirl/points.hpp"

namespace tritwirl {

/// Expansion coefficients in rho = sum c_k R_k. These are not the
/// expectations r_k; the two are related by a d-dependent rescaling.
struct CCoeffs {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Dimension of the symmetric subspace of (C^d)^x3; equals the r+/c+ ratio.
inline double sym_dim(int d) { return d * (d + 1.0) * (d + 2.0) / 6.0; }
/// Dimension of the antisymmetric subspace; zero at d=2.
inline double antisym_dim(int d) { return d * (d - 1.0) * (d - 2.0) / 6.0; }
/// The r_i/c_i ratio for the two-dimensional summand, i = 0..3.
inline double pauli_weight(int d) { return 2.0 * d * (d * d - 1.0) / 3.0; }

/// True iff the tuple satisfies the state-space conditions: nonnegative
/// weights and |r_vec| <= r0, plus r- = 0 when d = 2. Pass d only when the
/// d=2 constraint matters; the set is otherwise dimension independent.
inline bool validate_rpoint(const RPoint& r, std::optional<int> d = std::nullopt, double tol = 1e-9) {
    if (r.r_plus < -tol || r.r_minus < -tol) return false;
    const double r0 = r.r0();
    if (r0 < -tol) return false;
    const double norm = std::sqrt(r.r1 * r.r1 + r.r2 * r.r2 + r.r3 * r.r3);
    if (norm > r0 + tol) return false;
    if (d && *d == 2 && std::abs(r.r_minus) > tol) return false;
    return true;
}

inline CCoeffs r_to_c(const RPoint& r, int d, double tol = 1e-9) {
    if (d < 2) throw std::invalid_argument("r_to_c: d must be >= 2");
    CCoeffs c;
    c.c_plus = r.r_plus / sym_dim(d);
    if (d == 2) {
        if (std::abs(r.r_minus) > tol)
            throw std::invalid_argument("r_to_c: the antisymmetric summand vanishes at d=2 but r- != 0");
        c.c_minus = 0.0;
    } else {
        c.c_minus = r.r_minus / antisym_dim(d);
    }
    const double w = pauli_weight(d);
    c.c0 = r.r0() / w;
    c.c1 = r.r1 / w;
    c.c2 = r.r2 / w;
    c.c3 = r.r3 / w;
    return c;
}

inline RPoint c_to_r(const CCoeffs& c, int d) {
    if (d < 2) throw std::invalid_argument("c_to_r: d must be >= 2");
    RPoint r;
    r.r_plus = sym_dim(d) * c.c_plus;
    r.r_minus = antisym_dim(d) * c.c_minus;
    const double w = pauli_weight(d);
    r.r1 = w * c.c1;
    r.r2 = w * c.c2;
    r.r3 = w * c.c3;
    return r;
}

/// Exact coordinates of the invariant projection of the identity/d^3.
inline RPoint maximally_mixed_rpoint(int d) {
    const double n = d * d * d;
    return RPoint{sym_dim(d) / n, antisym_dim(d) / n, 0.0, 0.0, 0.0};
}

/// R_k expectations of an arbitrary density matrix. The twirled state is
/// fully determined by the output; no Haar integration is performed.
inline RPoint twirl(CMat rho, double herm_tol = 1e-10) {
    if (!rho.is_hermitian(herm_tol)) throw std::invalid_argument("twirl: input not Hermitian");
    rho.symmetrize();
    const int d = oracle::local_dim_from_size(rho.size());
    if (std::abs(rho.trace() - 1.0) > 1e-8) throw std::invalid_argument("twirl: input trace is not 1");
    auto expectation = [&](RIndex k) { return (rho * oracle::r_matrix(k, d)).trace().real(); };
    RPoint r;
    r.r_plus = expectation(RIndex::Plus);
    r.r_minus = expectation(RIndex::Minus);
    r.r1 = expectation(RIndex::One);
    r.r2 = expectation(RIndex::Two);
    r.r3 = expectation(RIndex::Three);
    return r;
}

/// The invariant density matrix with the given R_k expectations.
inline CMat reconstruct(const RPoint& r, int d, double tol = 1e-9) {
    if (!validate_rpoint(r, d, tol)) throw std::invalid_argument("reconstruct: point is not a state");
    const CCoeffs c = r_to_c(r, d, tol);
    const int n = d * d * d;
    CMat rho(n);
    const std::array<double, 6> coeff = {c.c_plus, c.c_minus, c.c0, c.c1, c.c2, c.c3};
    for (int k = 0; k < 6; ++k) {
        if (coeff[k] == 0.0) continue;
        CMat m = oracle::r_matrix(static_cast<RIndex>(k), d);
        m *= coeff[k];
        rho += m;
    }
    return rho;
}

enum class Subgroup { FullS3, Swap23, Cyclic };

/// Projection of the coordinates under subgroup averaging; r+ and r- are
/// always preserved.
inline RPoint subgroup_average(const RPoint& r, Subgroup g) {
    switch (g) {
        case Subgroup::FullS3:
            return RPoint{r.r_plus, r.r_minus, 0.0, 0.0, 0.0};
        case Subgroup::Swap23:
            return RPoint{r.r_plus, r.r_minus, r.r1, 0.0, 0.0};
        case Subgroup::Cyclic:
            return RPoint{r.r_plus, r.r_minus, 0.0, 0.0, r.r3};
    }
    throw std::logic_error("subgroup_average: bad group");
}

/// Exact rational coordinates of a named point. The Q_i depend on d.
inline std::array<Rat, 5> special_point_exact(const std::string& name, int d = 3) {
    const Rat z(0);
    if (name == "A") return {Rat(1, 6), Rat(1, 6), z, z, z};
    if (name == "B") return {Rat(1), z, z, z, z};
    if (name == "C") return {Rat(1, 4), z, z, z, z};
    if (name == "D") return {Rat(1, 3), z, Rat(2, 3), z, z};
    if (name == "E") return {z, z, Rat(-1), z, z};
    if (name == "F") return {z, Rat(1, 3), Rat(-2, 3), z, z};
    if (name == "G") return {Rat(1, 5), z, z, z, z};
    if (name == "P1") return {z, z, Rat(1), z, z};
    if (name == "P2") return {z, z, Rat(-1), z, z};
    if (name == "P3") return {z, Rat(1), z, z, z};
    if (name == "P4") return {Rat(1), z, z, z, z};
    if (name == "Q1") return {Rat(2 + d, 3), z, Rat(1 - d, 3), z, z};
    if (name == "Q2") return {z, Rat(2 - d, 3), Rat(-(1 + d), 3), z, z};
    if (name == "Q3") return {z, Rat(1, 3), Rat(-2, 3), z, z};
    if (name == "Q4") return {Rat(1, 3), z, Rat(2, 3), z, z};
    throw std::invalid_argument("unknown special point '" + name + "'");
}

inline RPoint special_point(const std::string& name, int d = 3) {
    const auto e = special_point_exact(name, d);
    return RPoint{e[0].value(), e[1].value(), e[2].value(), e[3].value(), e[4].value()};
}

inline const std::vector<std::string>& special_point_names() {
    static const std::vector<std::string> names = {"A", "B", "C",  "D",  "E",  "F",  "G",  "P1",
                                                   "P2", "P3", "P4", "Q1", "Q2", "Q3", "Q4"};
    return names;
}

/// The defining pure vector of a named point A..G, as a d^3 vector.
/// A and F need three levels, so d >= 3 for those.
inline std::vector<cplx> special_vector(const std::string& name, int d) {
    if (d < 2) throw std::invalid_argument("special_vector: d must be >= 2");
    const int n = d * d * d;
    std::vector<cplx> v(n);
    auto ket = [&](int i, int j, int k) -> cplx& { return v[(i - 1) * d * d + (j - 1) * d + (k - 1)]; };
    const double s3 = std::sqrt(3.0);
    if (name == "A" || name == "F") {
        if (d < 3) throw std::invalid_argument("special_vector: '" + name + "' needs d >= 3");
        if (name == "A") {
            ket(1, 2, 3) = 1.0;
        } else {
            ket(1, 2, 3) = 1.0 / std::sqrt(2.0);
            ket(1, 3, 2) = -1.0 / std::sqrt(2.0);
        }
    } else if (name == "B") {
        ket(1, 1, 1) = 1.0;
    } else if (name == "C") {
        ket(1, 1, 1) = 0.25;
        ket(1, 1, 2) = -s3 / 4.0;
        ket(1, 2, 1) = s3 / 4.0;
        ket(1, 2, 2) = -0.75;
    } else if (name == "D") {
        ket(1, 2, 2) = 1.0;
    } else if (name == "E") {
        ket(1, 1, 2) = 1.0 / std::sqrt(2.0);
        ket(1, 2, 1) = -1.0 / std::sqrt(2.0);
    } else if (name == "G") {
        ket(1, 1, 2) = 1.0 / std::sqrt(5.0);
        ket(1, 2, 1) = -1.0 / std::sqrt(5.0);
        ket(1, 2, 2) = -s3 / std::sqrt(5.0);
    } else {
        throw std::invalid_argument("special_vector: no defining vector for '" + name + "'");
    }
    return v;
}

/// |psi><psi| as a dense matrix.
inline CMat pure_state(const std::vector<cplx>& psi) {
    const int n = static_cast<int>(psi.size());
    CMat rho(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    return rho;
}

}  // namespace tritwirl
