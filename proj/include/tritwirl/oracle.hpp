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

#include <stdexcept>
#include <vector>

#include "tritwirl/matrix.hpp"
#include "tritwirl/perm_algebra.hpp"

namespace tritwirl::oracle {

/// Local dimension from a d^3 x d^3 matrix size; throws if the size is not
/// a perfect cube of an integer >= 2.
inline int local_dim_from_size(int n) {
    for (int d = 2; d * d * d <= n; ++d)
        if (d * d * d == n) return d;
    throw std::invalid_argument("matrix size is not d^3 for integer d >= 2");
}

/// The tensor-slot permutation unitary: V_pi (phi_1 x phi_2 x phi_3) =
/// phi_{pi^-1 1} x phi_{pi^-1 2} x phi_{pi^-1 3}.
inline CMat permutation_matrix(Perm pi, int d) {
    if (d < 2) throw std::invalid_argument("permutation_matrix: d must be >= 2");
    const int n = d * d * d;
    const Perm inv = inverse(pi);
    CMat v(n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const int src[3] = {i, j, k};
                const int row = src[apply(inv, 0)] * d * d + src[apply(inv, 1)] * d + src[apply(inv, 2)];
                v(row, i * d * d + j * d + k) = 1.0;
            }
    return v;
}

/// Concrete matrix of a group-algebra element: sum mu(pi) V_pi.
inline CMat ga_to_matrix(const GAElem& a, int d) {
    const int n = d * d * d;
    CMat m(n);
    for (int k = 0; k < kNumPerms; ++k) {
        if (a.mu[k] == cplx{}) continue;
        CMat v = permutation_matrix(static_cast<Perm>(k), d);
        v *= a.mu[k];
        m += v;
    }
    return m;
}

/// Matrix of R_k at local dimension d, cached for d in {2,3,4}.
inline const CMat& r_matrix(RIndex k, int d) {
    if (d < 2 || d > 4) throw std::invalid_argument("r_matrix: supported oracle dimensions are d in {2,3,4}");
    static const auto cache = [] {
        std::vector<std::vector<CMat>> t(3);
        for (int d = 2; d <= 4; ++d) {
            t[d - 2].reserve(6);
            for (int k = 0; k < 6; ++k) t[d - 2].push_back(ga_to_matrix(r_basis_elem(static_cast<RIndex>(k)), d));
        }
        return t;
    }();
    return cache[d - 2][static_cast<int>(k)];
}

/// Transposition on the first tensor factor only.
inline CMat partial_transpose_1(const CMat& rho) {
    const int n = rho.size();
    const int d = local_dim_from_size(n);
    const int dd = d * d;
    CMat out(n);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int a = 0; a < dd; ++a)
                for (int b = 0; b < dd; ++b) out(i1 * dd + a, i2 * dd + b) = rho(i2 * dd + a, i1 * dd + b);
    return out;
}

}  // namespace tritwirl::oracle
