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

#include "tritwirl/rng.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/werner.hpp"

namespace tritwirl::oracle {

inline std::vector<cplx> random_unit_vector(CounterRng& rng, int dim) {
    std::vector<cplx> v(dim);
    double n2 = 0.0;
    for (auto& x : v) {
        x = rng.complex_normal();
        n2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= inv;
    return v;
}

/// Uniform rejection sample of a valid coordinate tuple from the bounding
/// box r+, r- in [0,1], r_i in [-1,1]; forces r- = 0 at d = 2.
inline RPoint random_rpoint(CounterRng& rng, int d = 3) {
    for (;;) {
        RPoint r;
        r.r_plus = rng.uniform();
        r.r_minus = (d == 2) ? 0.0 : rng.uniform();
        r.r1 = rng.uniform(-1.0, 1.0);
        r.r2 = rng.uniform(-1.0, 1.0);
        r.r3 = rng.uniform(-1.0, 1.0);
        if (validate_rpoint(r, d, 0.0)) return r;
    }
}

/// Coordinates of the twirl of a random product triple; always triseparable.
inline RPoint random_tsp_rpoint(CounterRng& rng, int d = 3) {
    const auto p1 = random_unit_vector(rng, d);
    const auto p2 = random_unit_vector(rng, d);
    const auto p3 = random_unit_vector(rng, d);
    return rpoint_from_apoint(apoint_from_vectors(p1, p2, p3));
}

enum class SampleKind { ProductTriple, BipartiteProduct, WernerPoint, WernerPair };

/// One random draw; vectors or points are filled depending on the kind.
struct Sample {
    std::vector<std::vector<cplx>> vectors;
    RPoint point;
    RPoint point2;  // werner-pair only
};

inline Sample sample_random(SampleKind kind, int d, uint64_t seed, uint64_t stream = 0) {
    if (d < 2) throw std::invalid_argument("sample_random: d must be >= 2");
    CounterRng rng(seed, stream);
    Sample s;
    switch (kind) {
        case SampleKind::ProductTriple:
            s.vectors.push_back(random_unit_vector(rng, d));
            s.vectors.push_back(random_unit_vector(rng, d));
            s.vectors.push_back(random_unit_vector(rng, d));
            s.point = rpoint_from_apoint(apoint_from_vectors(s.vectors[0], s.vectors[1], s.vectors[2]));
            break;
        case SampleKind::BipartiteProduct:
            s.vectors.push_back(random_unit_vector(rng, d));
            s.vectors.push_back(random_unit_vector(rng, d * d));
            s.point = rpoint_from_cparams(cparams_from_vector(s.vectors[0], s.vectors[1]));
            break;
        case SampleKind::WernerPoint:
            s.point = random_rpoint(rng, d);
            break;
        case SampleKind::WernerPair:
            s.point = random_rpoint(rng, d);
            s.point2 = random_rpoint(rng, d);
            break;
    }
    return s;
}

}  // namespace tritwirl::oracle
