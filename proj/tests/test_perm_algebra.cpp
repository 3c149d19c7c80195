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

#include <catch2/catch_amalgamated.hpp>

#include "tritwirl/oracle.hpp"
#include "tritwirl/perm_algebra.hpp"
#include "tritwirl/rng.hpp"
#include "tritwirl/sampling.hpp"
#include "tritwirl/werner.hpp"

using namespace tritwirl;

namespace {

double ga_max_abs(const GAElem& a) {
    double m = 0.0;
    for (const auto& x : a.mu) m = std::max(m, std::abs(x));
    return m;
}

GAElem ga_sub(GAElem a, const GAElem& b) {
    for (int k = 0; k < kNumPerms; ++k) a.mu[k] -= b.mu[k];
    return a;
}

}  // namespace

TEST_CASE("composition uses the apply-right-first convention") {
    // compose(p,q)(i) = p(q(i)); with that reading (12)(23) = (123).
    CHECK(compose(Perm::T12, Perm::T23) == Perm::C123);
    CHECK(compose(Perm::T23, Perm::T12) == Perm::C132);
    CHECK(compose(Perm::Id, Perm::C123) == Perm::C123);
    CHECK(compose(Perm::T12, Perm::T12) == Perm::Id);
    for (int k = 0; k < kNumPerms; ++k) {
        const Perm p = static_cast<Perm>(k);
        CHECK(compose(p, inverse(p)) == Perm::Id);
        CHECK(compose(inverse(p), p) == Perm::Id);
    }
}

TEST_CASE("composition convention matches the matrix product") {
    // tr(V_p V_q) = d^cycles(compose(p,q)) at d = 3.
    for (int a = 0; a < kNumPerms; ++a)
        for (int b = 0; b < kNumPerms; ++b) {
            const Perm p = static_cast<Perm>(a), q = static_cast<Perm>(b);
            const CMat prod = oracle::permutation_matrix(p, 3) * oracle::permutation_matrix(q, 3);
            const double want = std::pow(3.0, cycle_count(compose(p, q)));
            CHECK_THAT(prod.trace().real(), Catch::Matchers::WithinAbs(want, 1e-12));
        }
}

TEST_CASE("group-algebra convolution basics") {
    const GAElem d12 = GAElem::delta(Perm::T12);
    CHECK(ga_max_abs(ga_sub(ga_multiply(d12, d12), GAElem::delta(Perm::Id))) < 1e-15);

    GAElem a;
    a[Perm::T23] = cplx(0.5, 0.25);
    a[Perm::C123] = -1.0;
    CHECK(ga_max_abs(ga_sub(ga_multiply(GAElem::delta(Perm::Id), a), a)) < 1e-15);
    CHECK(ga_max_abs(ga_sub(ga_multiply(a, GAElem::delta(Perm::Id)), a)) < 1e-15);

    const GAElem rp = r_basis_elem(RIndex::Plus);
    CHECK(ga_max_abs(ga_sub(ga_multiply(rp, rp), rp)) < 1e-15);
}

TEST_CASE("ga_multiply agrees with the matrix product") {
    CounterRng rng(11, 0);
    for (int d = 2; d <= 3; ++d)
        for (int rep = 0; rep < 5; ++rep) {
            GAElem a, b;
            for (int k = 0; k < kNumPerms; ++k) {
                a.mu[k] = rng.complex_normal();
                b.mu[k] = rng.complex_normal();
            }
            const CMat lhs = oracle::ga_to_matrix(a, d) * oracle::ga_to_matrix(b, d);
            const CMat rhs = oracle::ga_to_matrix(ga_multiply(a, b), d);
            CHECK(lhs.max_abs_diff(rhs) < 1e-12);
        }
}

TEST_CASE("ga_trace weights permutations by cycle count") {
    CHECK(ga_trace(GAElem::delta(Perm::Id), 3).real() == 27.0);
    CHECK(ga_trace(GAElem::delta(Perm::T12), 3).real() == 9.0);
    CHECK(ga_trace(GAElem::delta(Perm::C123), 2).real() == 2.0);
    CHECK_THROWS_AS(ga_trace(GAElem::delta(Perm::Id), 1), std::invalid_argument);
}

TEST_CASE("basis elements satisfy the projector and Pauli relations") {
    const auto R = [](int k) { return r_basis_elem(static_cast<RIndex>(k)); };
    CHECK(ga_max_abs(ga_sub(ga_multiply(R(1), R(1)), R(1))) < 1e-15);
    CHECK(ga_max_abs(ga_multiply(R(0), R(1))) < 1e-15);
    GAElem unit = R(0) + R(1) + R(2);
    unit.mu[0] -= 1.0;
    CHECK(ga_max_abs(unit) < 1e-15);
    for (int i = 3; i < 6; ++i) {
        CHECK(ga_max_abs(ga_sub(ga_multiply(R(i), R(i)), R(2))) < 1e-15);
        CHECK(ga_max_abs(ga_multiply(R(i), R(0))) < 1e-15);
        CHECK(ga_max_abs(ga_multiply(R(i), R(1))) < 1e-15);
    }
    // cyclic products R1 R2 = i R3 etc.
    const cplx im(0.0, 1.0);
    CHECK(ga_max_abs(ga_sub(ga_multiply(R(3), R(4)), im * R(5))) < 1e-15);
    CHECK(ga_max_abs(ga_sub(ga_multiply(R(4), R(5)), im * R(3))) < 1e-15);
    CHECK(ga_max_abs(ga_sub(ga_multiply(R(5), R(3)), im * R(4))) < 1e-15);
}

TEST_CASE("ga_to_rpoint on reference elements") {
    GAElem mm;
    mm[Perm::Id] = 1.0 / 27.0;
    const auto [r, r0] = ga_to_rpoint(mm, 3);
    CHECK_THAT(r.r_plus, Catch::Matchers::WithinAbs(10.0 / 27.0, 1e-14));
    CHECK_THAT(r.r_minus, Catch::Matchers::WithinAbs(1.0 / 27.0, 1e-14));
    CHECK_THAT(r.r1, Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(r.r2, Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(r.r3, Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(r0, Catch::Matchers::WithinAbs(1.0 - r.r_plus - r.r_minus, 1e-12));

    // normalized symmetric projection: R+/10 at d=3 has r+ = 1
    const GAElem sym = cplx(1.0 / 10.0) * r_basis_elem(RIndex::Plus);
    const auto [rs, rs0] = ga_to_rpoint(sym, 3);
    CHECK_THAT(rs.r_plus, Catch::Matchers::WithinAbs(1.0, 1e-13));
    CHECK_THAT(rs0, Catch::Matchers::WithinAbs(0.0, 1e-13));

    // element with the coordinates of the fully distinct product |123>
    const CCoeffs c = r_to_c(RPoint{1.0 / 6, 1.0 / 6, 0, 0, 0}, 3);
    GAElem a = cplx(c.c_plus) * r_basis_elem(RIndex::Plus) + cplx(c.c_minus) * r_basis_elem(RIndex::Minus) +
               cplx(c.c0) * r_basis_elem(RIndex::Zero);
    const auto [ra, ra0] = ga_to_rpoint(a, 3);
    CHECK_THAT(ra.r_plus, Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-14));
    CHECK_THAT(ra.r_minus, Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-14));
    CHECK_THAT(ra0, Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-13));
}

TEST_CASE("ga_to_rpoint rejects bad input") {
    GAElem nh;
    nh[Perm::C123] = 1.0 / 27.0;  // mu((132)) stays 0: not Hermitian
    CHECK_THROWS_AS(ga_to_rpoint(nh, 3), std::invalid_argument);
    GAElem wrong;
    wrong[Perm::Id] = 1.0;  // trace 27, not 1
    CHECK_THROWS_AS(ga_to_rpoint(wrong, 3), std::invalid_argument);
}

TEST_CASE("ga_to_rpoint is linear and permutation conjugation preserves weights") {
    CounterRng rng(5, 1);
    for (int rep = 0; rep < 10; ++rep) {
        RPoint r = oracle::random_rpoint(rng, 3);
        const CCoeffs c = r_to_c(r, 3);
        GAElem a;
        const std::array<double, 6> coeff = {c.c_plus, c.c_minus, c.c0, c.c1, c.c2, c.c3};
        for (int k = 0; k < 6; ++k) a += cplx(coeff[k]) * r_basis_elem(static_cast<RIndex>(k));
        const auto [got, r0] = ga_to_rpoint(a, 3);
        CHECK(max_abs_diff(got, r) < 1e-12);
        CHECK_THAT(r0, Catch::Matchers::WithinAbs(r.r0(), 1e-12));
        for (int k = 1; k < kNumPerms; ++k) {
            const Perm p = static_cast<Perm>(k);
            const GAElem conj = ga_multiply(ga_multiply(GAElem::delta(p), a), GAElem::delta(inverse(p)));
            const auto [moved, m0] = ga_to_rpoint(conj, 3);
            CHECK_THAT(moved.r_plus, Catch::Matchers::WithinAbs(r.r_plus, 1e-12));
            CHECK_THAT(moved.r_minus, Catch::Matchers::WithinAbs(r.r_minus, 1e-12));
            CHECK_THAT(m0, Catch::Matchers::WithinAbs(r.r0(), 1e-12));
        }
    }
}

TEST_CASE("block decomposition of reference points") {
    const BlockForm b1 = rpoint_to_blockform(RPoint{1, 0, 0, 0, 0});
    CHECK(b1.w_plus == 1.0);
    CHECK(b1.w_minus == 0.0);
    CHECK(std::abs(b1.block[0]) + std::abs(b1.block[1]) + std::abs(b1.block[2]) + std::abs(b1.block[3]) == 0.0);

    const BlockForm ba = rpoint_to_blockform(RPoint{1.0 / 6, 1.0 / 6, 0, 0, 0});
    CHECK_THAT(ba.block[0].real(), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-15));
    CHECK_THAT(ba.block[3].real(), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-15));
    CHECK(std::abs(ba.block[1]) < 1e-15);
    CHECK_THAT(ba.block_trace(), Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-15));

    const BlockForm be = rpoint_to_blockform(RPoint{0, 0, -1, 0, 0});
    const auto [lo, hi] = be.block_eigenvalues();
    CHECK_THAT(lo, Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(hi, Catch::Matchers::WithinAbs(1.0, 1e-15));
}

TEST_CASE("block positivity matches the Bloch-ball condition") {
    CHECK(blockform_is_positive(rpoint_to_blockform(RPoint{0.5, 0.2, 0.1, 0.1, 0.1})));
    CHECK_FALSE(blockform_is_positive(rpoint_to_blockform(RPoint{0, 0, 1.1, 0, 0})));
    BlockForm neg = rpoint_to_blockform(RPoint{0.2, 0.2, 0, 0, 0});
    neg.w_plus = -0.1;
    CHECK_FALSE(blockform_is_positive(neg));
}

TEST_CASE("hermiticity test on the algebra") {
    GAElem h;
    h[Perm::C123] = cplx(0.2, 0.3);
    h[Perm::C132] = cplx(0.2, -0.3);
    h[Perm::T12] = 0.7;
    CHECK(h.is_hermitian(1e-12));
    h[Perm::T23] = cplx(0.0, 0.1);  // transpositions are self-inverse: imaginary part breaks it
    CHECK_FALSE(h.is_hermitian(1e-12));
}
