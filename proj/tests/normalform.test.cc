// Copyright 2026 The lustab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lustab/normalform.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "lustab/errors.h"
#include "lustab/invariants.h"
#include "lustab/random.h"
#include "test_util.h"

using namespace lustab;
using namespace lustab::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Params {
    double alpha;
    double beta;
    double t;
    double s;
    Complex z;
};

Params random_params(std::mt19937_64 &rng) {
    Params p;
    p.alpha = uniform(rng, 0.1, kPi / 4 - 0.1);
    p.beta = uniform(rng, 0.1, kPi / 4 - 0.1);
    p.t = uniform(rng, 0.1, 0.6);
    p.s = uniform(rng, 0.1, 0.6);
    p.z = std::polar(std::sqrt(1 - p.t * p.t - p.s * p.s), uniform(rng, -kPi, kPi));
    return p;
}

PureState3 from_params(const Params &p) {
    return lps_state(p.alpha, p.beta, p.t, p.s, p.z);
}

void expect_same_orbit_coordinates(const LpsForm &a, const LpsForm &b, double tol) {
    EXPECT_NEAR(a.alpha, b.alpha, tol);
    EXPECT_NEAR(a.beta, b.beta, tol);
    EXPECT_NEAR(a.t, b.t, tol);
    EXPECT_NEAR(a.s, b.s, tol);
    EXPECT_NEAR(std::abs(a.z), std::abs(b.z), tol);
}

}  // namespace

TEST(normalform, schmidt2_reconstructs) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; n++) {
        C2x2 t = random_pair_state(rng);
        Schmidt2 d = schmidt2(t);
        ASSERT_GE(d.p, d.q);
        ASSERT_GE(d.q, 0);
        ASSERT_LT(distance(d.x * C2x2::diagonal({d.p, d.q}) * transpose(d.y), t), 1e-14);
        ASSERT_LT(distance(adjoint(d.x) * d.x, C2x2::identity()), 1e-14);
        ASSERT_LT(distance(adjoint(d.y) * d.y, C2x2::identity()), 1e-14);
    }
    Schmidt2 bell = schmidt2(make_c2x2(0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0));
    EXPECT_NEAR(bell.p, 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(bell.q, 1 / std::sqrt(2.0), 1e-15);
}

TEST(normalform, examples) {
    LpsForm product = lps(product_state());
    EXPECT_NEAR(product.alpha, 0, 1e-12);
    EXPECT_NEAR(product.beta, 0, 1e-12);

    LpsForm ghz = lps(ghz_state(0.8, 0.6));
    EXPECT_NEAR(ghz.alpha, std::atan2(0.6, 0.8), 1e-12);
    EXPECT_NEAR(ghz.beta, 0, 1e-12);
    EXPECT_NEAR(ghz.t, 1, 1e-12);

    LpsForm true_ghz = lps(true_ghz_state());
    EXPECT_NEAR(true_ghz.alpha, kPi / 4, 1e-12);
    EXPECT_NEAR(true_ghz.beta, 0, 1e-12);

    LpsForm byst = lps(bystander_state(0.3));
    EXPECT_NEAR(byst.alpha, 0, 1e-12);
    EXPECT_NEAR(byst.beta, 0.3, 1e-12);

    LpsForm bell = lps(bystander_state(kPi / 4));
    EXPECT_NEAR(bell.beta, kPi / 4, 1e-12);
}

TEST(normalform, parameters_roundtrip) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 100; n++) {
        Params p = random_params(rng);
        LpsForm f = lps(from_params(p));
        ASSERT_NEAR(f.alpha, p.alpha, 1e-9);
        ASSERT_NEAR(f.beta, p.beta, 1e-9);
        ASSERT_NEAR(f.t, p.t, 1e-9);
        ASSERT_NEAR(f.s, p.s, 1e-9);
        ASSERT_LT(std::abs(f.z - p.z), 1e-9);
    }
}

TEST(normalform, group_element_maps_to_canonical_state) {
    std::mt19937_64 rng(3);
    std::vector<PureState3> states{product_state(),         bystander_state(0.3),       bystander_state(kPi / 4),
                                   slice_state(0.8, 0.5, 0.3), slice_ridge_state(0.6, 0.8), ghz_state(0.8, 0.6),
                                   true_ghz_state(),        beechnut_state(0.5, 0.6, 0.7), beechnut_state(1, 1, 1)};
    for (int n = 0; n < 50; n++) {
        states.push_back(random_state(rng));
    }
    for (const auto &s : states) {
        PureState3 moved = apply(random_local_unitary(rng), s);
        LpsForm f = lps(moved);
        ASSERT_NO_THROW(validate(f.g));
        ASSERT_LT(distance(apply(f.g, moved), reconstruct(f)), 1e-9);
        InvariantVector a = invariant_vector(s);
        InvariantVector b = invariant_vector(reconstruct(f));
        for (size_t k = 0; k < 6; k++) {
            ASSERT_NEAR(a[k], b[k], 1e-9);
        }
    }
}

TEST(normalform, agrees_across_local_unitary_images) {
    std::mt19937_64 rng(4);
    std::vector<PureState3> states{ghz_state(0.8, 0.6), slice_state(0.8, 0.5, 0.3), beechnut_state(0.5, 0.6, 0.7),
                                   bystander_state(0.3), true_ghz_state()};
    for (int n = 0; n < 10; n++) {
        states.push_back(random_state(rng));
    }
    for (const auto &s : states) {
        LpsForm base = lps(s);
        for (int k = 0; k < 20; k++) {
            expect_same_orbit_coordinates(lps(apply(random_local_unitary(rng), s)), base, 1e-7);
        }
    }
}

TEST(normalform, idempotent) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 50; n++) {
        LpsForm f = lps(random_state(rng));
        LpsForm again = lps(reconstruct(f));
        expect_same_orbit_coordinates(again, f, 1e-9);
        ASSERT_LT(std::abs(again.z - f.z), 1e-9);
    }
}

TEST(normalform, parameters_are_independent_orbit_coordinates) {
    // Invariants as functions of (alpha, beta, t, s, arg z) with |z| fixed by normalization.
    std::mt19937_64 rng(6);
    for (int n = 0; n < 20; n++) {
        Params p = random_params(rng);
        std::array<double, 5> x{p.alpha, p.beta, p.t, p.s, std::arg(p.z)};
        auto eval = [](const std::array<double, 5> &v) {
            double mod = std::sqrt(1 - v[2] * v[2] - v[3] * v[3]);
            return invariant_vector(lps_state(v[0], v[1], v[2], v[3], std::polar(mod, v[4])));
        };
        RMatrix jt(5, 6);
        double h = 1e-6;
        for (size_t k = 0; k < 5; k++) {
            auto plus = x;
            auto minus = x;
            plus[k] += h;
            minus[k] -= h;
            auto fp = eval(plus);
            auto fm = eval(minus);
            for (size_t i = 0; i < 6; i++) {
                jt(k, i) = (fp[i] - fm[i]) / (2 * h);
            }
        }
        ASSERT_EQ(nullspace(jt, 1e-6).rank, 5u);
    }
}

TEST(normalform, reconstruct_validates) {
    LpsForm f;
    f.alpha = 0.3;
    f.beta = 0.2;
    EXPECT_LT(distance(reconstruct(f), lps_state(0.3, 0.2, 1, 0, 0)), 1e-15);
    f.t = 0.5;
    EXPECT_THROW(reconstruct(f), BadParams);
    f.t = 1;
    f.beta = 1.0;
    EXPECT_THROW(reconstruct(f), BadParams);
}

TEST(normalform, requires_normalization) {
    PureState3 s;
    s.at(0, 0, 0) = 2;
    EXPECT_THROW(lps(s), NotNormalized);
}
