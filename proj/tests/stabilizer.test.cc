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


#include "lustab/stabilizer.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "lustab/errors.h"
#include "lustab/random.h"
#include "test_util.h"

using namespace lustab;
using namespace lustab::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct DimCase {
    const char *name;
    PureState3 state;
    int dim;
};

std::vector<DimCase> dim_table() {
    return {
        {"product", product_state(), 3},
        {"bystander", bystander_state(0.3), 2},
        {"bystander-max", bystander_state(kPi / 4), 4},
        {"slice", slice_state(0.8, 0.5, Complex(0.1, 0.3)), 1},
        {"slice-ridge", slice_ridge_state(0.6, Complex(0, 0.8)), 1},
        {"ghz", ghz_state(0.8, 0.6), 2},
        {"true-ghz", true_ghz_state(), 2},
        {"beechnut", beechnut_state(0.5, Complex(0.2, 0.6), 0.7), 1},
        {"w", beechnut_state(1, 1, 1), 1},
        {"semigeneric", semigeneric_state(1, 0.6, 0.8, Complex(0.3, 0.2), 0.7), 0},
    };
}

}  // namespace

TEST(stabilizer, lie_element_coords_roundtrip) {
    std::vector<double> coords{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    LieElement x = LieElement::from_coords(coords);
    EXPECT_EQ(x.a, make_c2x2(0.4, Complex(0.2, -0.3), Complex(0.2, 0.3), -0.4));
    auto back = x.coords();
    for (size_t k = 0; k < 10; k++) {
        EXPECT_DOUBLE_EQ(back[k], coords[k]);
    }
}

TEST(stabilizer, act_matches_derivative_of_exponential) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; n++) {
        PureState3 s = random_state(rng);
        std::vector<double> coords(10);
        for (auto &c : coords) {
            c = uniform(rng, -1, 1);
        }
        LieElement x = LieElement::from_coords(coords);
        double h = 1e-6;
        PureState3 plus = apply(exponentiate(x, h), s);
        PureState3 minus = apply(exponentiate(x, -h), s);
        PureState3 expected = act(x, s);
        for (size_t k = 0; k < 8; k++) {
            Complex derivative = (plus.amps[k] - minus.amps[k]) / (2 * h);
            ASSERT_LT(std::abs(derivative - kI * expected.amps[k]), 1e-8);
        }
    }
}

TEST(stabilizer, dimension_table) {
    for (const auto &c : dim_table()) {
        StabilizerAlgebra alg = solve(c.state);
        EXPECT_EQ(alg.dim, c.dim) << c.name;
        EXPECT_EQ(alg.rank + alg.dim, 10) << c.name;
        EXPECT_LT(alg.residual, 1e-10) << c.name;
    }
}

TEST(stabilizer, kernel_elements_exponentiate_to_stabilizers) {
    for (const auto &c : dim_table()) {
        StabilizerAlgebra alg = solve(c.state);
        for (const auto &x : alg.basis) {
            for (double eps : {1e-3, 0.5, 2.0}) {
                EXPECT_TRUE(verify_element(exponentiate(x, eps), c.state, 1e-9)) << c.name << " eps=" << eps;
            }
        }
    }
}

TEST(stabilizer, random_states_are_generic) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 1000; n++) {
        StabilizerAlgebra alg = solve(random_state(rng));
        ASSERT_EQ(alg.dim, 0);
        ASSERT_EQ(alg.rank, 10);
    }
}

TEST(stabilizer, dimension_invariant_under_local_unitaries) {
    std::mt19937_64 rng(3);
    auto table = dim_table();
    for (int n = 0; n < 200; n++) {
        const auto &c = table[n % table.size()];
        LocalUnitary g = random_local_unitary(rng);
        ASSERT_EQ(solve(apply(g, c.state)).dim, c.dim) << c.name;
        ASSERT_TRUE(conjugation_check(c.state, g)) << c.name;
    }
}

TEST(stabilizer, conjugated_kernel_fixes_moved_state) {
    std::mt19937_64 rng(4);
    for (const auto &c : dim_table()) {
        LocalUnitary g = random_local_unitary(rng);
        PureState3 moved = apply(g, c.state);
        for (const auto &x : solve(c.state).basis) {
            PureState3 image = act(conjugate(x, g), moved);
            EXPECT_LT(std::sqrt(norm_sq(image)), 1e-9) << c.name;
        }
    }
}

TEST(stabilizer, solve_requires_normalization) {
    EXPECT_THROW(solve(PureState3{}), NotNormalized);
    PureState3 s;
    s.at(0, 0, 0) = 2;
    EXPECT_THROW(solve(s), NotNormalized);
    EXPECT_THROW(solve2(C2x2::identity()), NotNormalized);
}

TEST(stabilizer, two_qubit_table) {
    double r = 1 / std::sqrt(2.0);
    EXPECT_EQ(solve2(C2x2::diagonal({0.8, 0.6})).dim, 1);
    EXPECT_EQ(solve2(C2x2::diagonal({1, 0})).dim, 2);
    EXPECT_EQ(solve2(C2x2::diagonal({r, r})).dim, 3);
    EXPECT_EQ(solve2(make_c2x2(0, r, -r, 0)).dim, 3);

    std::mt19937_64 rng(5);
    for (int n = 0; n < 100; n++) {
        StabilizerAlgebra alg = solve2(random_pair_state(rng));
        ASSERT_EQ(alg.dim, 1);
        ASSERT_EQ(alg.rank + alg.dim, 7);
    }
}

TEST(stabilizer, generator_families_fix_their_states) {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 20; n++) {
        for (const auto &c : generator_cases(rng)) {
            ASSERT_NO_THROW(validate(c.g)) << c.family;
            ASSERT_TRUE(verify_element(c.g, c.state)) << c.family << " residual " << distance(apply(c.g, c.state), c.state);
        }
    }
}

TEST(stabilizer, antidiagonal_ghz_set_needs_quarter_turn_sum) {
    PureState3 s = true_ghz_state();
    double theta = 0.4;
    double kappa = -1.1;
    LocalUnitary zero_sum{kPi / 2, isy() * expz(theta), isy() * expz(kappa), isy() * expz(-theta - kappa)};
    EXPECT_FALSE(verify_element(zero_sum, s));
    LocalUnitary quarter_sum{kPi / 2, isy() * expz(theta), isy() * expz(kappa), isy() * expz(kPi / 2 - theta - kappa)};
    EXPECT_TRUE(verify_element(quarter_sum, s));
}

TEST(stabilizer, verify_element_rejects_non_stabilizers) {
    PureState3 s = ghz_state(0.8, 0.6);
    LocalUnitary g{0, expz(0.3), expz(0.3), expz(0.3)};
    EXPECT_FALSE(verify_element(g, s));
    LocalUnitary h{0, expz(0.3), expz(-0.1), expz(-0.2)};
    EXPECT_TRUE(verify_element(h, s));
}

TEST(stabilizer, singular_values_descending) {
    std::mt19937_64 rng(7);
    StabilizerAlgebra alg = solve(random_state(rng));
    ASSERT_EQ(alg.singulars.size(), 10u);
    for (size_t k = 1; k < 10; k++) {
        EXPECT_GE(alg.singulars[k - 1], alg.singulars[k]);
    }
}
