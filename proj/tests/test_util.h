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


#ifndef LUSTAB_TESTS_TEST_UTIL_H
#define LUSTAB_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lustab/random.h"
#include "lustab/state.h"

namespace lustab::testing {

inline constexpr Complex kI{0, 1};

/// exp(i theta sigma_3), written out directly.
inline C2x2 expz(double theta) {
    return C2x2::diagonal({std::polar(1.0, theta), std::polar(1.0, -theta)});
}

/// i sigma_2.
inline C2x2 isy() {
    return make_c2x2(0, 1, -1, 0);
}

/// [[0, e^{ia}], [-e^{-ia}, 0]].
inline C2x2 antidiag(double a) {
    return make_c2x2(0, std::polar(1.0, a), -std::polar(1.0, -a), 0);
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Complex number with modulus in [0.2, 1] and uniform phase.
inline Complex nonzero_complex(std::mt19937_64 &rng) {
    return std::polar(uniform(rng, 0.2, 1.0), uniform(rng, -std::numbers::pi, std::numbers::pi));
}

/// Cayley hyperdeterminant of the 2x2x2 amplitude array.
inline Complex hyperdeterminant(const PureState3 &s) {
    auto a = [&](size_t i, size_t j, size_t k) { return s.at(i, j, k); };
    Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                 a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return d1 - 2.0 * d2 + 4.0 * d3;
}

/// A state together with a candidate stabilizer element.
struct GeneratorCase {
    std::string family;
    PureState3 state;
    LocalUnitary g;
};

inline double sign_phase(int eps) {
    return eps > 0 ? 0 : std::numbers::pi;
}

/// One instance of every listed finite stabilizer family, at random parameters.
/// The antidiagonal true-GHZ set uses the angle sum pi/2 (for phase +i) or -pi/2 (for -i), and the
/// T-form beechnut set uses (e^{i phi}, e^{i phi s3}, e^{-i phi s3}, e^{-i phi s3}); these are the
/// constraints under which the sets fix the states.
inline std::vector<GeneratorCase> generator_cases(std::mt19937_64 &rng) {
    constexpr double pi = std::numbers::pi;
    std::vector<GeneratorCase> out;
    int e1 = uniform(rng, 0, 1) < 0.5 ? 1 : -1;
    int e2 = uniform(rng, 0, 1) < 0.5 ? 1 : -1;
    double theta = uniform(rng, -pi, pi);
    double kappa = uniform(rng, -pi, pi);
    double phi = uniform(rng, -pi, pi);

    {
        // Slice in the T-form T_1 = diag(p, 0), T_2 = [[0, 0], [bc, bd]].
        Complex p = uniform(rng, 0.2, 1.0);
        Complex b = nonzero_complex(rng);
        Complex c = nonzero_complex(rng);
        Complex d = nonzero_complex(rng);
        PureState3 s = normalize(unpartition({C2x2::diagonal({p, 0}), make_c2x2(0, 0, b * c, b * d), 1}));
        out.push_back({"straightslice", s,
                       {sign_phase(e1), expz(theta), Complex(e2) * expz(-theta), Complex(e1 * e2) * C2x2::identity()}});
    }
    {
        PureState3 s = slice_state(nonzero_complex(rng), nonzero_complex(rng), nonzero_complex(rng));
        out.push_back({"slicesum", s,
                       {sign_phase(e1), expz(theta), Complex(e2) * expz(-theta), Complex(e1 * e2) * C2x2::identity()}});
    }
    {
        // Slice ridge in T-form: p^2 = |b|^2 (|c|^2 + |d|^2).
        Complex b = nonzero_complex(rng);
        Complex c = nonzero_complex(rng);
        Complex d = nonzero_complex(rng);
        double p = std::abs(b) * std::sqrt(std::norm(c) + std::norm(d));
        PureState3 s = normalize(unpartition({C2x2::diagonal({p, 0}), make_c2x2(0, 0, b * c, b * d), 1}));
        double chi = std::arg(b * c);
        C2x2 w = make_c2x2(-kI * std::abs(b * c) / p, -kI * std::conj(b * d) / p * std::polar(1.0, chi),
                           -kI * b * d / p * std::polar(1.0, -chi), kI * std::abs(b * c) / p);
        out.push_back({"sliceflip", s,
                       {pi / 2 + sign_phase(e1), antidiag(theta), Complex(e2) * antidiag(-(theta + chi)),
                        Complex(e1 * e2) * w}});
    }
    {
        double gamma = uniform(rng, -pi / 2 + 0.1, pi / 2 - 0.1);
        PureState3 s = lps_state(pi / 4, 0, std::cos(gamma), 0, std::sin(gamma));
        C2x2 w = Complex(-e1 * e2) * kI * make_c2x2(std::sin(gamma), std::cos(gamma), std::cos(gamma), -std::sin(gamma));
        out.push_back({"ridge-lps", s, {pi / 2 + sign_phase(e1), antidiag(theta), Complex(e2) * antidiag(-theta), w}});
    }
    {
        PureState3 s = ghz_state(uniform(rng, 0.2, 1), uniform(rng, 0.2, 1));
        double sum = e1 > 0 ? 0 : pi;
        out.push_back({"ghzgen", s, {sign_phase(e1), expz(theta), expz(kappa), expz(sum - theta - kappa)}});
    }
    {
        double sum = e1 > 0 ? pi / 2 : -pi / 2;
        out.push_back({"true-ghz-antidiagonal", true_ghz_state(),
                       {e1 * pi / 2, isy() * expz(theta), isy() * expz(kappa), isy() * expz(sum - theta - kappa)}});
    }
    {
        Complex omega = nonzero_complex(rng);
        Complex b = nonzero_complex(rng);
        Complex c = nonzero_complex(rng);
        PureState3 s = normalize(unpartition({make_c2x2(omega * c, 0, 0, 0), make_c2x2(0, b, c, 0), 1}));
        out.push_back({"beechstab", s, {phi, expz(phi), expz(-phi), expz(-phi)}});
    }
    {
        PureState3 s = beechnut_state(nonzero_complex(rng), nonzero_complex(rng), nonzero_complex(rng));
        out.push_back({"beechnut", s, {phi, expz(phi), expz(phi), expz(phi)}});
    }
    {
        PureState3 s = bystander_state(uniform(rng, 0.05, pi / 4 - 0.05));
        out.push_back({"bystander", s, {theta, expz(-theta), expz(kappa), expz(-kappa)}});
    }
    {
        C2x2 v = random_su2(rng);
        out.push_back({"bystander-max", bystander_state(pi / 4), {theta, expz(-theta), v, conj(v)}});
    }
    {
        double eta = uniform(rng, -pi, pi);
        out.push_back({"product", product_state(), {-theta - kappa - eta, expz(theta), expz(kappa), expz(eta)}});
    }
    return out;
}

}  // namespace lustab::testing

#endif
