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


#include "lustab/random.h"

#include <cmath>
#include <numbers>

namespace lustab {

namespace {

Complex gaussian(std::mt19937_64 &rng) {
    std::normal_distribution<double> dist;
    double re = dist(rng);
    double im = dist(rng);
    return {re, im};
}

}  // namespace

PureState3 random_state(std::mt19937_64 &rng) {
    PureState3 s;
    for (auto &a : s.amps) {
        a = gaussian(rng);
    }
    return normalize(s);
}

C2x2 random_su2(std::mt19937_64 &rng) {
    // A normalized Gaussian 4-vector is uniform on S^3, i.e. Haar on SU(2).
    Complex a = gaussian(rng);
    Complex b = gaussian(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    return make_c2x2(a, -std::conj(b), b, std::conj(a));
}

LocalUnitary random_local_unitary(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    LocalUnitary g;
    g.phase = angle(rng);
    g.u = random_su2(rng);
    g.v = random_su2(rng);
    g.w = random_su2(rng);
    return g;
}

C2x2 random_pair_state(std::mt19937_64 &rng) {
    C2x2 t;
    for (auto &e : t.entries) {
        e = gaussian(rng);
    }
    return Complex(1 / frobenius_norm(t)) * t;
}

}  // namespace lustab
