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


#include "pencil.h"

#include <cmath>

namespace lustab::internal {

C2x2 pencil(const TMatrixPair &t, const Vec2 &x) {
    return x[0] * t.t1 + x[1] * t.t2;
}

C2x2 det_form(const TMatrixPair &t) {
    const C2x2 &a = t.t1;
    const C2x2 &b = t.t2;
    Complex mixed = 0.5 * (a(0, 0) * b(1, 1) + b(0, 0) * a(1, 1) - a(0, 1) * b(1, 0) - b(0, 1) * a(1, 0));
    return make_c2x2(det(a), mixed, mixed, det(b));
}

std::vector<Vec2> form_roots(const C2x2 &q) {
    if (frobenius_norm(q) == 0) {
        return {};
    }
    bool flip = std::abs(q(0, 0)) < std::abs(q(1, 1));
    Complex a = flip ? q(1, 1) : q(0, 0);
    Complex c = flip ? q(0, 0) : q(1, 1);
    Complex b = q(0, 1);
    if (a == Complex{}) {
        // Both squares vanish: the form is 2 q12 x0 x1.
        return {Vec2{1, 0}, Vec2{0, 1}};
    }
    // Roots of a z^2 + 2 b z + c = 0, paired to avoid cancellation.
    Complex root = std::sqrt(b * b - a * c);
    if ((std::conj(b) * root).real() < 0) {
        root = -root;
    }
    Complex big = -(b + root);
    std::vector<Vec2> result;
    for (Complex z : {big / a, big == Complex{} ? Complex{} : c / big}) {
        Vec2 v = flip ? Vec2{1, z} : Vec2{z, 1};
        double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        result.push_back({v[0] / n, v[1] / n});
    }
    return result;
}

}  // namespace lustab::internal
