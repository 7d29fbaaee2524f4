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

#include <algorithm>
#include <cmath>

#include "lustab/errors.h"

namespace lustab {

namespace {

C2x2 from_pauli(double x, double y, double z) {
    const auto &s = pauli();
    return Complex(x) * s[0] + Complex(y) * s[1] + Complex(z) * s[2];
}

std::array<double, 3> to_pauli(const C2x2 &m) {
    // Coefficients are tr(m s_k) / 2, which are real for hermitian m.
    const auto &s = pauli();
    std::array<double, 3> result{};
    for (size_t k = 0; k < 3; k++) {
        result[k] = 0.5 * trace(m * s[k]).real();
    }
    return result;
}

StabilizerAlgebra kernel_to_algebra(const RMatrix &m, double tol) {
    Nullspace ns = nullspace(m, tol);
    StabilizerAlgebra result;
    result.rank = (int)ns.rank;
    result.dim = (int)(m.cols() - ns.rank);
    result.singulars = ns.singulars;
    for (const auto &k : ns.kernel_basis) {
        std::array<double, 10> coords{};
        std::copy(k.begin(), k.end(), coords.begin());
        result.basis.push_back(LieElement::from_coords(coords));
        auto image = m.apply(k);
        double n = 0;
        for (double v : image) {
            n += v * v;
        }
        result.residual = std::max(result.residual, std::sqrt(n));
    }
    return result;
}

}  // namespace

LieElement LieElement::from_coords(std::span<const double> coords) {
    if (coords.size() != 10 && coords.size() != 7) {
        throw std::invalid_argument("LieElement needs 10 (or 7 for two qubits) coordinates");
    }
    LieElement x;
    x.phi = coords[0];
    x.a = from_pauli(coords[1], coords[2], coords[3]);
    x.b = from_pauli(coords[4], coords[5], coords[6]);
    if (coords.size() == 10) {
        x.c = from_pauli(coords[7], coords[8], coords[9]);
    }
    return x;
}

std::array<double, 10> LieElement::coords() const {
    std::array<double, 10> result{};
    result[0] = phi;
    auto pa = to_pauli(a);
    auto pb = to_pauli(b);
    auto pc = to_pauli(c);
    std::copy(pa.begin(), pa.end(), result.begin() + 1);
    std::copy(pb.begin(), pb.end(), result.begin() + 4);
    std::copy(pc.begin(), pc.end(), result.begin() + 7);
    return result;
}

LocalUnitary exponentiate(const LieElement &x, double eps) {
    auto scaled = [&](const C2x2 &m) {
        auto p = to_pauli(m);
        return su2_exp({eps * p[0], eps * p[1], eps * p[2]});
    };
    return LocalUnitary{eps * x.phi, scaled(x.a), scaled(x.b), scaled(x.c)};
}

LieElement conjugate(const LieElement &x, const LocalUnitary &g) {
    return LieElement{x.phi, g.u * x.a * adjoint(g.u), g.v * x.b * adjoint(g.v), g.w * x.c * adjoint(g.w)};
}

PureState3 act(const LieElement &x, const PureState3 &s) {
    PureState3 result;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                Complex v = x.phi * s.at(i, j, k);
                for (size_t m = 0; m < 2; m++) {
                    v += x.a(i, m) * s.at(m, j, k) + x.b(j, m) * s.at(i, m, k) + x.c(k, m) * s.at(i, j, m);
                }
                result.at(i, j, k) = v;
            }
        }
    }
    return result;
}

RMatrix stabilizer_system(const PureState3 &s) {
    RMatrix m(16, 10);
    for (size_t col = 0; col < 10; col++) {
        std::array<double, 10> unit{};
        unit[col] = 1;
        PureState3 image = act(LieElement::from_coords(unit), s);
        for (size_t k = 0; k < 8; k++) {
            m(2 * k, col) = image.amps[k].real();
            m(2 * k + 1, col) = image.amps[k].imag();
        }
    }
    return m;
}

StabilizerAlgebra solve(const PureState3 &s, double tol) {
    require_normalized(s);
    return kernel_to_algebra(stabilizer_system(s), tol);
}

RMatrix stabilizer_system2(const C2x2 &t) {
    RMatrix m(8, 7);
    for (size_t col = 0; col < 7; col++) {
        std::array<double, 7> unit{};
        unit[col] = 1;
        LieElement x = LieElement::from_coords(unit);
        C2x2 image = Complex(x.phi) * t + x.a * t + t * transpose(x.b);
        for (size_t k = 0; k < 4; k++) {
            m(2 * k, col) = image.entries[k].real();
            m(2 * k + 1, col) = image.entries[k].imag();
        }
    }
    return m;
}

StabilizerAlgebra solve2(const C2x2 &t, double tol) {
    double n = frobenius_norm(t);
    if (!(std::abs(n - 1) <= 1e-9)) {
        throw NotNormalized("two-qubit coefficient matrix is not normalized");
    }
    return kernel_to_algebra(stabilizer_system2(t), tol);
}

bool verify_element(const LocalUnitary &g, const PureState3 &s, double tol) {
    return distance(apply(g, s), s) <= tol;
}

bool conjugation_check(const PureState3 &s, const LocalUnitary &g) {
    return solve(s).dim == solve(apply(g, s)).dim;
}

}  // namespace lustab
