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


#ifndef LUSTAB_STABILIZER_H
#define LUSTAB_STABILIZER_H

#include <array>
#include <vector>

#include "lustab/linalg.h"
#include "lustab/state.h"

namespace lustab {

/// Infinitesimal element (phi, A, B, C) of the Lie algebra of U(1) x SU(2)^3.
/// A, B, C are hermitian and traceless.
struct LieElement {
    double phi = 0;
    C2x2 a;
    C2x2 b;
    C2x2 c;

    /// Coordinates (phi, a1, a2, a3, b1, b2, b3, c1, c2, c3) with A = a1 s1 + a2 s2 + a3 s3.
    static LieElement from_coords(std::span<const double> coords);
    std::array<double, 10> coords() const;
};

/// exp(i eps (phi + A x 1 x 1 + 1 x B x 1 + 1 x 1 x C)) as a group element.
LocalUnitary exponentiate(const LieElement &x, double eps);

/// Conjugates x by g: the algebra element acting on apply(g, s) that corresponds to x acting on s.
LieElement conjugate(const LieElement &x, const LocalUnitary &g);

/// Infinitesimal action (phi + A x 1 x 1 + 1 x B x 1 + 1 x 1 x C) t.
PureState3 act(const LieElement &x, const PureState3 &s);

struct StabilizerAlgebra {
    int dim = 0;
    std::vector<LieElement> basis;
    /// Largest action norm over the basis elements.
    double residual = 0;
    /// Rank of the realified system, i.e. the orbit tangent dimension.
    int rank = 0;
    /// Singular values of the realified system, descending.
    std::vector<double> singulars;
};

/// The 16 x 10 real matrix mapping algebra coordinates to the change of the amplitudes.
/// Rows alternate (real, imaginary) per amplitude.
RMatrix stabilizer_system(const PureState3 &s);

/// Kernel of the infinitesimal stabilizer equations. Throws NotNormalized.
StabilizerAlgebra solve(const PureState3 &s, double tol = 1e-8);

/// Two-qubit analogue: parameters (theta, X, Y) acting by theta T + X T + T Y^T.
RMatrix stabilizer_system2(const C2x2 &t);

/// Kernel for a two-qubit coefficient matrix; basis elements use phi, a (X) and b (Y), c = 0.
StabilizerAlgebra solve2(const C2x2 &t, double tol = 1e-8);

/// True iff ||apply(g, s) - s|| <= tol.
bool verify_element(const LocalUnitary &g, const PureState3 &s, double tol = 1e-10);

/// True iff s and apply(g, s) have stabilizers of the same dimension.
bool conjugation_check(const PureState3 &s, const LocalUnitary &g);

}  // namespace lustab

#endif
