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


#ifndef LUSTAB_INVARIANTS_H
#define LUSTAB_INVARIANTS_H

#include <array>
#include <variant>
#include <vector>

#include "lustab/linalg.h"
#include "lustab/state.h"

namespace lustab {

/// Partial trace of |s><s| keeping one particle (1-based label).
C2x2 reduce1(const PureState3 &s, int particle);

/// Partial trace keeping particles a < b; a is the slow index of the 4x4 matrix.
C4x4 reduce2(const PureState3 &s, int a, int b);

struct ReducedDensity {
    std::vector<int> subsystem;  // sorted 1-based labels, one or two of them
    std::variant<C2x2, C4x4> matrix;
};

/// Keeps the listed particles (one or two distinct labels, any order).
ReducedDensity reduce(const PureState3 &s, std::vector<int> subsystem);

/// Von Neumann entropy -sum l ln l in nats. Throws NotDensity if an eigenvalue leaves [-1e-10, 1 + 1e-10].
double entropy(const C2x2 &rho);
double entropy(const C4x4 &rho);
double entropy(const ReducedDensity &rho);

/// Pair tangle of particles a and b. Throws NotNormalized.
double two_tangle(const PureState3 &s, int a, int b);

/// The same pair tangle computed from the dense 4x4 spectrum of rho (rho - rho_a x 1 - 1 x rho_b + 1).
/// Slower and less accurate near zero; kept as an independent check.
double two_tangle_dense(const PureState3 &s, int a, int b);

/// Residual tangle 4 det rho_1 - tau_12 - tau_13. Throws NotNormalized.
double three_tangle(const PureState3 &s);

struct TangleSet {
    double tau12 = 0;
    double tau13 = 0;
    double tau23 = 0;
    double tau123 = 0;
    /// Largest difference between the residual tangle computed with particle 1, 2 or 3 singled out.
    double tau123_discrepancy = 0;
};

/// Throws NotNormalized.
TangleSet tangles(const PureState3 &s);

/// (norm^2, tr rho_1^2, tr rho_2^2, tr rho_3^2, tr[(rho_1 x rho_2) rho_12], tau_123).
/// Defined for unnormalized states as well; each entry is homogeneous in the amplitudes.
using InvariantVector = std::array<double, 6>;
InvariantVector invariant_vector(const PureState3 &s);

struct JacobianRank {
    int rank = 0;
    std::vector<double> singulars;  // six values, descending
};

/// Transposed central difference Jacobian: entry (2 m + part, i) is the derivative of invariant i
/// with respect to the real (part 0) or imaginary (part 1) component of amplitude m.
RMatrix invariant_jacobian(const PureState3 &s, double step = 1e-5);

/// Rank of the 6 x 16 finite difference Jacobian of invariant_vector with respect to the
/// real and imaginary parts of the amplitudes, cut at tol * sigma_max.
JacobianRank jacobian_rank(const PureState3 &s, double tol = 1e-6, double step = 1e-5);

}  // namespace lustab

#endif
