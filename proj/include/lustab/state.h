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

#ifndef LUSTAB_STATE_H
#define LUSTAB_STATE_H

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lustab/linalg.h"

namespace lustab {

/// Pure state of three qubits: amplitudes t_ijk with i (particle 1) the slowest index.
/// Index value 0 is spin up, 1 is spin down.
struct PureState3 {
    std::array<Complex, 8> amps{};

    static constexpr size_t index(size_t i, size_t j, size_t k) {
        return 4 * i + 2 * j + k;
    }
    Complex &at(size_t i, size_t j, size_t k) {
        return amps[index(i, j, k)];
    }
    const Complex &at(size_t i, size_t j, size_t k) const {
        return amps[index(i, j, k)];
    }

    static PureState3 basis(size_t i, size_t j, size_t k) {
        PureState3 s;
        s.at(i, j, k) = 1;
        return s;
    }

    bool operator==(const PureState3 &other) const = default;
};

double norm_sq(const PureState3 &s);
PureState3 normalize(const PureState3 &s);
/// Euclidean distance between amplitude vectors.
double distance(const PureState3 &a, const PureState3 &b);
/// Throws NotNormalized unless |norm_sq - 1| <= tol.
void require_normalized(const PureState3 &s, double tol = 1e-9);

/// The pair (T_1, T_2) obtained by fixing the index of one particle.
/// Rows and columns of each matrix are the remaining particles in ascending order.
struct TMatrixPair {
    C2x2 t1;
    C2x2 t2;
    int axis;  // 1, 2 or 3
};

TMatrixPair partition(const PureState3 &s, int axis);
PureState3 unpartition(const TMatrixPair &pair);

/// Element (e^{i phase}, u, v, w) of U(1) x SU(2)^3.
struct LocalUnitary {
    double phase = 0;
    C2x2 u = C2x2::identity();
    C2x2 v = C2x2::identity();
    C2x2 w = C2x2::identity();

    static LocalUnitary identity() {
        return {};
    }
};

/// Throws NotUnitary unless u, v, w are special unitary to 1e-10.
void validate(const LocalUnitary &g);
/// Group product: apply(compose(g2, g1), s) == apply(g2, apply(g1, s)).
LocalUnitary compose(const LocalUnitary &g2, const LocalUnitary &g1);
PureState3 apply(const LocalUnitary &g, const PureState3 &s);

/// Applies arbitrary 2x2 matrices factor-wise with no validation.
PureState3 apply_local(const C2x2 &u, const C2x2 &v, const C2x2 &w, const PureState3 &s);

/// Writes a U(2) matrix as e^{i angle} * S with S in SU(2).
struct Su2Split {
    double angle;
    C2x2 special;
};
Su2Split split_u2(const C2x2 &m);

/// Bijection of particle labels; image[k] is the label (0-based) that particle k is sent to.
struct Permutation3 {
    std::array<int, 3> image{0, 1, 2};

    static Permutation3 identity() {
        return {};
    }
    /// Exchanges particles a and b (1-based labels).
    static Permutation3 swap(int a, int b);
    /// Particle 1 -> 2 -> 3 -> 1.
    static Permutation3 cycle();
    /// All six permutations in a fixed order.
    static std::array<Permutation3, 6> all();

    Permutation3 inverse() const;
    bool operator==(const Permutation3 &other) const = default;
};

Permutation3 compose(const Permutation3 &p2, const Permutation3 &p1);
/// Particle k's index moves to slot image[k].
PureState3 permute(const Permutation3 &p, const PureState3 &s);

/// Named families of exceptional states.
enum class Family {
    Product,
    Bystander,
    Slice,
    SliceRidge,
    Ghz,
    TrueGhz,
    Beechnut,
    Semigeneric,
    Lps,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// |up up up>.
PureState3 product_state();
/// |up>(cos b |up up> + sin b |down down>), b in [0, pi/4].
PureState3 bystander_state(double beta);
/// p|up up up> + q|down down down> + r|down down up>, all nonzero; normalized.
PureState3 slice_state(Complex p, Complex q, Complex r);
/// Slice state with |p|^2 = |q|^2 + |r|^2 = 1/2; q and r are rescaled.
PureState3 slice_ridge_state(Complex q, Complex r);
/// p|up up up> + q|down down down>, p, q > 0; normalized.
PureState3 ghz_state(double p, double q);
PureState3 true_ghz_state();
/// p|up down down> + q|down up down> + r|down down up>, all nonzero; normalized.
PureState3 beechnut_state(Complex p, Complex q, Complex r);
/// T_1 = diag(p, 0), T_2 = (a, b)^T (c, d), all nonzero; normalized.
PureState3 semigeneric_state(Complex p, Complex a, Complex b, Complex c, Complex d);
/// The five-parameter canonical form; validates ranges and s^2 + t^2 + |z|^2 = 1.
PureState3 lps_state(double alpha, double beta, double t, double s, Complex z);

/// Generic constructor used by the CLI. Parameter counts per family:
/// product 0, bystander 1 (beta), slice 3, slice-ridge 2, ghz 2, true-ghz 0,
/// beechnut 3, semigeneric 5, lps 5 (alpha, beta, t, s, z).
PureState3 make_named(Family family, std::span<const Complex> params);

}  // namespace lustab

#endif
