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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lustab/errors.h"
#include "lustab/invariants.h"
#include "pencil.h"

namespace lustab {

namespace {

using internal::Vec2;

C2x2 phase_diag(double angle) {
    return C2x2::diagonal({1, std::polar(1.0, angle)});
}

/// Unitary whose first row is r.
C2x2 with_first_row(const Vec2 &r) {
    return make_c2x2(r[0], r[1], -std::conj(r[1]), std::conj(r[0]));
}

double det3(const std::array<std::array<double, 3>, 3> &m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Rows have small integer entries, so independence is decided exactly.
bool independent(const std::vector<std::array<double, 3>> &rows) {
    if (rows.size() == 1) {
        return rows[0] != std::array<double, 3>{};
    }
    if (rows.size() == 2) {
        const auto &a = rows[0];
        const auto &b = rows[1];
        return a[1] * b[2] - a[2] * b[1] != 0 || a[2] * b[0] - a[0] * b[2] != 0 || a[0] * b[1] - a[1] * b[0] != 0;
    }
    return det3({rows[0], rows[1], rows[2]}) != 0;
}

/// Solves rows . x = rhs for a nonsingular 3 x 3 system by Cramer's rule.
std::array<double, 3> solve3(const std::array<std::array<double, 3>, 3> &rows, const std::array<double, 3> &rhs) {
    double d = det3(rows);
    std::array<double, 3> x{};
    for (size_t c = 0; c < 3; c++) {
        auto m = rows;
        for (size_t r = 0; r < 3; r++) {
            m[r][c] = rhs[r];
        }
        x[c] = det3(m) / d;
    }
    return x;
}

/// Phases (u, e, n) applied as diag(1, e^{iu}) x diag(1, e^{ie}) x diag(1, e^{in}) that make the
/// listed amplitudes real and nonnegative, in priority order. Amplitudes below tol are skipped, and
/// at most three constraints fit.
std::array<double, 3> residual_phases(const PureState3 &b, double cb, double sb, double tol) {
    struct Constraint {
        std::array<double, 3> row;
        Complex value;
    };
    Complex tau = b.at(1, 1, 1) * cb - b.at(1, 0, 0) * sb;
    std::array<Constraint, 4> all{{
        {{0, 1, 1}, b.at(0, 1, 1)},
        {{1, 1, 1}, tau},
        {{1, 0, 1}, b.at(1, 0, 1)},
        {{1, 1, 0}, b.at(1, 1, 0)},
    }};
    std::vector<std::array<double, 3>> rows;
    std::vector<double> rhs;
    for (const auto &c : all) {
        if (rows.size() < 3 && std::abs(c.value) >= tol) {
            rows.push_back(c.row);
            rhs.push_back(-std::arg(c.value));
        }
    }
    // Any three of the four constraint rows are independent; pad with coordinate rows.
    for (const auto &unit : {std::array<double, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
        if (rows.size() < 3) {
            auto trial = rows;
            trial.push_back(unit);
            if (independent(trial)) {
                rows = trial;
                rhs.push_back(0);
            }
        }
    }
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> r{};
    for (size_t k = 0; k < 3; k++) {
        m[k] = rows[k];
        r[k] = rhs[k];
    }
    return solve3(m, r);
}

/// Completes the canonical form after the particle-1 basis has been chosen as the rows of u0.
LpsForm finish(const PureState3 &state, const C2x2 &u0, double tol) {
    C2x2 id = C2x2::identity();
    PureState3 s1 = apply_local(u0, id, id, state);
    TMatrixPair tp = partition(s1, 1);

    Svd2 sv = svd2(tp.t1);
    C2x2 v0 = adjoint(sv.left);
    C2x2 w0 = transpose(sv.right);
    double c0 = sv.singulars[0];
    double c1 = sv.singulars[1];
    if (c0 - c1 < tol) {
        // The first block is a multiple of a unitary; conjugate the second block to upper triangular.
        C2x2 x0 = adjoint(sv.left) * tp.t2 * sv.right;
        Complex mu = eigenvalues(x0)[0];
        C2x2 shifted = x0 - mu * id;
        Vec2 v = std::abs(shifted(0, 0)) + std::abs(shifted(0, 1)) >= std::abs(shifted(1, 0)) + std::abs(shifted(1, 1))
                     ? Vec2{-shifted(0, 1), shifted(0, 0)}
                     : Vec2{-shifted(1, 1), shifted(1, 0)};
        double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        if (n == 0) {
            v = {1, 0};
        } else {
            v = {v[0] / n, v[1] / n};
        }
        C2x2 sch = make_c2x2(std::conj(v[0]), std::conj(v[1]), -v[1], v[0]);
        v0 = sch * v0;
        w0 = conj(sch) * w0;
    }
    PureState3 s2 = apply_local(id, v0, w0, s1);

    double cb = c0 / std::hypot(c0, c1);
    double sb = c1 / std::hypot(c0, c1);
    double phase = -std::arg(s2.at(0, 0, 0));
    PureState3 b = s2;
    for (auto &a : b.amps) {
        a *= std::polar(1.0, phase);
    }
    auto [u, e, n] = residual_phases(b, cb, sb, tol);
    C2x2 p1 = phase_diag(u);
    C2x2 p2 = phase_diag(e);
    C2x2 p3 = phase_diag(n);
    PureState3 s3 = apply_local(p1, p2, p3, b);

    TMatrixPair fin = partition(s3, 1);
    double ca_norm = frobenius_norm(fin.t1);
    double sa_norm = frobenius_norm(fin.t2);

    LpsForm f;
    // Both angles are at most pi/4 by construction; clamp rounding on the tie strata.
    f.alpha = std::min(std::atan2(sa_norm, ca_norm), std::numbers::pi / 4);
    f.beta = std::min(std::atan2(c1, c0), std::numbers::pi / 4);
    if (sa_norm >= tol) {
        Complex tau = (s3.at(1, 1, 1) * cb - s3.at(1, 0, 0) * sb) / sa_norm;
        double t = std::abs(tau);
        double sv_ = std::abs(s3.at(1, 0, 1)) / sa_norm;
        Complex z = s3.at(1, 1, 0) / sa_norm;
        double total = std::sqrt(t * t + sv_ * sv_ + std::norm(z));
        f.t = t / total;
        f.s = sv_ / total;
        f.z = z / total;
    }

    Su2Split su = split_u2(p1 * u0);
    Su2Split sv2 = split_u2(p2 * v0);
    Su2Split sw = split_u2(p3 * w0);
    f.g.phase = phase + su.angle + sv2.angle + sw.angle;
    f.g.u = su.special;
    f.g.v = sv2.special;
    f.g.w = sw.special;
    return f;
}

bool better(const LpsForm &a, const LpsForm &b, double tol) {
    if (std::abs(a.beta - b.beta) > tol) {
        return a.beta < b.beta;
    }
    if (std::abs(a.t - b.t) > tol) {
        return a.t < b.t;
    }
    return a.s < b.s - tol;
}

}  // namespace

Schmidt2 schmidt2(const C2x2 &t) {
    Svd2 sv = svd2(t);
    return Schmidt2{sv.singulars[0], sv.singulars[1], sv.left, conj(sv.right)};
}

LpsForm lps(const PureState3 &s, double tol) {
    require_normalized(s);
    auto e = eig_herm(reduce1(s, 1));
    C2x2 eigen_rows = adjoint(e.vectors);
    if (e.values[0] - e.values[1] >= tol) {
        return finish(s, eigen_rows, tol);
    }
    // Particle 1 is maximally mixed and any basis diagonalizes it. Prefer a basis vector that
    // makes the first block singular, which gives the smallest beta.
    LpsForm best = finish(s, eigen_rows, tol);
    for (const Vec2 &r : internal::form_roots(internal::det_form(partition(s, 1)))) {
        LpsForm candidate = finish(s, with_first_row(r), tol);
        if (better(candidate, best, tol)) {
            best = candidate;
        }
    }
    return best;
}

PureState3 reconstruct(const LpsForm &f) {
    return lps_state(f.alpha, f.beta, f.t, f.s, f.z);
}

}  // namespace lustab
