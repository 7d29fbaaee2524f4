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


#include "lustab/invariants.h"

#include <algorithm>
#include <cmath>

#include "lustab/errors.h"

namespace lustab {

namespace {

constexpr double kSpectrumSlack = 1e-10;

/// Amplitude with particle labels a, b, c (1-based, a permutation of 1..3) set to x, y, z.
Complex amp(const PureState3 &s, int a, size_t x, int b, size_t y, int c, size_t z) {
    std::array<size_t, 3> d{};
    d[a - 1] = x;
    d[b - 1] = y;
    d[c - 1] = z;
    return s.at(d[0], d[1], d[2]);
}

void require_label(int p) {
    if (p < 1 || p > 3) {
        throw std::invalid_argument("particle labels are 1, 2, 3");
    }
}

void require_pair(int a, int b) {
    require_label(a);
    require_label(b);
    if (a == b) {
        throw std::invalid_argument("pair labels must differ");
    }
}

double entropy_of(std::span<const double> values) {
    double total = 0;
    for (double v : values) {
        if (v < -kSpectrumSlack || v > 1 + kSpectrumSlack) {
            throw NotDensity("eigenvalue " + std::to_string(v) + " outside [0, 1]");
        }
        if (v > 0) {
            total -= v * std::log(v);
        }
    }
    return std::max(total, 0.0);
}

double det_real(const C2x2 &rho) {
    return rho(0, 0).real() * rho(1, 1).real() - std::norm(rho(0, 1));
}

/// Pair tangle without the normalization check. The nonzero spectrum of rho times its spin flip
/// equals the squared singular values of W = V^T (s2 x s2) V, where the columns of V are the
/// pair amplitudes for each value of the traced index.
double pair_tangle(const PureState3 &s, int a, int b) {
    int c = 6 - a - b;
    std::array<std::array<Complex, 4>, 2> v{};
    for (size_t m = 0; m < 2; m++) {
        for (size_t x = 0; x < 2; x++) {
            for (size_t y = 0; y < 2; y++) {
                v[m][2 * x + y] = amp(s, a, x, b, y, c, m);
            }
        }
    }
    auto flip = [](const std::array<Complex, 4> &p, const std::array<Complex, 4> &q) {
        return -p[0] * q[3] + p[1] * q[2] + p[2] * q[1] - p[3] * q[0];
    };
    C2x2 w = make_c2x2(flip(v[0], v[0]), flip(v[0], v[1]), flip(v[1], v[0]), flip(v[1], v[1]));
    auto sv = svd2(w).singulars;
    double gap = std::max(sv[0] - sv[1], 0.0);
    return gap * gap;
}

double residual_tangle(const PureState3 &s, int a) {
    int b = a == 1 ? 2 : 1;
    int c = 6 - a - b;
    return 4 * det_real(reduce1(s, a)) - pair_tangle(s, a, b) - pair_tangle(s, a, c);
}

double kempe(const PureState3 &s) {
    C2x2 r1 = reduce1(s, 1);
    C2x2 r2 = reduce1(s, 2);
    C4x4 r12 = reduce2(s, 1, 2);
    Complex total{};
    for (size_t i = 0; i < 2; i++) {
        for (size_t ip = 0; ip < 2; ip++) {
            for (size_t j = 0; j < 2; j++) {
                for (size_t jp = 0; jp < 2; jp++) {
                    total += r1(i, ip) * r2(j, jp) * r12(2 * ip + jp, 2 * i + j);
                }
            }
        }
    }
    return total.real();
}

double purity(const C2x2 &rho) {
    double total = 0;
    for (const auto &e : rho.entries) {
        total += std::norm(e);
    }
    return total;
}

}  // namespace

C2x2 reduce1(const PureState3 &s, int particle) {
    require_label(particle);
    int b = particle == 1 ? 2 : 1;
    int c = 6 - particle - b;
    C2x2 rho;
    for (size_t x = 0; x < 2; x++) {
        for (size_t y = 0; y < 2; y++) {
            Complex total{};
            for (size_t m = 0; m < 2; m++) {
                for (size_t n = 0; n < 2; n++) {
                    total += amp(s, particle, x, b, m, c, n) * std::conj(amp(s, particle, y, b, m, c, n));
                }
            }
            rho(x, y) = total;
        }
    }
    return rho;
}

C4x4 reduce2(const PureState3 &s, int a, int b) {
    require_pair(a, b);
    int c = 6 - a - b;
    C4x4 rho;
    for (size_t r = 0; r < 4; r++) {
        for (size_t q = 0; q < 4; q++) {
            Complex total{};
            for (size_t m = 0; m < 2; m++) {
                total += amp(s, a, r >> 1, b, r & 1, c, m) * std::conj(amp(s, a, q >> 1, b, q & 1, c, m));
            }
            rho(r, q) = total;
        }
    }
    return rho;
}

ReducedDensity reduce(const PureState3 &s, std::vector<int> subsystem) {
    std::sort(subsystem.begin(), subsystem.end());
    if (subsystem.size() == 1) {
        return ReducedDensity{subsystem, reduce1(s, subsystem[0])};
    }
    if (subsystem.size() == 2) {
        return ReducedDensity{subsystem, reduce2(s, subsystem[0], subsystem[1])};
    }
    throw std::invalid_argument("reduce keeps one or two particles");
}

double entropy(const C2x2 &rho) {
    return entropy_of(eig_herm(rho).values);
}

double entropy(const C4x4 &rho) {
    return entropy_of(eig_herm(rho).values);
}

double entropy(const ReducedDensity &rho) {
    return std::visit([](const auto &m) { return entropy(m); }, rho.matrix);
}

double two_tangle(const PureState3 &s, int a, int b) {
    require_pair(a, b);
    require_normalized(s);
    return pair_tangle(s, std::min(a, b), std::max(a, b));
}

double two_tangle_dense(const PureState3 &s, int a, int b) {
    require_pair(a, b);
    require_normalized(s);
    if (a > b) {
        std::swap(a, b);
    }
    C4x4 rho = reduce2(s, a, b);
    C2x2 id = C2x2::identity();
    C4x4 flipped = rho - kron(reduce1(s, a), id) - kron(id, reduce1(s, b)) + trace(rho) * C4x4::identity();

    auto e = eig_herm(rho);
    C4x4 root;
    for (size_t k = 0; k < 4; k++) {
        double r = std::sqrt(std::max(e.values[k], 0.0));
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = 0; j < 4; j++) {
                root(i, j) += r * e.vectors(i, k) * std::conj(e.vectors(j, k));
            }
        }
    }
    C4x4 m = root * flipped * root;
    m = Complex(0.5) * (m + adjoint(m));
    auto values = eig_herm(m).values;
    std::array<double, 4> lambda{};
    for (size_t k = 0; k < 4; k++) {
        lambda[k] = std::sqrt(std::max(values[k], 0.0));
    }
    double gap = std::max(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0);
    return gap * gap;
}

double three_tangle(const PureState3 &s) {
    require_normalized(s);
    return residual_tangle(s, 1);
}

TangleSet tangles(const PureState3 &s) {
    require_normalized(s);
    TangleSet t;
    t.tau12 = pair_tangle(s, 1, 2);
    t.tau13 = pair_tangle(s, 1, 3);
    t.tau23 = pair_tangle(s, 2, 3);
    std::array<double, 3> r{
        4 * det_real(reduce1(s, 1)) - t.tau12 - t.tau13,
        4 * det_real(reduce1(s, 2)) - t.tau12 - t.tau23,
        4 * det_real(reduce1(s, 3)) - t.tau13 - t.tau23,
    };
    t.tau123 = r[0];
    auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    t.tau123_discrepancy = *hi - *lo;
    return t;
}

InvariantVector invariant_vector(const PureState3 &s) {
    return {
        norm_sq(s),
        purity(reduce1(s, 1)),
        purity(reduce1(s, 2)),
        purity(reduce1(s, 3)),
        kempe(s),
        residual_tangle(s, 1),
    };
}

RMatrix invariant_jacobian(const PureState3 &s, double step) {
    RMatrix jt(16, 6);
    for (size_t k = 0; k < 16; k++) {
        Complex delta = k % 2 == 0 ? Complex(step, 0) : Complex(0, step);
        PureState3 plus = s;
        PureState3 minus = s;
        plus.amps[k / 2] += delta;
        minus.amps[k / 2] -= delta;
        auto fp = invariant_vector(plus);
        auto fm = invariant_vector(minus);
        for (size_t i = 0; i < 6; i++) {
            jt(k, i) = (fp[i] - fm[i]) / (2 * step);
        }
    }
    return jt;
}

JacobianRank jacobian_rank(const PureState3 &s, double tol, double step) {
    RMatrix jt = invariant_jacobian(s, step);
    Nullspace ns = nullspace(jt, tol);
    return JacobianRank{(int)ns.rank, ns.singulars};
}

}  // namespace lustab
