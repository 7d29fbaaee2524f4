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

#include "lustab/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lustab/errors.h"

namespace lustab {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr int kMaxJacobiSweeps = 50;
constexpr double kJacobiStop = 1e-14;

// Rotates v so its first non-negligible component is real and positive.
template <size_t N>
void fix_phase(std::array<Complex, N> &v) {
    for (size_t k = 0; k < N; k++) {
        double a = std::abs(v[k]);
        if (a > 1e-12) {
            Complex phase = std::conj(v[k]) / a;
            for (auto &e : v) {
                e *= phase;
            }
            return;
        }
    }
}

template <size_t N>
std::array<Complex, N> column(const CMatrix<N> &m, size_t c) {
    std::array<Complex, N> result;
    for (size_t r = 0; r < N; r++) {
        result[r] = m(r, c);
    }
    return result;
}

template <size_t N>
void set_column(CMatrix<N> &m, size_t c, const std::array<Complex, N> &v) {
    for (size_t r = 0; r < N; r++) {
        m(r, c) = v[r];
    }
}

template <size_t N>
void require_hermitian(const CMatrix<N> &m) {
    double scale = frobenius_norm(m);
    if (distance(m, adjoint(m)) > kHermitianTol * std::max(scale, 1e-300)) {
        throw NotHermitian("matrix is not hermitian");
    }
}

// Closed-form eigensystem of a hermitian 2x2 matrix (no validation).
HermitianEigen<2> eig_herm2_unchecked(const C2x2 &m) {
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    double mean = 0.5 * (a + d);
    double half_gap = 0.5 * (a - d);
    double radius = std::hypot(half_gap, std::abs(b));

    HermitianEigen<2> result;
    result.values = {mean + radius, mean - radius};
    if (std::abs(b) == 0) {
        // Already diagonal; the larger entry goes first, ties keep the natural order.
        if (d > a) {
            result.vectors = make_c2x2(0, 1, 1, 0);
        } else {
            result.vectors = C2x2::identity();
        }
        return result;
    }

    // Of the two algebraically equivalent eigenvector formulas, use the one free of cancellation.
    std::array<Complex, 2> v0;
    if (half_gap >= 0) {
        v0 = {radius + half_gap, std::conj(b)};
    } else {
        v0 = {b, radius - half_gap};
    }
    double n = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
    v0[0] /= n;
    v0[1] /= n;
    fix_phase(v0);
    auto v1 = perp(v0);
    fix_phase(v1);
    set_column(result.vectors, 0, v0);
    set_column(result.vectors, 1, v1);
    return result;
}

// Cyclic Jacobi for a hermitian N x N matrix.
template <size_t N>
HermitianEigen<N> eig_herm_jacobi(const CMatrix<N> &m) {
    CMatrix<N> a = m;
    CMatrix<N> v = CMatrix<N>::identity();
    double scale = frobenius_norm(m);

    for (int sweep = 0; sweep < kMaxJacobiSweeps; sweep++) {
        double off = 0;
        for (size_t p = 0; p < N; p++) {
            for (size_t q = 0; q < N; q++) {
                if (p != q) {
                    off += std::norm(a(p, q));
                }
            }
        }
        if (std::sqrt(off) <= kJacobiStop * scale) {
            break;
        }
        for (size_t p = 0; p < N; p++) {
            for (size_t q = p + 1; q < N; q++) {
                double apq_abs = std::abs(a(p, q));
                if (apq_abs == 0) {
                    continue;
                }
                Complex e = a(p, q) / apq_abs;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * apq_abs);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;

                CMatrix<N> r = CMatrix<N>::identity();
                r(p, p) = c;
                r(p, q) = s;
                r(q, p) = -s * std::conj(e);
                r(q, q) = c * std::conj(e);
                a = adjoint(r) * a * r;
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                v = v * r;
            }
        }
    }

    std::array<size_t, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::array<std::array<Complex, N>, N> cols;
    for (size_t k = 0; k < N; k++) {
        cols[k] = column(v, k);
        fix_phase(cols[k]);
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        double vx = a(x, x).real();
        double vy = a(y, y).real();
        if (vx != vy) {
            return vx > vy;
        }
        return cols[x][0].real() > cols[y][0].real();
    });

    HermitianEigen<N> result;
    for (size_t k = 0; k < N; k++) {
        result.values[k] = a(order[k], order[k]).real();
        set_column(result.vectors, k, cols[order[k]]);
    }
    return result;
}

}  // namespace

C2x2 inverse(const C2x2 &a) {
    Complex d = det(a);
    return make_c2x2(a(1, 1) / d, -a(0, 1) / d, -a(1, 0) / d, a(0, 0) / d);
}

C4x4 kron(const C2x2 &a, const C2x2 &b) {
    C4x4 result;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    result(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return result;
}

const std::array<C2x2, 3> &pauli() {
    static const std::array<C2x2, 3> kPauli = {
        make_c2x2(0, 1, 1, 0),
        make_c2x2(0, Complex(0, -1), Complex(0, 1), 0),
        make_c2x2(1, 0, 0, -1),
    };
    return kPauli;
}

C2x2 su2_exp(const std::array<double, 3> &generator) {
    double angle = std::sqrt(generator[0] * generator[0] + generator[1] * generator[1] + generator[2] * generator[2]);
    if (angle == 0) {
        return C2x2::identity();
    }
    double c = std::cos(angle);
    double s = std::sin(angle) / angle;
    C2x2 result = C2x2::identity();
    result = Complex(c) * result;
    for (size_t k = 0; k < 3; k++) {
        result = result + Complex(0, s * generator[k]) * pauli()[k];
    }
    return result;
}

std::array<Complex, 2> perp(const std::array<Complex, 2> &v) {
    return {-std::conj(v[1]), std::conj(v[0])};
}

Svd2 svd2(const C2x2 &m) {
    double frob_sq = 0;
    for (const auto &e : m.entries) {
        frob_sq += std::norm(e);
    }
    if (frob_sq == 0) {
        return Svd2{C2x2::identity(), {0, 0}, C2x2::identity()};
    }
    double abs_det = std::abs(det(m));
    double half = 0.5 * frob_sq;
    double disc = std::sqrt(std::max(0.0, (half - abs_det) * (half + abs_det)));
    double s0 = std::sqrt(half + disc);
    double s1 = abs_det / s0;

    auto right_eig = eig_herm2_unchecked(adjoint(m) * m);
    std::array<Complex, 2> v0 = column(right_eig.vectors, 0);
    std::array<Complex, 2> v1 = perp(v0);

    std::array<Complex, 2> u0 = m * v0;
    for (auto &e : u0) {
        e /= s0;
    }
    double u0_norm = std::sqrt(std::norm(u0[0]) + std::norm(u0[1]));
    u0[0] /= u0_norm;
    u0[1] /= u0_norm;

    std::array<Complex, 2> u1 = perp(u0);
    auto mv1 = m * v1;
    Complex overlap = std::conj(u1[0]) * mv1[0] + std::conj(u1[1]) * mv1[1];
    if (std::abs(overlap) > 0) {
        Complex phase = overlap / std::abs(overlap);
        u1[0] *= phase;
        u1[1] *= phase;
    }

    Svd2 result;
    result.singulars = {s0, s1};
    set_column(result.left, 0, u0);
    set_column(result.left, 1, u1);
    set_column(result.right, 0, v0);
    set_column(result.right, 1, v1);
    return result;
}

HermitianEigen<2> eig_herm(const C2x2 &m) {
    require_hermitian(m);
    return eig_herm2_unchecked(m);
}

HermitianEigen<4> eig_herm(const C4x4 &m) {
    require_hermitian(m);
    return eig_herm_jacobi(m);
}

std::array<Complex, 2> eigenvalues(const C2x2 &m) {
    Complex half_trace = 0.5 * trace(m);
    Complex d = det(m);
    Complex root = std::sqrt(half_trace * half_trace - d);
    Complex big = std::abs(half_trace + root) >= std::abs(half_trace - root) ? half_trace + root : half_trace - root;
    if (big == Complex{}) {
        return {0, 0};
    }
    return {big, d / big};
}

RMatrix::RMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
    if (rows > kMaxRows || cols > kMaxCols) {
        throw std::invalid_argument("RMatrix supports at most 16 rows and 10 columns");
    }
}

double RMatrix::frobenius_norm() const {
    double total = 0;
    for (size_t k = 0; k < rows_ * cols_; k++) {
        total += entries_[k] * entries_[k];
    }
    return std::sqrt(total);
}

std::vector<double> RMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("RMatrix::apply: dimension mismatch");
    }
    std::vector<double> result(rows_, 0.0);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result[r] += (*this)(r, c) * x[c];
        }
    }
    return result;
}

RealSvd svd(const RMatrix &m) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    std::vector<std::vector<double>> a(cols, std::vector<double>(rows));
    std::vector<std::vector<double>> v(cols, std::vector<double>(cols, 0.0));
    for (size_t c = 0; c < cols; c++) {
        for (size_t r = 0; r < rows; r++) {
            a[c][r] = m(r, c);
        }
        v[c][c] = 1;
    }

    auto dot = [](const std::vector<double> &x, const std::vector<double> &y) {
        double total = 0;
        for (size_t k = 0; k < x.size(); k++) {
            total += x[k] * y[k];
        }
        return total;
    };

    constexpr double kOrthTol = 1e-15;
    for (int sweep = 0; sweep < 80; sweep++) {
        bool rotated = false;
        for (size_t i = 0; i < cols; i++) {
            for (size_t j = i + 1; j < cols; j++) {
                double alpha = dot(a[i], a[i]);
                double beta = dot(a[j], a[j]);
                double gamma = dot(a[i], a[j]);
                if (alpha == 0 || beta == 0 || std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = c * t;
                for (size_t k = 0; k < rows; k++) {
                    double ai = a[i][k];
                    double aj = a[j][k];
                    a[i][k] = c * ai - s * aj;
                    a[j][k] = s * ai + c * aj;
                }
                for (size_t k = 0; k < cols; k++) {
                    double vi = v[i][k];
                    double vj = v[j][k];
                    v[i][k] = c * vi - s * vj;
                    v[j][k] = s * vi + c * vj;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(cols);
    for (size_t c = 0; c < cols; c++) {
        norms[c] = std::sqrt(dot(a[c], a[c]));
    }
    std::vector<size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return norms[x] > norms[y];
    });

    RealSvd result;
    for (size_t k : order) {
        result.singulars.push_back(norms[k]);
        std::vector<double> u(rows, 0.0);
        if (norms[k] > 0) {
            for (size_t r = 0; r < rows; r++) {
                u[r] = a[k][r] / norms[k];
            }
        }
        result.left.push_back(std::move(u));
        result.right.push_back(v[k]);
    }
    return result;
}

Nullspace nullspace(const RMatrix &m, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("nullspace: tol must be positive");
    }
    RealSvd decomposition = svd(m);
    double sigma_max = decomposition.singulars.empty() ? 0.0 : decomposition.singulars.front();
    Nullspace result;
    result.rank = 0;
    for (size_t k = 0; k < decomposition.singulars.size(); k++) {
        if (sigma_max > 0 && decomposition.singulars[k] > tol * sigma_max) {
            result.rank++;
        } else {
            result.kernel_basis.push_back(decomposition.right[k]);
        }
    }
    result.singulars = std::move(decomposition.singulars);
    return result;
}

}  // namespace lustab
