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

#ifndef LUSTAB_LINALG_H
#define LUSTAB_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lustab {

using Complex = std::complex<double>;

/// Dense N x N complex matrix, row-major. Only N = 2 and N = 4 are used.
template <size_t N>
struct CMatrix {
    std::array<Complex, N * N> entries{};

    static constexpr size_t dim = N;

    Complex &operator()(size_t row, size_t col) {
        return entries[row * N + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries[row * N + col];
    }

    static CMatrix identity() {
        CMatrix result;
        for (size_t k = 0; k < N; k++) {
            result(k, k) = 1;
        }
        return result;
    }

    static CMatrix diagonal(const std::array<Complex, N> &values) {
        CMatrix result;
        for (size_t k = 0; k < N; k++) {
            result(k, k) = values[k];
        }
        return result;
    }

    bool operator==(const CMatrix &other) const = default;
};

using C2x2 = CMatrix<2>;
using C4x4 = CMatrix<4>;

/// Builds a 2x2 matrix from its rows.
inline C2x2 make_c2x2(Complex m00, Complex m01, Complex m10, Complex m11) {
    return C2x2{{m00, m01, m10, m11}};
}

template <size_t N>
CMatrix<N> operator*(const CMatrix<N> &a, const CMatrix<N> &b) {
    CMatrix<N> result;
    for (size_t r = 0; r < N; r++) {
        for (size_t k = 0; k < N; k++) {
            Complex v = a(r, k);
            if (v == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < N; c++) {
                result(r, c) += v * b(k, c);
            }
        }
    }
    return result;
}

template <size_t N>
CMatrix<N> operator+(const CMatrix<N> &a, const CMatrix<N> &b) {
    CMatrix<N> result;
    for (size_t k = 0; k < N * N; k++) {
        result.entries[k] = a.entries[k] + b.entries[k];
    }
    return result;
}

template <size_t N>
CMatrix<N> operator-(const CMatrix<N> &a, const CMatrix<N> &b) {
    CMatrix<N> result;
    for (size_t k = 0; k < N * N; k++) {
        result.entries[k] = a.entries[k] - b.entries[k];
    }
    return result;
}

template <size_t N>
CMatrix<N> operator*(Complex scale, const CMatrix<N> &a) {
    CMatrix<N> result;
    for (size_t k = 0; k < N * N; k++) {
        result.entries[k] = scale * a.entries[k];
    }
    return result;
}

template <size_t N>
std::array<Complex, N> operator*(const CMatrix<N> &a, const std::array<Complex, N> &v) {
    std::array<Complex, N> result{};
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            result[r] += a(r, c) * v[c];
        }
    }
    return result;
}

template <size_t N>
CMatrix<N> adjoint(const CMatrix<N> &a) {
    CMatrix<N> result;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            result(c, r) = std::conj(a(r, c));
        }
    }
    return result;
}

template <size_t N>
CMatrix<N> transpose(const CMatrix<N> &a) {
    CMatrix<N> result;
    for (size_t r = 0; r < N; r++) {
        for (size_t c = 0; c < N; c++) {
            result(c, r) = a(r, c);
        }
    }
    return result;
}

template <size_t N>
CMatrix<N> conj(const CMatrix<N> &a) {
    CMatrix<N> result;
    for (size_t k = 0; k < N * N; k++) {
        result.entries[k] = std::conj(a.entries[k]);
    }
    return result;
}

template <size_t N>
Complex trace(const CMatrix<N> &a) {
    Complex result{};
    for (size_t k = 0; k < N; k++) {
        result += a(k, k);
    }
    return result;
}

template <size_t N>
double frobenius_norm(const CMatrix<N> &a) {
    double total = 0;
    for (const auto &e : a.entries) {
        total += std::norm(e);
    }
    return std::sqrt(total);
}

/// Frobenius norm of a - b.
template <size_t N>
double distance(const CMatrix<N> &a, const CMatrix<N> &b) {
    return frobenius_norm(a - b);
}

inline Complex det(const C2x2 &a) {
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

/// Inverse of an invertible 2x2 matrix (no singularity check).
C2x2 inverse(const C2x2 &a);

/// Kronecker product; the first factor's index is the slow one.
C4x4 kron(const C2x2 &a, const C2x2 &b);

/// Pauli matrices sigma_1, sigma_2, sigma_3 (index 0..2).
const std::array<C2x2, 3> &pauli();

/// The closed-form SU(2) exponential exp(i * (x sigma_1 + y sigma_2 + z sigma_3)).
C2x2 su2_exp(const std::array<double, 3> &generator);

/// Unitary 2x2 matrix orthogonal complement helper: returns (-conj(v1), conj(v0)).
std::array<Complex, 2> perp(const std::array<Complex, 2> &v);

struct Svd2 {
    C2x2 left;
    std::array<double, 2> singulars;
    C2x2 right;
};

/// Closed-form singular value decomposition: m == left * diag(singulars) * adjoint(right).
/// The smaller singular value is computed as |det m| / s0, which stays accurate when it is tiny.
Svd2 svd2(const C2x2 &m);

template <size_t N>
struct HermitianEigen {
    std::array<double, N> values;  // descending
    CMatrix<N> vectors;            // eigenvectors as columns
};

/// Hermitian eigendecomposition; throws NotHermitian when ||m - m^H|| > 1e-10 ||m||.
HermitianEigen<2> eig_herm(const C2x2 &m);
HermitianEigen<4> eig_herm(const C4x4 &m);

/// Eigenvalues of a general 2x2 matrix, larger modulus first.
std::array<Complex, 2> eigenvalues(const C2x2 &m);

/// Real dense matrix with at most 16 rows and 10 columns, row-major.
class RMatrix {
   public:
    static constexpr size_t kMaxRows = 16;
    static constexpr size_t kMaxCols = 10;

    RMatrix(size_t rows, size_t cols);

    double &operator()(size_t row, size_t col) {
        return entries_[row * cols_ + col];
    }
    double operator()(size_t row, size_t col) const {
        return entries_[row * cols_ + col];
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    double frobenius_norm() const;
    std::vector<double> apply(std::span<const double> x) const;

   private:
    size_t rows_;
    size_t cols_;
    std::array<double, kMaxRows * kMaxCols> entries_{};
};

struct RealSvd {
    std::vector<double> singulars;           // descending, one per column
    std::vector<std::vector<double>> left;   // left[k] is the k-th left vector (zero if singulars[k] == 0)
    std::vector<std::vector<double>> right;  // right[k] is the k-th right singular vector
};

/// One-sided Jacobi SVD of a real matrix.
RealSvd svd(const RMatrix &m);

struct Nullspace {
    size_t rank;
    std::vector<std::vector<double>> kernel_basis;  // orthonormal, cols - rank vectors
    std::vector<double> singulars;                  // all singular values, descending
};

/// Numerical rank and kernel with the relative cutoff tol * sigma_max.
Nullspace nullspace(const RMatrix &m, double tol = 1e-8);

}  // namespace lustab

#endif
