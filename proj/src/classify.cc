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


#include "lustab/classify.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lustab/errors.h"
#include "lustab/invariants.h"
#include "lustab/stabilizer.h"
#include "pencil.h"

namespace lustab {

namespace {

using internal::Vec2;
using internal::det_form;
using internal::form_roots;
using internal::pencil;

std::string axis_key(const char *name, int axis) {
    return std::string(name) + "_" + std::to_string(axis);
}

Complex amp(const PureState3 &s, int a, size_t x, int b, size_t y, int c, size_t z) {
    std::array<size_t, 3> d{};
    d[a - 1] = x;
    d[b - 1] = y;
    d[c - 1] = z;
    return s.at(d[0], d[1], d[2]);
}

std::pair<int, int> others(int k) {
    return k == 1 ? std::pair{2, 3} : k == 2 ? std::pair{1, 3} : std::pair{1, 2};
}

/// Smaller singular value of the 2 x 4 flattening that singles out particle k.
/// The product of the squared singular values is summed from 2 x 2 minors, so tiny values keep
/// their relative accuracy.
double flattening_sigma_min(const PureState3 &s, int k) {
    auto [b, c] = others(k);
    std::array<std::array<Complex, 4>, 2> f{};
    for (size_t x = 0; x < 2; x++) {
        for (size_t col = 0; col < 4; col++) {
            f[x][col] = amp(s, k, x, b, col >> 1, c, col & 1);
        }
    }
    double minors = 0;
    double row0 = 0;
    double row1 = 0;
    Complex cross{};
    for (size_t i = 0; i < 4; i++) {
        row0 += std::norm(f[0][i]);
        row1 += std::norm(f[1][i]);
        cross += f[0][i] * std::conj(f[1][i]);
        for (size_t j = i + 1; j < 4; j++) {
            minors += std::norm(f[0][i] * f[1][j] - f[0][j] * f[1][i]);
        }
    }
    double largest = 0.5 * (row0 + row1 + std::hypot(row0 - row1, 2 * std::abs(cross)));
    if (largest == 0) {
        return 0;
    }
    return std::sqrt(minors / largest);
}

/// The pair state left after projecting particle k onto the dominant eigenvector of its reduced density.
C2x2 contract_bystander(const PureState3 &s, int k) {
    auto [b, c] = others(k);
    auto e = eig_herm(reduce1(s, k));
    C2x2 pair;
    for (size_t m = 0; m < 2; m++) {
        for (size_t n = 0; n < 2; n++) {
            for (size_t x = 0; x < 2; x++) {
                pair(m, n) += std::conj(e.vectors(x, 0)) * amp(s, k, x, b, m, c, n);
            }
        }
    }
    return Complex(1 / frobenius_norm(pair)) * pair;
}

/// Ranked by degeneracy; larger shadows smaller.
int type1_rank(ClassTag tag) {
    switch (tag) {
        case ClassTag::Semigeneric:
            return 1;
        case ClassTag::Slice:
            return 2;
        case ClassTag::SliceRidge:
            return 3;
        case ClassTag::GeneralizedGhz:
            return 4;
        case ClassTag::TrueGhz:
            return 5;
        default:
            return 0;
    }
}

struct Type1Candidate {
    ClassTag tag;
    int axis;
    double p;
    NamedValues params;
};

/// Reads the class of a Type 1 frame: a singular, b singular, a brought to diag(p, 0).
Type1Candidate read_type1(const C2x2 &a, const C2x2 &b, int axis, double threshold) {
    Svd2 sa = svd2(a);
    double p = sa.singulars[0];
    C2x2 m = adjoint(sa.left) * b * sa.right;
    double row0 = std::hypot(std::abs(m(0, 0)), std::abs(m(0, 1)));
    double col0 = std::hypot(std::abs(m(0, 0)), std::abs(m(1, 0)));
    double total = frobenius_norm(m);
    double q = std::abs(m(1, 1));
    bool a_zero = row0 < threshold;
    bool c_zero = col0 < threshold;

    Type1Candidate out{ClassTag::Semigeneric, axis, p, {{"p", p}}};
    if (a_zero && c_zero) {
        out.tag = std::abs(p - q) < threshold ? ClassTag::TrueGhz : ClassTag::GeneralizedGhz;
        out.params.emplace_back("q", q);
    } else if (a_zero || c_zero) {
        out.tag = std::abs(p - total) < threshold ? ClassTag::SliceRidge : ClassTag::Slice;
        out.params.emplace_back("q", q);
        out.params.emplace_back("r", std::sqrt(std::max(total * total - q * q, 0.0)));
    } else {
        Svd2 sm = svd2(m);
        double sigma = sm.singulars[0];
        out.params.emplace_back("a", std::abs(sm.left(0, 0)));
        out.params.emplace_back("b", std::abs(sm.left(1, 0)));
        out.params.emplace_back("c", sigma * std::abs(sm.right(0, 0)));
        out.params.emplace_back("d", sigma * std::abs(sm.right(1, 0)));
    }
    return out;
}

void record_frame_detectors(const TMatrixPair &t, double threshold, NamedValues &ev) {
    // Eigenvalue pattern of X = T_1 T_2^{-1} in the input frame. These are the cases that the
    // structural argument reduces to the families detected above; kept for auditing.
    const C2x2 *num = &t.t1;
    const C2x2 *den = &t.t2;
    if (svd2(*den).singulars[1] < threshold) {
        std::swap(num, den);
    }
    if (svd2(*den).singulars[1] < threshold) {
        ev.emplace_back("x_defined", 0);
        return;
    }
    C2x2 x = *num * inverse(*den);
    auto lambda = eigenvalues(x);
    Complex half_trace = 0.5 * trace(x);
    ev.emplace_back("x_defined", 1);
    ev.emplace_back("x_trace_abs", std::abs(lambda[0] + lambda[1]));
    ev.emplace_back("x_det_abs", std::abs(lambda[0] * lambda[1]));
    ev.emplace_back("x_eig_abs_0", std::abs(lambda[0]));
    ev.emplace_back("x_eig_abs_1", std::abs(lambda[1]));
    ev.emplace_back("x_scalar_distance", distance(x, half_trace * C2x2::identity()));
    ev.emplace_back("x_hermitian_distance", distance(x, adjoint(x)));
}

/// Beechnut measure on one axis, or nullopt when the determinant form has no double root.
std::optional<double> beechnut_measure(const TMatrixPair &t, const Svd2 &q_svd) {
    Vec2 x{q_svd.right(0, 1), q_svd.right(1, 1)};
    C2x2 t1 = pencil(t, x);
    C2x2 t2 = pencil(t, perp(x));
    if (svd2(t2).singulars[1] == 0) {
        return std::nullopt;
    }
    C2x2 xm = t1 * inverse(t2);
    Svd2 sx = svd2(xm);
    Vec2 u{sx.left(0, 0), sx.left(1, 0)};
    Vec2 w = perp(u);
    C2x2 gram = t2 * adjoint(t2);
    Complex value{};
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            value += std::conj(u[r]) * gram(r, c) * w[c];
        }
    }
    return std::abs(value);
}

NamedValues beechnut_params(const PureState3 &s) {
    double t12 = two_tangle(s, 1, 2);
    double t13 = two_tangle(s, 1, 3);
    double t23 = two_tangle(s, 2, 3);
    auto modulus = [](double x, double y, double z) { return z > 0 ? std::sqrt(0.5 * std::sqrt(x * y / z)) : 0.0; };
    return {{"p", modulus(t12, t13, t23)}, {"q", modulus(t12, t23, t13)}, {"r", modulus(t13, t23, t12)}};
}

}  // namespace

std::string_view two_qubit_tag_name(TwoQubitTag tag) {
    switch (tag) {
        case TwoQubitTag::General:
            return "general";
        case TwoQubitTag::Unentangled:
            return "unentangled";
        case TwoQubitTag::MaximallyEntangled:
            return "maximally-entangled";
    }
    return "unknown";
}

TwoQubitClass classify2(const C2x2 &t, double eps) {
    if (!(std::abs(frobenius_norm(t) - 1) <= 1e-9)) {
        throw NotNormalized("two-qubit coefficient matrix is not normalized");
    }
    auto sv = svd2(t).singulars;
    TwoQubitClass result{TwoQubitTag::General, sv[0], sv[1]};
    if (sv[1] < eps) {
        result.tag = TwoQubitTag::Unentangled;
    } else if (sv[0] - sv[1] < eps) {
        result.tag = TwoQubitTag::MaximallyEntangled;
    }
    return result;
}

std::string_view tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::Generic:
            return "generic";
        case ClassTag::Semigeneric:
            return "semigeneric";
        case ClassTag::Slice:
            return "slice";
        case ClassTag::SliceRidge:
            return "slice-ridge";
        case ClassTag::GeneralizedGhz:
            return "generalized-ghz";
        case ClassTag::TrueGhz:
            return "true-ghz";
        case ClassTag::Beechnut:
            return "beechnut";
        case ClassTag::Bystander:
            return "bystander";
        case ClassTag::Product:
            return "product";
    }
    return "unknown";
}

int expected_stab_dim(ClassTag tag, bool maximal) {
    switch (tag) {
        case ClassTag::Generic:
        case ClassTag::Semigeneric:
            return 0;
        case ClassTag::Slice:
        case ClassTag::SliceRidge:
        case ClassTag::Beechnut:
            return 1;
        case ClassTag::GeneralizedGhz:
        case ClassTag::TrueGhz:
            return 2;
        case ClassTag::Bystander:
            return maximal ? 4 : 2;
        case ClassTag::Product:
            return 3;
    }
    return -1;
}

EntanglementClass structural_class(const PureState3 &s, double threshold) {
    EntanglementClass result;
    NamedValues &ev = result.evidence.values;

    // Factorization: a particle whose flattening has rank one is a bystander.
    std::vector<int> pure;
    for (int k = 1; k <= 3; k++) {
        double sigma = flattening_sigma_min(s, k);
        ev.emplace_back(axis_key("flattening_sigma_min", k), sigma);
        if (sigma < threshold) {
            pure.push_back(k);
        }
    }
    if (pure.size() >= 2) {
        result.tag = ClassTag::Product;
        return result;
    }
    if (pure.size() == 1) {
        int k = pure[0];
        TwoQubitClass pair = classify2(contract_bystander(s, k), threshold);
        if (pair.tag == TwoQubitTag::Unentangled) {
            result.tag = ClassTag::Product;
            return result;
        }
        result.tag = ClassTag::Bystander;
        result.witness.particle = k;
        result.witness.maximal = pair.tag == TwoQubitTag::MaximallyEntangled;
        result.witness.params = {{"beta", std::atan2(pair.q, pair.p)}, {"p", pair.p}, {"q", pair.q}};
        return result;
    }

    // Both T-matrices singular in some frame of the partition particle.
    std::array<TMatrixPair, 3> parts{partition(s, 1), partition(s, 2), partition(s, 3)};
    std::optional<Type1Candidate> best;
    for (int k = 1; k <= 3; k++) {
        const TMatrixPair &t = parts[k - 1];
        double measure = INFINITY;
        for (const Vec2 &r : form_roots(det_form(t))) {
            C2x2 a = pencil(t, r);
            C2x2 b = pencil(t, perp(r));
            double sigma = svd2(b).singulars[1];
            measure = std::min(measure, sigma);
            if (sigma >= threshold) {
                continue;
            }
            Type1Candidate c = read_type1(a, b, k, threshold);
            if (!best || type1_rank(c.tag) > type1_rank(best->tag) ||
                (type1_rank(c.tag) == type1_rank(best->tag) && c.p > best->p + threshold)) {
                best = c;
            }
        }
        ev.emplace_back(axis_key("type1_sigma_min", k), measure);
    }
    record_frame_detectors(parts[0], threshold, ev);
    if (best) {
        result.tag = best->tag;
        result.witness.particle = best->axis;
        result.witness.params = best->params;
        return result;
    }

    // Double root of the determinant form (vanishing 3-tangle) with the nilpotent frame aligned.
    double beech = INFINITY;
    int beech_axis = 0;
    for (int k = 1; k <= 3; k++) {
        Svd2 q_svd = svd2(det_form(parts[k - 1]));
        ev.emplace_back(axis_key("det_form_sigma_min", k), q_svd.singulars[1]);
        if (q_svd.singulars[1] >= threshold) {
            continue;
        }
        auto m = beechnut_measure(parts[k - 1], q_svd);
        if (m && *m < beech) {
            beech = *m;
            beech_axis = k;
        }
    }
    if (beech_axis != 0) {
        ev.emplace_back("beechnut_measure", beech);
    }
    if (beech < threshold) {
        result.tag = ClassTag::Beechnut;
        result.witness.particle = beech_axis;
        result.witness.params = beechnut_params(s);
        return result;
    }

    result.tag = ClassTag::Generic;
    return result;
}

EntanglementClass classify3(const PureState3 &s, double tol, double rank_tol) {
    require_normalized(s);
    int dim = solve(s, rank_tol).dim;
    EntanglementClass degenerate = structural_class(s, 10 * tol);
    EntanglementClass strict = structural_class(s, tol);
    bool borderline = degenerate.tag != strict.tag || degenerate.witness.maximal != strict.witness.maximal;

    EntanglementClass *chosen = nullptr;
    if (expected_stab_dim(degenerate.tag, degenerate.witness.maximal) == dim) {
        chosen = &degenerate;
    } else if (expected_stab_dim(strict.tag, strict.witness.maximal) == dim) {
        chosen = &strict;
    } else {
        throw ClassifierInconsistency(std::string(tag_name(degenerate.tag)),
                                      expected_stab_dim(degenerate.tag, degenerate.witness.maximal), dim);
    }
    EntanglementClass result = *chosen;
    result.stab_dim = dim;
    result.evidence.borderline = borderline;
    if (borderline) {
        result.evidence.strict_tag = std::string(tag_name(strict.tag));
    }
    return result;
}

}  // namespace lustab
