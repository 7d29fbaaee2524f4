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

#include "lustab/state.h"

#include <cmath>
#include <numbers>

#include "lustab/errors.h"

namespace lustab {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kAngleSlack = 1e-12;

std::array<size_t, 3> digits(size_t index) {
    return {(index >> 2) & 1, (index >> 1) & 1, index & 1};
}

double real_param(Complex value, const char *family, const char *name) {
    if (std::abs(value.imag()) > 1e-12) {
        throw BadParams(std::string(family) + ": parameter " + name + " must be real");
    }
    return value.real();
}

void require_count(std::span<const Complex> params, size_t expected, const char *family) {
    if (params.size() != expected) {
        throw BadParams(std::string(family) + " expects " + std::to_string(expected) + " parameter(s), got " +
                        std::to_string(params.size()));
    }
}

void require_nonzero(Complex value, const char *family, const char *name) {
    if (std::abs(value) == 0) {
        throw BadParams(std::string(family) + ": " + name + " must be nonzero");
    }
}

}  // namespace

double norm_sq(const PureState3 &s) {
    double total = 0;
    for (const auto &a : s.amps) {
        total += std::norm(a);
    }
    return total;
}

PureState3 normalize(const PureState3 &s) {
    double n = std::sqrt(norm_sq(s));
    if (n == 0) {
        throw NotNormalized("cannot normalize the zero vector");
    }
    PureState3 result = s;
    for (auto &a : result.amps) {
        a /= n;
    }
    return result;
}

double distance(const PureState3 &a, const PureState3 &b) {
    double total = 0;
    for (size_t k = 0; k < 8; k++) {
        total += std::norm(a.amps[k] - b.amps[k]);
    }
    return std::sqrt(total);
}

void require_normalized(const PureState3 &s, double tol) {
    double n = norm_sq(s);
    if (!(std::abs(n - 1) <= tol)) {
        throw NotNormalized("state is not normalized (norm_sq = " + std::to_string(n) + ")");
    }
}

TMatrixPair partition(const PureState3 &s, int axis) {
    if (axis < 1 || axis > 3) {
        throw std::invalid_argument("partition axis must be 1, 2 or 3");
    }
    TMatrixPair result{{}, {}, axis};
    for (size_t index = 0; index < 8; index++) {
        auto d = digits(index);
        size_t fixed = d[axis - 1];
        size_t row = axis == 1 ? d[1] : d[0];
        size_t col = axis == 3 ? d[1] : d[2];
        (fixed == 0 ? result.t1 : result.t2)(row, col) = s.amps[index];
    }
    return result;
}

PureState3 unpartition(const TMatrixPair &pair) {
    PureState3 result;
    for (size_t index = 0; index < 8; index++) {
        auto d = digits(index);
        size_t fixed = d[pair.axis - 1];
        size_t row = pair.axis == 1 ? d[1] : d[0];
        size_t col = pair.axis == 3 ? d[1] : d[2];
        result.amps[index] = (fixed == 0 ? pair.t1 : pair.t2)(row, col);
    }
    return result;
}

void validate(const LocalUnitary &g) {
    for (const C2x2 *m : {&g.u, &g.v, &g.w}) {
        if (distance(*m * adjoint(*m), C2x2::identity()) > kUnitaryTol) {
            throw NotUnitary("local factor is not unitary");
        }
        if (std::abs(det(*m) - Complex(1)) > kUnitaryTol) {
            throw NotUnitary("local factor has determinant != 1; carry the phase in LocalUnitary::phase");
        }
    }
    if (!std::isfinite(g.phase)) {
        throw NotUnitary("phase is not finite");
    }
}

LocalUnitary compose(const LocalUnitary &g2, const LocalUnitary &g1) {
    return LocalUnitary{g2.phase + g1.phase, g2.u * g1.u, g2.v * g1.v, g2.w * g1.w};
}

PureState3 apply_local(const C2x2 &u, const C2x2 &v, const C2x2 &w, const PureState3 &s) {
    PureState3 result;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                Complex total{};
                for (size_t l = 0; l < 2; l++) {
                    for (size_t m = 0; m < 2; m++) {
                        Complex uv = u(i, l) * v(j, m);
                        for (size_t n = 0; n < 2; n++) {
                            total += uv * w(k, n) * s.at(l, m, n);
                        }
                    }
                }
                result.at(i, j, k) = total;
            }
        }
    }
    return result;
}

PureState3 apply(const LocalUnitary &g, const PureState3 &s) {
    validate(g);
    PureState3 result = apply_local(g.u, g.v, g.w, s);
    Complex phase = std::polar(1.0, g.phase);
    for (auto &a : result.amps) {
        a *= phase;
    }
    return result;
}

Su2Split split_u2(const C2x2 &m) {
    double angle = 0.5 * std::arg(det(m));
    Complex undo = std::polar(1.0, -angle);
    return Su2Split{angle, undo * m};
}

Permutation3 Permutation3::swap(int a, int b) {
    if (a < 1 || a > 3 || b < 1 || b > 3) {
        throw std::invalid_argument("particle labels are 1, 2, 3");
    }
    Permutation3 p;
    std::swap(p.image[a - 1], p.image[b - 1]);
    return p;
}

Permutation3 Permutation3::cycle() {
    return Permutation3{{1, 2, 0}};
}

std::array<Permutation3, 6> Permutation3::all() {
    return {Permutation3{{0, 1, 2}}, Permutation3{{0, 2, 1}}, Permutation3{{1, 0, 2}},
            Permutation3{{1, 2, 0}}, Permutation3{{2, 0, 1}}, Permutation3{{2, 1, 0}}};
}

Permutation3 Permutation3::inverse() const {
    Permutation3 result;
    for (int k = 0; k < 3; k++) {
        result.image[image[k]] = k;
    }
    return result;
}

Permutation3 compose(const Permutation3 &p2, const Permutation3 &p1) {
    Permutation3 result;
    for (int k = 0; k < 3; k++) {
        result.image[k] = p2.image[p1.image[k]];
    }
    return result;
}

PureState3 permute(const Permutation3 &p, const PureState3 &s) {
    PureState3 result;
    for (size_t index = 0; index < 8; index++) {
        auto d = digits(index);
        std::array<size_t, 3> moved{};
        for (size_t k = 0; k < 3; k++) {
            moved[p.image[k]] = d[k];
        }
        result.at(moved[0], moved[1], moved[2]) = s.amps[index];
    }
    return result;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Product:
            return "product";
        case Family::Bystander:
            return "bystander";
        case Family::Slice:
            return "slice";
        case Family::SliceRidge:
            return "slice-ridge";
        case Family::Ghz:
            return "ghz";
        case Family::TrueGhz:
            return "true-ghz";
        case Family::Beechnut:
            return "beechnut";
        case Family::Semigeneric:
            return "semigeneric";
        case Family::Lps:
            return "lps";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : {Family::Product, Family::Bystander, Family::Slice, Family::SliceRidge, Family::Ghz,
                     Family::TrueGhz, Family::Beechnut, Family::Semigeneric, Family::Lps}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

PureState3 product_state() {
    return PureState3::basis(0, 0, 0);
}

PureState3 bystander_state(double beta) {
    if (!(beta >= -kAngleSlack && beta <= std::numbers::pi / 4 + kAngleSlack)) {
        throw BadParams("bystander: beta must lie in [0, pi/4]");
    }
    PureState3 s;
    s.at(0, 0, 0) = std::cos(beta);
    s.at(0, 1, 1) = std::sin(beta);
    return s;
}

PureState3 slice_state(Complex p, Complex q, Complex r) {
    require_nonzero(p, "slice", "p");
    require_nonzero(q, "slice", "q");
    require_nonzero(r, "slice", "r");
    PureState3 s;
    s.at(0, 0, 0) = p;
    s.at(1, 1, 1) = q;
    s.at(1, 1, 0) = r;
    return normalize(s);
}

PureState3 slice_ridge_state(Complex q, Complex r) {
    require_nonzero(q, "slice-ridge", "q");
    require_nonzero(r, "slice-ridge", "r");
    double scale = std::sqrt(0.5 / (std::norm(q) + std::norm(r)));
    PureState3 s;
    s.at(0, 0, 0) = std::sqrt(0.5);
    s.at(1, 1, 1) = scale * q;
    s.at(1, 1, 0) = scale * r;
    return s;
}

PureState3 ghz_state(double p, double q) {
    if (!(p > 0 && q > 0)) {
        throw BadParams("ghz: p and q must be positive");
    }
    PureState3 s;
    s.at(0, 0, 0) = p;
    s.at(1, 1, 1) = q;
    return normalize(s);
}

PureState3 true_ghz_state() {
    return ghz_state(1, 1);
}

PureState3 beechnut_state(Complex p, Complex q, Complex r) {
    require_nonzero(p, "beechnut", "p");
    require_nonzero(q, "beechnut", "q");
    require_nonzero(r, "beechnut", "r");
    PureState3 s;
    s.at(0, 1, 1) = p;
    s.at(1, 0, 1) = q;
    s.at(1, 1, 0) = r;
    return normalize(s);
}

PureState3 semigeneric_state(Complex p, Complex a, Complex b, Complex c, Complex d) {
    for (auto [value, name] : {std::pair{p, "p"}, {a, "a"}, {b, "b"}, {c, "c"}, {d, "d"}}) {
        require_nonzero(value, "semigeneric", name);
    }
    TMatrixPair pair{C2x2::diagonal({p, 0}), make_c2x2(a * c, a * d, b * c, b * d), 1};
    return normalize(unpartition(pair));
}

PureState3 lps_state(double alpha, double beta, double t, double s, Complex z) {
    constexpr double kQuarter = std::numbers::pi / 4;
    if (!(alpha >= -kAngleSlack && alpha <= kQuarter + kAngleSlack)) {
        throw BadParams("lps: alpha must lie in [0, pi/4]");
    }
    if (!(beta >= -kAngleSlack && beta <= kQuarter + kAngleSlack)) {
        throw BadParams("lps: beta must lie in [0, pi/4]");
    }
    if (!(t >= 0 && s >= 0)) {
        throw BadParams("lps: t and s must be nonnegative");
    }
    if (!(std::abs(s * s + t * t + std::norm(z) - 1) <= 1e-9)) {
        throw BadParams("lps: s^2 + t^2 + |z|^2 must equal 1");
    }
    double ca = std::cos(alpha);
    double sa = std::sin(alpha);
    double cb = std::cos(beta);
    double sb = std::sin(beta);
    PureState3 state;
    state.at(0, 0, 0) = ca * cb;
    state.at(0, 1, 1) = ca * sb;
    state.at(1, 0, 0) = -sa * t * sb;
    state.at(1, 1, 1) = sa * t * cb;
    state.at(1, 0, 1) = sa * s;
    state.at(1, 1, 0) = sa * z;
    return normalize(state);
}

PureState3 make_named(Family family, std::span<const Complex> params) {
    switch (family) {
        case Family::Product:
            require_count(params, 0, "product");
            return product_state();
        case Family::Bystander:
            require_count(params, 1, "bystander");
            return bystander_state(real_param(params[0], "bystander", "beta"));
        case Family::Slice:
            require_count(params, 3, "slice");
            return slice_state(params[0], params[1], params[2]);
        case Family::SliceRidge:
            require_count(params, 2, "slice-ridge");
            return slice_ridge_state(params[0], params[1]);
        case Family::Ghz:
            require_count(params, 2, "ghz");
            return ghz_state(real_param(params[0], "ghz", "p"), real_param(params[1], "ghz", "q"));
        case Family::TrueGhz:
            require_count(params, 0, "true-ghz");
            return true_ghz_state();
        case Family::Beechnut:
            require_count(params, 3, "beechnut");
            return beechnut_state(params[0], params[1], params[2]);
        case Family::Semigeneric:
            require_count(params, 5, "semigeneric");
            return semigeneric_state(params[0], params[1], params[2], params[3], params[4]);
        case Family::Lps:
            require_count(params, 5, "lps");
            return lps_state(real_param(params[0], "lps", "alpha"), real_param(params[1], "lps", "beta"),
                             real_param(params[2], "lps", "t"), real_param(params[3], "lps", "s"), params[4]);
    }
    throw BadParams("unknown family");
}

}  // namespace lustab
