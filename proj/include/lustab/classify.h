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


#ifndef LUSTAB_CLASSIFY_H
#define LUSTAB_CLASSIFY_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lustab/linalg.h"
#include "lustab/state.h"

namespace lustab {

enum class TwoQubitTag {
    General,
    Unentangled,
    MaximallyEntangled,
};

std::string_view two_qubit_tag_name(TwoQubitTag tag);

struct TwoQubitClass {
    TwoQubitTag tag;
    double p;  // Schmidt coefficients, p >= q >= 0
    double q;
};

/// Throws NotNormalized unless ||t||_F = 1 to 1e-9.
TwoQubitClass classify2(const C2x2 &t, double eps = 1e-7);

enum class ClassTag {
    Generic,
    Semigeneric,
    Slice,
    SliceRidge,
    GeneralizedGhz,
    TrueGhz,
    Beechnut,
    Bystander,
    Product,
};

std::string_view tag_name(ClassTag tag);

/// Stabilizer dimension implied by a class; `maximal` only matters for Bystander.
int expected_stab_dim(ClassTag tag, bool maximal);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct Witness {
    /// The particle (1..3) the class was detected on: the bystander, or the partition axis. 0 if none.
    int particle = 0;
    /// Bystander only: the remaining pair is maximally entangled.
    bool maximal = false;
    NamedValues params;
};

struct Evidence {
    NamedValues values;
    /// The degenerate (10 tol) and strict (tol) passes disagreed.
    bool borderline = false;
    /// Tag found by the strict pass, recorded when borderline.
    std::string strict_tag;
};

struct EntanglementClass {
    ClassTag tag = ClassTag::Generic;
    Witness witness;
    int stab_dim = 0;
    Evidence evidence;
};

/// Structural classification cross-checked against the stabilizer dimension.
/// Throws NotNormalized or ClassifierInconsistency.
EntanglementClass classify3(const PureState3 &s, double tol = 1e-7, double rank_tol = 1e-8);

/// Only the structural decision procedure, run with every zero test read as "modulus < threshold".
/// No stabilizer cross-check.
EntanglementClass structural_class(const PureState3 &s, double threshold);

}  // namespace lustab

#endif
