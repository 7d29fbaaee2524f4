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


#ifndef LUSTAB_NORMALFORM_H
#define LUSTAB_NORMALFORM_H

#include "lustab/linalg.h"
#include "lustab/state.h"

namespace lustab {

/// t == x * diag(p, q) * transpose(y), p >= q >= 0.
struct Schmidt2 {
    double p;
    double q;
    C2x2 x;
    C2x2 y;
};

Schmidt2 schmidt2(const C2x2 &t);

/// Canonical representative
///   cos a |0>(cos b |00> + sin b |11>) + sin a |1>(-t sin b |00> + t cos b |11> + s |01> + z |10>)
/// together with g such that apply(g, original) == reconstruct(form).
struct LpsForm {
    double alpha = 0;
    double beta = 0;
    double t = 1;
    double s = 0;
    Complex z = 0;
    LocalUnitary g;
};

/// Throws NotNormalized. `tol` decides ties between eigenvalues and which amplitudes count as zero
/// when the residual phases are fixed.
LpsForm lps(const PureState3 &s, double tol = 1e-9);

/// Throws BadParams when the parameters are out of range.
PureState3 reconstruct(const LpsForm &f);

}  // namespace lustab

#endif
