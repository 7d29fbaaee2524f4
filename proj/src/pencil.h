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


#ifndef LUSTAB_SRC_PENCIL_H
#define LUSTAB_SRC_PENCIL_H

#include <vector>

#include "lustab/state.h"

namespace lustab::internal {

using Vec2 = std::array<Complex, 2>;

/// x_0 T_1 + x_1 T_2.
C2x2 pencil(const TMatrixPair &t, const Vec2 &x);

/// Symmetric matrix of the quadratic form x -> det(x_0 T_1 + x_1 T_2).
C2x2 det_form(const TMatrixPair &t);

/// Normalized projective roots of a binary quadratic form. Empty when the form vanishes.
std::vector<Vec2> form_roots(const C2x2 &q);

}  // namespace lustab::internal

#endif
