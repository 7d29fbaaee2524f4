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


#ifndef LUSTAB_RANDOM_H
#define LUSTAB_RANDOM_H

#include <random>

#include "lustab/state.h"

namespace lustab {

/// Amplitudes i.i.d. complex Gaussian, then normalized.
PureState3 random_state(std::mt19937_64 &rng);

/// Haar-distributed element of SU(2).
C2x2 random_su2(std::mt19937_64 &rng);

/// Uniform phase and three Haar SU(2) factors.
LocalUnitary random_local_unitary(std::mt19937_64 &rng);

/// Complex Gaussian 2x2 matrix scaled to unit Frobenius norm.
C2x2 random_pair_state(std::mt19937_64 &rng);

}  // namespace lustab

#endif
