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

#ifndef LUSTAB_ERRORS_H
#define LUSTAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace lustab {

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotDensity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when the structural classification and the numerically computed
/// stabilizer dimension disagree. Both verdicts are kept for reporting.
struct ClassifierInconsistency : std::runtime_error {
    ClassifierInconsistency(std::string structural_tag, int expected_dim, int solved_dim)
        : std::runtime_error(
              "classifier inconsistency: structural class '" + structural_tag + "' expects stabilizer dimension " +
              std::to_string(expected_dim) + " but the solver found " + std::to_string(solved_dim)),
          structural_tag(std::move(structural_tag)),
          expected_dim(expected_dim),
          solved_dim(solved_dim) {
    }

    std::string structural_tag;
    int expected_dim;
    int solved_dim;
};

}  // namespace lustab

#endif
