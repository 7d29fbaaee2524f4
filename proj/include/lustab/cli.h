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


#ifndef LUSTAB_CLI_H
#define LUSTAB_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lustab/state.h"

namespace lustab {

enum ExitCode : int {
    kExitOk = 0,
    kExitSelfcheckFailed = 1,
    kExitUsage = 2,
    kExitNotNormalized = 3,
    kExitInconsistent = 4,
    kExitIo = 5,
};

struct CliOptions {
    double tol_rank = 1e-8;
    double tol_class = 1e-7;
    int grid = 64;
    uint64_t seed = 20260101;
    std::string format = "json";  // json | csv
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses {"amps": [[re, im] x 8]}. Throws ParseError.
PureState3 parse_state_json(std::string_view text);
std::string state_to_json(const PureState3 &s);

/// Each run_* function reads its input, writes the result to `out`, diagnostics to `err`,
/// and returns the process exit code.
int run_classify(std::istream &in, std::ostream &out, std::ostream &err, const CliOptions &opts);
int run_normalform(std::istream &in, std::ostream &out, std::ostream &err, const CliOptions &opts);
/// Parameters are "re" or "re,im" strings.
int run_named(std::string_view family, const std::vector<std::string> &params, std::ostream &out,
              std::ostream &err);

enum class SurfaceFamily {
    Pod,
    Slices,
    Beechnut,
};

std::optional<SurfaceFamily> parse_surface_family(std::string_view name);

struct SurfaceRow {
    double param1;
    double param2;
    double s1;
    double s2;
    double s3;
};

/// Grid points in emission order. Throws BadParams when grid < 2.
std::vector<SurfaceRow> surface_rows(SurfaceFamily family, int grid);
void write_surface_csv(const std::vector<SurfaceRow> &rows, std::ostream &out);
int run_surface(SurfaceFamily family, const CliOptions &opts, std::ostream &out, std::ostream &err);

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
};

/// Randomized property suites; deterministic given (samples, seed).
std::vector<SuiteResult> selfcheck(int samples, uint64_t seed, const CliOptions &opts);
int run_selfcheck(int samples, const CliOptions &opts, std::ostream &out, std::ostream &err);

}  // namespace lustab

#endif
