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


#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lustab/cli.h"

using namespace lustab;

namespace {

/// Runs `body` on the named input file, or stdin when the path is empty or "-".
template <typename Body>
int with_input(const std::string &path, Body body) {
    if (path.empty() || path == "-") {
        return body(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitIo;
    }
    return body(in);
}

/// Runs `body` on the named output file, or stdout when the path is empty or "-".
template <typename Body>
int with_output(const std::string &path, Body body) {
    if (path.empty() || path == "-") {
        return body(std::cout);
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    return body(out);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classifies pure three-qubit states by their local unitary stabilizer."};
    app.require_subcommand(1);

    CliOptions opts;
    std::string input;
    std::string output;
    app.add_option("--tol-rank", opts.tol_rank, "Relative rank cutoff of the stabilizer system")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-class", opts.tol_class, "Zero threshold of the structural classifier")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid", opts.grid, "Samples per surface axis");
    app.add_option("--seed", opts.seed, "Seed of the selfcheck generator");
    app.add_option("--output", output, "Output path (stdout if omitted)");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--input", input, "Input JSON path (stdin if omitted)");

    auto *classify = app.add_subcommand("classify", "Classify a state and report its stabilizer and invariants");
    auto *normalform = app.add_subcommand("normalform", "Emit the five-parameter canonical form");

    auto *named = app.add_subcommand("named", "Emit a named exceptional state as JSON");
    std::string family;
    std::vector<std::string> params;
    named->add_option("family", family, "product | bystander | slice | slice-ridge | ghz | true-ghz | beechnut | "
                                        "semigeneric | lps")
        ->required();
    named->add_option("--param", params, "Family parameter, \"re\" or \"re,im\"; repeat in order")
        ->allow_extra_args(false);

    auto *surface = app.add_subcommand("surface", "Write single-particle entropies over a family as CSV");
    std::string surface_family;
    surface->add_option("family", surface_family, "pod | slices | beechnut")
        ->required()
        ->check(CLI::IsMember({"pod", "slices", "beechnut"}));
    bool format_given = false;

    auto *selfcheck = app.add_subcommand("selfcheck", "Run the randomized property suites");
    int samples = 1000;
    selfcheck->add_option("--samples", samples, "Random states per suite");

    for (auto *sub : {classify, normalform, named, surface, selfcheck}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    format_given = app.count("--format") > 0;

    auto emit = [&](auto run) { return with_output(output, run); };

    if (*classify) {
        return with_input(input, [&](std::istream &in) {
            return emit([&](std::ostream &out) { return run_classify(in, out, std::cerr, opts); });
        });
    }
    if (*normalform) {
        return with_input(input, [&](std::istream &in) {
            return emit([&](std::ostream &out) { return run_normalform(in, out, std::cerr, opts); });
        });
    }
    if (*named) {
        return emit([&](std::ostream &out) { return run_named(family, params, out, std::cerr); });
    }
    if (*surface) {
        if (!format_given) {
            opts.format = "csv";
        }
        if (opts.grid < 2) {
            std::cerr << "error: --grid must be at least 2\n";
            return kExitUsage;
        }
        auto which = *parse_surface_family(surface_family);
        return emit([&](std::ostream &out) { return run_surface(which, opts, out, std::cerr); });
    }
    if (*selfcheck) {
        if (samples < 1) {
            std::cerr << "error: --samples must be at least 1\n";
            return kExitUsage;
        }
        return emit([&](std::ostream &out) { return run_selfcheck(samples, opts, out, std::cerr); });
    }
    return kExitUsage;
}
