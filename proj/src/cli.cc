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


#include "lustab/cli.h"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lustab/classify.h"
#include "lustab/errors.h"
#include "lustab/invariants.h"
#include "lustab/normalform.h"
#include "lustab/random.h"
#include "lustab/stabilizer.h"

namespace lustab {

namespace {

using nlohmann::json;

json complex_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

json matrix_json(const C2x2 &m) {
    return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                        json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

json amps_json(const PureState3 &s) {
    json amps = json::array();
    for (const auto &a : s.amps) {
        amps.push_back(complex_json(a));
    }
    return amps;
}

json named_json(const NamedValues &values) {
    json result = json::object();
    for (const auto &[k, v] : values) {
        result[k] = v;
    }
    return result;
}

std::string read_all(std::istream &in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Entropy rounded away from negative zero.
double entropy_nats(const C2x2 &rho) {
    return entropy(rho) + 0.0;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Complex parse_complex_param(const std::string &text) {
    try {
        size_t comma = text.find(',');
        size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(text, &used);
            if (used != text.size()) {
                throw ParseError("bad parameter '" + text + "'");
            }
            return {re, 0};
        }
        std::string a = text.substr(0, comma);
        std::string b = text.substr(comma + 1);
        size_t used_b = 0;
        double re = std::stod(a, &used);
        double im = std::stod(b, &used_b);
        if (used != a.size() || used_b != b.size()) {
            throw ParseError("bad parameter '" + text + "'");
        }
        return {re, im};
    } catch (const std::logic_error &) {
        throw ParseError("bad parameter '" + text + "'");
    }
}

json classify_report(const PureState3 &s, const CliOptions &opts) {
    EntanglementClass cls = classify3(s, opts.tol_class, opts.tol_rank);
    StabilizerAlgebra alg = solve(s, opts.tol_rank);
    TangleSet t = tangles(s);
    InvariantVector inv = invariant_vector(s);
    JacobianRank jac = jacobian_rank(s);

    json witness = named_json(cls.witness.params);
    witness["particle"] = cls.witness.particle;
    if (cls.tag == ClassTag::Bystander) {
        witness["maximal"] = cls.witness.maximal;
    }
    json evidence = named_json(cls.evidence.values);
    evidence["borderline"] = cls.evidence.borderline;
    if (cls.evidence.borderline) {
        evidence["strict_tag"] = cls.evidence.strict_tag;
    }
    json smallest = json::array();
    for (size_t k = alg.singulars.size(); k-- > 0 && smallest.size() < 3;) {
        smallest.push_back(alg.singulars[k]);
    }
    json basis = json::array();
    for (const auto &x : alg.basis) {
        basis.push_back(x.coords());
    }

    json report;
    report["tag"] = std::string(tag_name(cls.tag));
    report["witness"] = witness;
    report["stab_dim"] = cls.stab_dim;
    report["orbit_dim"] = alg.rank;
    report["basis"] = basis;
    report["basis_residual"] = alg.residual;
    report["rank_singulars_smallest"] = smallest;
    report["tangles"] = {{"tau12", t.tau12},
                         {"tau13", t.tau13},
                         {"tau23", t.tau23},
                         {"tau123", t.tau123},
                         {"tau123_discrepancy", t.tau123_discrepancy}};
    report["entropies"] = {{"S1", entropy_nats(reduce1(s, 1))},
                           {"S2", entropy_nats(reduce1(s, 2))},
                           {"S3", entropy_nats(reduce1(s, 3))}};
    report["invariants"] = inv;
    report["jacobian"] = {{"rank", jac.rank}, {"singulars", jac.singulars}};
    report["evidence"] = evidence;
    return report;
}

/// Runs body and maps library exceptions to exit codes.
template <typename Body>
int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadParams &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotNormalized &e) {
        err << "error: " << e.what() << "\n";
        return kExitNotNormalized;
    } catch (const ClassifierInconsistency &e) {
        json j = {{"error", "classifier-inconsistency"},
                  {"structural_tag", e.structural_tag},
                  {"expected_dim", e.expected_dim},
                  {"solved_dim", e.solved_dim}};
        err << j.dump(2) << "\n";
        return kExitInconsistent;
    }
}

void write_csv_line(std::ostream &out, const std::vector<std::string> &cells) {
    for (size_t k = 0; k < cells.size(); k++) {
        out << (k ? "," : "") << cells[k];
    }
    out << "\n";
}

PureState3 slice_point(double u, double v, int role) {
    double p2 = 1 - 0.5 * u;
    double rest = 0.5 * u;
    PureState3 s;
    s.at(0, 0, 0) = std::sqrt(p2);
    s.at(1, 1, 1) = std::sqrt(rest * (1 - v));
    s.at(1, 1, 0) = std::sqrt(rest * v);
    // The flipped pair is (1, 2) in the base form; move the unflipped particle 3 to slot `role`.
    if (role != 3) {
        s = permute(Permutation3::swap(role, 3), s);
    }
    return s;
}

SurfaceRow entropy_row(double p1, double p2, const PureState3 &s) {
    return SurfaceRow{p1, p2, entropy_nats(reduce1(s, 1)), entropy_nats(reduce1(s, 2)), entropy_nats(reduce1(s, 3))};
}

}  // namespace

PureState3 parse_state_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("input is not valid JSON");
    }
    if (!j.is_object() || !j.contains("amps") || !j["amps"].is_array() || j["amps"].size() != 8) {
        throw ParseError("expected an object with \"amps\": 8 [re, im] pairs");
    }
    PureState3 s;
    for (size_t k = 0; k < 8; k++) {
        const json &a = j["amps"][k];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw ParseError("amplitude " + std::to_string(k) + " is not a [re, im] pair");
        }
        s.amps[k] = {a[0].get<double>(), a[1].get<double>()};
    }
    return s;
}

std::string state_to_json(const PureState3 &s) {
    return json{{"amps", amps_json(s)}}.dump();
}

int run_classify(std::istream &in, std::ostream &out, std::ostream &err, const CliOptions &opts) {
    return guarded(err, [&] {
        PureState3 s = parse_state_json(read_all(in));
        json report = classify_report(s, opts);
        if (opts.format == "csv") {
            write_csv_line(out, {"tag", "stab_dim", "tau12", "tau13", "tau23", "tau123", "jacobian_rank"});
            const json &t = report["tangles"];
            write_csv_line(out, {report["tag"].get<std::string>(), std::to_string(report["stab_dim"].get<int>()),
                                 fmt17(t["tau12"]), fmt17(t["tau13"]), fmt17(t["tau23"]), fmt17(t["tau123"]),
                                 std::to_string(report["jacobian"]["rank"].get<int>())});
        } else {
            out << report.dump(2) << "\n";
        }
        return (int)kExitOk;
    });
}

int run_normalform(std::istream &in, std::ostream &out, std::ostream &err, const CliOptions &opts) {
    return guarded(err, [&] {
        PureState3 s = parse_state_json(read_all(in));
        LpsForm f = lps(s);
        if (opts.format == "csv") {
            write_csv_line(out, {"alpha", "beta", "t", "s", "z_re", "z_im"});
            write_csv_line(out, {fmt17(f.alpha), fmt17(f.beta), fmt17(f.t), fmt17(f.s), fmt17(f.z.real()),
                                 fmt17(f.z.imag())});
            return (int)kExitOk;
        }
        json report = {
            {"alpha", f.alpha},
            {"beta", f.beta},
            {"t", f.t},
            {"s", f.s},
            {"z", complex_json(f.z)},
            {"g", {{"phase", f.g.phase}, {"u", matrix_json(f.g.u)}, {"v", matrix_json(f.g.v)}, {"w", matrix_json(f.g.w)}}},
            {"canonical", {{"amps", amps_json(reconstruct(f))}}},
        };
        out << report.dump(2) << "\n";
        return (int)kExitOk;
    });
}

int run_named(std::string_view family, const std::vector<std::string> &params, std::ostream &out,
              std::ostream &err) {
    return guarded(err, [&] {
        auto f = parse_family(family);
        if (!f) {
            throw ParseError("unknown family '" + std::string(family) + "'");
        }
        std::vector<Complex> values;
        for (const auto &p : params) {
            values.push_back(parse_complex_param(p));
        }
        PureState3 s = make_named(*f, values);
        out << json{{"family", std::string(family)}, {"amps", amps_json(s)}}.dump(2) << "\n";
        return (int)kExitOk;
    });
}

std::optional<SurfaceFamily> parse_surface_family(std::string_view name) {
    if (name == "pod") {
        return SurfaceFamily::Pod;
    }
    if (name == "slices") {
        return SurfaceFamily::Slices;
    }
    if (name == "beechnut") {
        return SurfaceFamily::Beechnut;
    }
    return std::nullopt;
}

std::vector<SurfaceRow> surface_rows(SurfaceFamily family, int grid) {
    if (grid < 2) {
        throw BadParams("grid must be at least 2");
    }
    std::vector<SurfaceRow> rows;
    double last = grid - 1;
    switch (family) {
        case SurfaceFamily::Pod: {
            const std::array<std::array<Complex, 3>, 3> sheets{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
            for (const auto &sheet : sheets) {
                for (int i = 0; i < grid; i++) {
                    for (int j = 0; j < grid; j++) {
                        double alpha = std::numbers::pi / 4 * i / last;
                        double beta = std::numbers::pi / 4 * j / last;
                        PureState3 s = lps_state(alpha, beta, sheet[0].real(), sheet[1].real(), sheet[2]);
                        rows.push_back(entropy_row(alpha, beta, s));
                    }
                }
            }
            break;
        }
        case SurfaceFamily::Slices:
            for (int role = 1; role <= 3; role++) {
                for (int i = 0; i < grid; i++) {
                    for (int j = 0; j < grid; j++) {
                        double u = i / last;
                        double v = j / last;
                        rows.push_back(entropy_row(u, v, slice_point(u, v, role)));
                    }
                }
            }
            break;
        case SurfaceFamily::Beechnut:
            for (int i = 0; i < grid; i++) {
                for (int j = 0; i + j < grid; j++) {
                    double p2 = i / last;
                    double q2 = j / last;
                    PureState3 s;
                    s.at(0, 1, 1) = std::sqrt(p2);
                    s.at(1, 0, 1) = std::sqrt(q2);
                    s.at(1, 1, 0) = std::sqrt(std::max(1 - p2 - q2, 0.0));
                    rows.push_back(entropy_row(p2, q2, s));
                }
            }
            break;
    }
    return rows;
}

void write_surface_csv(const std::vector<SurfaceRow> &rows, std::ostream &out) {
    out << "param1,param2,S1,S2,S3\n";
    for (const auto &r : rows) {
        write_csv_line(out, {fmt17(r.param1), fmt17(r.param2), fmt17(r.s1), fmt17(r.s2), fmt17(r.s3)});
    }
}

int run_surface(SurfaceFamily family, const CliOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto rows = surface_rows(family, opts.grid);
        if (opts.format == "json") {
            json j = json::array();
            for (const auto &r : rows) {
                j.push_back({{"param1", r.param1}, {"param2", r.param2}, {"S1", r.s1}, {"S2", r.s2}, {"S3", r.s3}});
            }
            out << j.dump() << "\n";
        } else {
            write_surface_csv(rows, out);
        }
        out.flush();
        if (!out) {
            err << "error: failed writing surface output\n";
            return (int)kExitIo;
        }
        return (int)kExitOk;
    });
}

std::vector<SuiteResult> selfcheck(int samples, uint64_t seed, const CliOptions &opts) {
    if (samples < 1) {
        throw BadParams("samples must be at least 1");
    }
    std::mt19937_64 rng(seed);
    SuiteResult generic{"genericity"};
    SuiteResult invariance{"lu-invariance"};
    SuiteResult dim_invariance{"stab-dim-invariance"};
    SuiteResult orbit{"orbit-stabilizer"};
    auto tally = [](SuiteResult &suite, bool ok) { (ok ? suite.passed : suite.failed)++; };

    std::vector<PureState3> family_reps{
        product_state(),
        bystander_state(0.3),
        bystander_state(std::numbers::pi / 4),
        slice_state(0.8, 0.5, 0.3),
        slice_ridge_state(0.6, 0.8),
        ghz_state(0.8, 0.6),
        true_ghz_state(),
        beechnut_state(0.5, 0.6, 0.7),
        semigeneric_state(1.0, 0.6, 0.8, Complex(0.3, 0.2), 0.7),
    };
    auto perms = Permutation3::all();

    for (int n = 0; n < samples; n++) {
        PureState3 s = random_state(rng);
        StabilizerAlgebra alg = solve(s, opts.tol_rank);
        tally(generic, alg.dim == 0);
        tally(orbit, alg.rank + alg.dim == 10);

        LocalUnitary g = random_local_unitary(rng);
        PureState3 moved = apply(g, s);
        auto a = invariant_vector(s);
        auto b = invariant_vector(moved);
        bool same = true;
        for (size_t k = 0; k < a.size(); k++) {
            same = same && std::abs(a[k] - b[k]) <= 1e-9;
        }
        tally(invariance, same);

        const PureState3 &rep = family_reps[n % family_reps.size()];
        std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
        PureState3 image = permute(perms[pick(rng)], apply(random_local_unitary(rng), rep));
        StabilizerAlgebra rep_alg = solve(rep, opts.tol_rank);
        StabilizerAlgebra image_alg = solve(image, opts.tol_rank);
        tally(dim_invariance, rep_alg.dim == image_alg.dim);
        tally(orbit, image_alg.rank + image_alg.dim == 10);
    }
    return {generic, invariance, dim_invariance, orbit};
}

int run_selfcheck(int samples, const CliOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto suites = selfcheck(samples, opts.seed, opts);
        bool ok = true;
        json list = json::array();
        for (const auto &suite : suites) {
            ok = ok && suite.failed == 0;
            list.push_back({{"name", suite.name}, {"passed", suite.passed}, {"failed", suite.failed}});
        }
        json summary = {{"samples", samples}, {"seed", opts.seed}, {"suites", list}, {"ok", ok}};
        out << summary.dump(2) << "\n";
        return ok ? (int)kExitOk : (int)kExitSelfcheckFailed;
    });
}

}  // namespace lustab
