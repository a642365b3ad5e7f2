// Copyright 2026 The povmkit Authors
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

#pragma once

// Command-line front end. run() is the whole tool; tools/povm.cpp only
// forwards argv. Reports go to `out` as JSON (or CSV where requested),
// diagnostics to `err`.
//
// Exit codes: 0 pass, 1 fail, 2 usage or regime error, 3 numeric error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "povm/io.hpp"
#include "povm/random.hpp"

namespace povm::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kNumeric = 3 };

struct CommandResult {
    int exit_code = kPass;
    Json report;
};

namespace detail {

struct DimArgs {
    std::optional<int> d;
    std::optional<int> N;
    std::optional<int> M;
    std::optional<double> x;
};

inline void add_dim_options(CLI::App* app, DimArgs& a) {
    app->add_option("--d", a.d, "Hilbert-space dimension");
    app->add_option("--N", a.N, "number of POVMs");
    app->add_option("--M", a.M, "outcomes per POVM");
    app->add_option("--x", a.x, "Tr{Pi^2}");
}

inline int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

inline int exit_for(bool passed) { return passed ? kPass : kFail; }

/// Samples random density matrices and checks per-POVM normalization and
/// non-negativity of the Born probabilities.
inline Json born_check(const NMPovm& p, int samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    const int M = p.params().M;
    double max_sum_residual = 0.0;
    double min_probability = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const auto probs = born_probabilities(p, random_density_matrix(p.params().d, rng));
        for (std::size_t start = 0; start < probs.size(); start += static_cast<std::size_t>(M)) {
            double sum = 0.0;
            for (int a = 0; a < M; ++a) sum += probs[start + static_cast<std::size_t>(a)];
            max_sum_residual = std::max(max_sum_residual, std::abs(sum - 1.0));
        }
        for (double q : probs) min_probability = std::min(min_probability, q);
    }
    const bool passed = samples == 0 || (max_sum_residual <= tol && min_probability >= -1e-12);
    return {{"samples", samples},
            {"seed", seed},
            {"max_sum_residual", max_sum_residual},
            {"min_probability", samples ? Json(min_probability) : Json(nullptr)},
            {"passed", passed}};
}

inline OperatorBasis load_basis(const std::optional<std::string>& path, int d, bool rotate, std::uint64_t seed) {
    OperatorBasis b = path ? basis_from_json(read_json_file(*path)) : gell_mann_basis(d);
    if (b.dim != d) throw DimensionError("basis file has d = " + std::to_string(b.dim) + ", expected " + std::to_string(d));
    const BasisReport rep = verify_basis(b);
    if (!rep.passed) throw NumericError("basis is not orthonormal with G_1 = I/sqrt(d)", rep.orthonormality_residual);
    if (rotate) {
        Rng rng(seed);
        b = rotate_traceless(b, random_orthogonal(d * d - 1, rng));
    }
    return b;
}

inline std::optional<Partition> load_partition(const std::optional<std::string>& path, int d, int N, int M) {
    if (!path) return std::nullopt;
    const Partition raw = partition_from_json(read_json_file(*path));
    if (raw.dim != d) throw PartitionError("partition file has d = " + std::to_string(raw.dim));
    return make_partition(d, N, M, raw.blocks);
}

inline int log2_exact(int d) {
    int k = 0;
    while ((1 << k) < d) ++k;
    if ((1 << k) != d) throw ParameterError("pauli-n2 needs d = 2^k, got d = " + std::to_string(d));
    return k;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

/// Parses and executes one invocation. `args` excludes the program name.
inline CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, validate and analyze (N,M)-POVMs.", "povm"};
    app.require_subcommand(1, 1);
    app.fallthrough(false);

    // validate
    auto* validate = app.add_subcommand("validate", "check a POVM file against its defining relations");
    std::string validate_file;
    double validate_tol = 1e-10;
    int born_samples = 0;
    std::uint64_t seed = 1;
    validate->add_option("file", validate_file, "POVM JSON file")->required();
    validate->add_option("--tol", validate_tol, "residual tolerance")->capture_default_str();
    validate->add_option("--born-samples", born_samples, "random states for the Born-rule check")->capture_default_str();
    validate->add_option("--seed", seed, "RNG seed")->capture_default_str();

    // construct
    auto* construct = app.add_subcommand("construct", "build a POVM and write it as JSON");
    std::string kind;
    detail::DimArgs cdim;
    std::optional<std::string> basis_file, partition_file, name, output;
    bool with_report = false, rotate_basis = false;
    double construct_tol = 1e-10;
    construct->add_option("--kind", kind, "sufficient | pauli-n2 | mum3 | fixture")
        ->required()
        ->check(CLI::IsMember({"sufficient", "pauli-n2", "mum3", "fixture"}));
    detail::add_dim_options(construct, cdim);
    construct->add_option("--basis", basis_file, "basis JSON file (default: Gell-Mann)");
    construct->add_option("--partition", partition_file, "partition JSON file");
    construct->add_option("--name", name, "fixture name");
    construct->add_option("-o,--output", output, "output POVM file")->required();
    construct->add_flag("--report", with_report, "include construction details");
    construct->add_flag("--rotate-basis", rotate_basis, "apply a random orthogonal rotation to the traceless basis");
    construct->add_option("--seed", seed, "RNG seed for --rotate-basis")->capture_default_str();
    construct->add_option("--tol", construct_tol, "validation tolerance")->capture_default_str();

    // check
    auto* check = app.add_subcommand("check", "evaluate an existence condition");
    std::string mode;
    std::optional<std::string> input;
    detail::DimArgs kdim;
    std::optional<double> check_tol;
    check->add_option("--mode", mode, "sufficient | necessary | screen")
        ->required()
        ->check(CLI::IsMember({"sufficient", "necessary", "screen"}));
    check->add_option("--input", input, "POVM JSON file");
    detail::add_dim_options(check, kdim);
    check->add_option("--tol", check_tol, "tolerance for necessary checks (default per regime)");

    // scan
    auto* scan = app.add_subcommand("scan", "PSD region of a plane through I/M");
    int scan_d = 3, scan_M = 3, mu = 2, nu = 9, n = 512;
    std::optional<double> half_width, tri_x, tri_angle;
    std::optional<std::string> scan_basis;
    double scan_tol = kPsdTol;
    std::string scan_format = "csv";
    std::optional<std::string> scan_output;
    scan->add_option("--d", scan_d)->capture_default_str();
    scan->add_option("--M", scan_M)->capture_default_str();
    scan->add_option("--mu", mu, "first basis index (1-based)")->capture_default_str();
    scan->add_option("--nu", nu, "second basis index (1-based)")->capture_default_str();
    scan->add_option("--n", n, "grid points per axis")->capture_default_str();
    scan->add_option("--half-width", half_width, "grid half-width (default 1.1 r_out)");
    scan->add_option("--basis", scan_basis, "basis JSON file (default: Gell-Mann)");
    scan->add_option("--tol", scan_tol)->capture_default_str();
    scan->add_option("--triangle-x", tri_x, "overlay the simplex triangle at this x");
    scan->add_option("--triangle-angle", tri_angle, "rotation of the overlay triangle");
    scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    scan->add_option("-o,--output", scan_output, "write the grid here instead of stdout");

    // radii
    auto* radii_cmd = app.add_subcommand("radii", "in- and out-radius of the simplex of POVM elements");
    int radii_d = 0, radii_M = 0;
    radii_cmd->add_option("--d", radii_d)->required();
    radii_cmd->add_option("--M", radii_M)->required();

    // curve
    auto* curve = app.add_subcommand("curve", "ratio r_in^2/r_out^2 as a function of d");
    int d_max = 32;
    std::string rule = "M_ge_d", curve_format = "json";
    curve->add_option("--d-max", d_max)->capture_default_str();
    curve->add_option("--rule", rule)->check(CLI::IsMember({"M_ge_d", "M_eq_2"}))->capture_default_str();
    curve->add_option("--format", curve_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "list or write the reference POVMs");
    std::optional<std::string> fixture_dir;
    fixtures->add_option("--write-dir", fixture_dir, "write <name>.json for each fixture here");

    CommandResult res;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        res.exit_code = kUsage;
        res.report = {{"error", "usage"}, {"message", e.what()}};
        return res;
    }

    try {
        if (validate->parsed()) {
            const NMPovm p = povm_from_json(read_json_file(validate_file));
            const ValidationReport v = validate_povm(p, validate_tol);
            Json born = detail::born_check(p, born_samples, seed, validate_tol);
            res.report = {{"params", p.params()},
                          {"validation", v},
                          {"informational_completeness", informational_completeness(p)},
                          {"born", born}};
            res.exit_code = detail::exit_for(v.passed && born["passed"].get<bool>());
        } else if (construct->parsed()) {
            std::optional<NMPovm> povm;
            Json details = Json::object();
            if (kind == "sufficient") {
                const int d = detail::require(cdim.d, "--d");
                const int N = detail::require(cdim.N, "--N");
                const int M = detail::require(cdim.M, "--M");
                const double x = cdim.x ? *cdim.x : sufficient_x_bound(d, M);
                const OperatorBasis b = detail::load_basis(basis_file, d, rotate_basis, seed);
                const auto part = detail::load_partition(partition_file, d, N, M);
                povm = sufficient_construct(d, N, M, x, b, part);
                details = {{"radii", radii(d, M)},
                           {"sufficient_x_max", sufficient_x_bound(d, M)},
                           {"rotated_basis", rotate_basis}};
                if (rotate_basis) details["seed"] = seed;
            } else if (kind == "pauli-n2") {
                const int d = detail::require(cdim.d, "--d");
                const int N = detail::require(cdim.N, "--N");
                povm = optimal_n2_pauli(detail::log2_exact(d), N);
            } else if (kind == "mum3") {
                Mum3Result m = mum3_optimal_partition();
                details = {{"x", m.search.x}, {"blocks", m.search.blocks}, {"partition", partition_to_json(fig1_partition())}};
                povm = std::move(m.povm);
            } else {
                if (!name) throw CLI::RequiredError("--name");
                povm = fixture_povm(fixture_from_string(*name));
                details = {{"name", *name}};
            }
            write_json_file(*output, povm_to_json(*povm));
            const ValidationReport v = validate_povm(*povm, construct_tol);
            std::vector<double> mins;
            for (const auto& e : povm->elements()) mins.push_back(min_eigenvalue(e));
            res.report = {{"kind", kind}, {"output", *output}, {"params", povm->params()}, {"validation", v}};
            if (with_report) {
                details["min_eigenvalues"] = mins;
                res.report["construction"] = details;
            }
            res.exit_code = detail::exit_for(v.passed);
        } else if (check->parsed()) {
            std::optional<NMPovm> povm;
            if (input) povm = povm_from_json(read_json_file(*input));
            if (mode == "necessary") {
                if (!povm) throw CLI::RequiredError("--input");
                const auto& prm = povm->params();
                NecessaryReport r;
                if (prm.M == 2) {
                    r = check_optimal_m2(*povm, check_tol.value_or(1e-10));
                } else if (prm.M < prm.d) {
                    r = check_optimal_m_between(*povm, check_tol.value_or(1e-9));
                } else {
                    r = check_optimal_m_ge_d(*povm, check_tol.value_or(1e-9));
                }
                res.report = {{"params", prm}, {"necessary", r}};
                res.exit_code = detail::exit_for(r.passed);
            } else {
                const int d = povm ? povm->params().d : detail::require(kdim.d, "--d");
                const int N = povm ? povm->params().N : detail::require(kdim.N, "--N");
                const int M = povm ? povm->params().M : detail::require(kdim.M, "--M");
                if (mode == "screen") {
                    const ScreenReport s = feasibility_screen(d, N, M);
                    res.report = s;
                    res.exit_code = detail::exit_for(!s.excluded);
                } else {
                    const double x = povm ? povm->params().x : (kdim.x ? *kdim.x : optimal_x(d, M));
                    const PovmParams prm = povm_params(d, N, M, x);
                    const bool ok = check_sufficient(prm);
                    res.report = {{"params", prm},
                                  {"radii", radii(d, M)},
                                  {"sufficient_x_max", sufficient_x_bound(d, M)},
                                  {"sufficient", ok}};
                    res.exit_code = detail::exit_for(ok);
                }
            }
        } else if (scan->parsed()) {
            const OperatorBasis b = detail::load_basis(scan_basis, scan_d, false, 0);
            RegionScan s = region_scan(b, mu, nu, scan_M, n, half_width, scan_tol);
            if (tri_x) attach_triangle(s, *tri_x, tri_angle.value_or(0.0));
            Json summary = scan_to_json(s, false);
            const bool ok = summary["inner_disc_violations"].get<int>() == 0 &&
                            summary["star_shape_violations"].get<int>() == 0;
            summary["passed"] = ok;
            res.exit_code = detail::exit_for(ok);
            if (scan_format == "csv") {
                res.report = summary;
                if (scan_output) {
                    std::ofstream f(*scan_output);
                    if (!f) throw StructureError("cannot write '" + *scan_output + "'");
                    write_scan_csv(f, s);
                    detail::emit(out, summary);
                } else {
                    write_scan_csv(out, s);
                }
                return res;
            }
            res.report = scan_to_json(s, true);
            res.report["passed"] = ok;
            if (scan_output) {
                write_json_file(*scan_output, res.report);
                detail::emit(out, summary);
                return res;
            }
        } else if (radii_cmd->parsed()) {
            const RadiiReport r = radii(radii_d, radii_M);
            const SimplexRadiiReport s = simplex_radii(radii_d, radii_M);
            res.report = r;
            res.report["simplex"] = s;
            res.exit_code = detail::exit_for(s.agree);
        } else if (curve->parsed()) {
            const auto pts = ratio_curve(d_max, ratio_rule_from_string(rule));
            res.report = {{"rule", rule}, {"points", pts}};
            if (curve_format == "csv") {
                write_curve_csv(out, pts);
                return res;
            }
        } else if (fixtures->parsed()) {
            Json list = Json::array();
            bool all_ok = true;
            if (fixture_dir) std::filesystem::create_directories(*fixture_dir);
            for (Fixture f : all_fixtures()) {
                const NMPovm p = fixture_povm(f);
                const ValidationReport v = validate_povm(p);
                all_ok = all_ok && v.passed;
                Json entry = {{"name", to_string(f)}, {"params", p.params()}, {"valid", v.passed}};
                if (fixture_dir) {
                    const std::string path = (std::filesystem::path(*fixture_dir) / (to_string(f) + ".json")).string();
                    write_json_file(path, povm_to_json(p));
                    entry["file"] = path;
                }
                list.push_back(std::move(entry));
            }
            res.report = {{"fixtures", list}};
            res.exit_code = detail::exit_for(all_ok);
        }
    } catch (const CLI::RequiredError& e) {
        err << "error: " << e.what() << '\n';
        res.exit_code = kUsage;
        res.report = {{"error", "usage"}, {"message", e.what()}};
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        res.exit_code = kNumeric;
        res.report = {{"error", "numeric"}, {"message", e.what()}, {"residual", e.residual()}};
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << '\n';
        res.exit_code = kFail;
        res.report = {{"error", "construction"},
                      {"message", e.what()},
                      {"witness", {{"index", e.element_index()}, {"min_eigenvalue", e.min_eigenvalue()}}}};
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        res.exit_code = kUsage;
        res.report = {{"error", "input"}, {"message", e.what()}};
    }
    detail::emit(out, res.report);
    return res;
}

}  // namespace povm::cli
