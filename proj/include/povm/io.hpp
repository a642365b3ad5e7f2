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

// File formats.
//
//   matrix     [[[re, im], ...], ...]                  d rows of d entries
//   basis      {"d": int, "elements": [matrix, ...]}
//   partition  {"d": int, "blocks": [[int, ...], ...]}  1-based basis indices
//   povm       {"d", "N", "M", "x", "elements": [matrix x N*M]} in i(alpha,a) order
//   scan CSV   u,v,min_eig,psd
//   curve CSV  d,R
//
// Doubles are written in shortest round-trip form, so parse(dump(v)) == v.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "povm/bases.hpp"
#include "povm/conditions.hpp"
#include "povm/construct.hpp"
#include "povm/geometry.hpp"
#include "povm/model.hpp"

namespace povm {

using Json = nlohmann::json;

inline Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw StructureError("matrix must be a non-empty list of rows");
    const auto d = static_cast<Eigen::Index>(j.size());
    CMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw StructureError("matrix row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            const Json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw StructureError("matrix entry must be a [re, im] pair");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

inline Json basis_to_json(const OperatorBasis& b) {
    Json els = Json::array();
    for (const auto& e : b.elements) els.push_back(matrix_to_json(e.matrix()));
    return {{"d", b.dim}, {"elements", std::move(els)}};
}

inline OperatorBasis basis_from_json(const Json& j) {
    try {
        OperatorBasis b;
        b.dim = j.at("d").get<int>();
        for (const auto& e : j.at("elements")) b.elements.emplace_back(matrix_from_json(e));
        for (const auto& e : b.elements) {
            if (e.dim() != b.dim) throw StructureError("basis element dimension does not match d");
        }
        return b;
    } catch (const Json::exception& e) {
        throw StructureError(std::string("malformed basis file: ") + e.what());
    }
}

inline Json partition_to_json(const Partition& p) { return {{"d", p.dim}, {"blocks", p.blocks}}; }

/// Reads the raw blocks; validation against (N, M) happens in make_partition.
inline Partition partition_from_json(const Json& j) {
    try {
        Partition p;
        p.dim = j.at("d").get<int>();
        p.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        return p;
    } catch (const Json::exception& e) {
        throw StructureError(std::string("malformed partition file: ") + e.what());
    }
}

inline Json povm_to_json(const NMPovm& p) {
    Json els = Json::array();
    for (const auto& e : p.elements()) els.push_back(matrix_to_json(e.matrix()));
    const auto& prm = p.params();
    return {{"d", prm.d}, {"N", prm.N}, {"M", prm.M}, {"x", prm.x}, {"elements", std::move(els)}};
}

inline NMPovm povm_from_json(const Json& j) {
    try {
        const PovmParams prm =
            povm_params(j.at("d").get<int>(), j.at("N").get<int>(), j.at("M").get<int>(), j.at("x").get<double>());
        std::vector<HermitianOperator> els;
        for (const auto& e : j.at("elements")) els.emplace_back(matrix_from_json(e));
        return NMPovm(prm, std::move(els));
    } catch (const Json::exception& e) {
        throw StructureError(std::string("malformed POVM file: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructureError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw StructureError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw StructureError("cannot write '" + path + "'");
    out << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Reports

inline void to_json(Json& j, const PovmParams& p) {
    j = {{"d", p.d},           {"N", p.N},         {"M", p.M},         {"x", p.x},
         {"lambda1", p.lambda1}, {"gamma", p.gamma}, {"x_min", p.x_min}, {"x_max", p.x_max},
         {"optimal", p.optimal}, {"optimality_gap", p.optimality_gap()}};
}

inline void to_json(Json& j, const Spectrum& s) {
    j = {{"eigenvalues", s.eigenvalues}, {"multiplicities", s.multiplicities}};
}

inline void to_json(Json& j, const ValidationReport& r) {
    j = {{"passed", r.passed},
         {"tolerance", r.tolerance},
         {"residuals",
          {{"trace", r.trace_residual},
           {"intra_diagonal", r.intra_diagonal_residual},
           {"intra_offdiagonal", r.intra_offdiagonal_residual},
           {"inter", r.inter_residual},
           {"completeness", r.completeness_residual},
           {"psd", r.psd_residual}}},
         {"max_residual", r.max_residual()},
         {"min_eigenvalue", r.min_eigenvalue},
         {"min_eigenvalue_index", r.min_eigenvalue_index},
         {"measured_x", r.measured_x},
         {"optimal", r.optimal},
         {"optimality_gap", r.optimality_gap}};
}

inline void to_json(Json& j, const CompletenessReport& r) {
    j = {{"parameter_condition", r.parameter_condition}, {"operator_rank", r.operator_rank}, {"complete", r.complete}};
}

inline void to_json(Json& j, const BasisReport& r) {
    j = {{"passed", r.passed},
         {"tolerance", r.tolerance},
         {"orthonormality_residual", r.orthonormality_residual},
         {"trace_residual", r.trace_residual},
         {"identity_residual", r.identity_residual}};
}

inline void to_json(Json& j, const XMatrixReport& r) {
    j = {{"passed", r.passed},
         {"column_orthonormality_residual", r.column_orthonormality_residual},
         {"first_column_residual", r.first_column_residual},
         {"block_sum_residual", r.block_sum_residual},
         {"row_norm_residual", r.row_norm_residual},
         {"active_columns", r.active_columns}};
}

inline void to_json(Json& j, const PsdWitness& w) { j = {{"index", w.index}, {"min_eigenvalue", w.min_eigenvalue}}; }

inline void to_json(Json& j, const BlockRotation& b) {
    Json intervals = Json::array();
    for (const auto& [lo, hi] : b.intervals) intervals.push_back({lo, hi});
    j = {{"alpha", b.alpha},
         {"basis_indices", b.basis_indices},
         {"angle", b.angle},
         {"best_angle", b.best_angle},
         {"best_radius", b.best_radius},
         {"best_margin", b.best_margin},
         {"feasible_fraction", b.feasible_fraction},
         {"feasible_set", to_string(b.kind)},
         {"intervals", std::move(intervals)},
         {"points", b.points}};
}

inline void to_json(Json& j, const RadiiReport& r) {
    j = {{"d", r.d},
         {"M", r.M},
         {"r_in_sq", r.r_in_sq},
         {"r_out_sq", r.r_out_sq},
         {"ratio", r.ratio},
         {"sufficient_x_max", r.sufficient_x_max}};
}

inline void to_json(Json& j, const Witness& w) {
    j = {{"check", w.check},       {"index", w.index},       {"worst_index", w.worst_index},
         {"value", w.value},       {"expected", w.expected}, {"residual", w.residual},
         {"tolerance", w.tolerance}, {"ok", w.ok}};
}

inline void to_json(Json& j, const NecessaryReport& r) {
    j = {{"regime", to_string(r.regime)},
         {"passed", r.passed},
         {"verdict", r.passed ? "pass" : "fail"},
         {"reason", r.reason},
         {"witnesses", r.witnesses},
         {"extracted_operator_count", r.extracted_operators.size()}};
    if (!r.extracted_operators.empty()) {
        Json spectra = Json::array();
        for (const auto& g : r.extracted_operators) spectra.push_back(eig_spectrum(g));
        j["extracted_spectra"] = std::move(spectra);
    }
}

inline void to_json(Json& j, const ScreenCheck& c) { j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

inline void to_json(Json& j, const ScreenReport& r) {
    j = {{"d", r.d},
         {"N", r.N},
         {"M", r.M},
         {"regime", to_string(r.regime)},
         {"x_optimal", r.x_optimal},
         {"gamma", r.gamma},
         {"informationally_complete", r.informationally_complete},
         {"projector_rank", r.projector_rank ? Json(*r.projector_rank) : Json(nullptr)},
         {"checks", r.checks},
         {"reasons", r.reasons},
         {"excluded", r.excluded},
         {"construction_known", r.construction_known},
         {"verdict", r.verdict}};
}

inline void to_json(Json& j, const SimplexRadiiReport& r) {
    j = {{"d", r.d},
         {"M", r.M},
         {"trace", r.trace},
         {"centroid_value", r.centroid_value},
         {"centroid_residual", r.centroid_residual},
         {"r_in_sq_explicit", r.r_in_sq_explicit},
         {"r_in_sq_bracket", r.r_in_sq_bracket},
         {"r_in_sq_closed", r.r_in_sq_closed},
         {"agreement", r.agreement},
         {"agree", r.agree}};
}

inline void to_json(Json& j, const CurvePoint& p) { j = {{"d", p.d}, {"M", p.M}, {"R", p.R}}; }

/// Summary plus the full mask; the grid itself goes to CSV.
inline Json scan_to_json(const RegionScan& s, bool include_grid) {
    int count = 0;
    for (auto v : s.psd) count += v;
    Json j = {{"d", s.d},
              {"M", s.M},
              {"mu", s.mu},
              {"nu", s.nu},
              {"n", s.n},
              {"r", s.r},
              {"step", s.step()},
              {"tol", s.tol},
              {"r_in", s.r_in},
              {"r_out", s.r_out},
              {"psd_fraction", static_cast<double>(count) / static_cast<double>(s.psd.size())},
              {"inner_disc_violations", disc_violations(s, s.r_in)},
              {"star_shape_violations", star_shape_violations(s)}};
    if (!s.triangle.empty()) j["triangle"] = s.triangle;
    if (include_grid) {
        j["min_eig"] = s.min_eig;
        j["psd"] = s.psd;
    }
    return j;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_scan_csv(std::ostream& out, const RegionScan& s) {
    out << "u,v,min_eig,psd\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            out << format_double(s.coordinate(i)) << ',' << format_double(s.coordinate(j)) << ','
                << format_double(s.min_eig[s.flat(i, j)]) << ',' << static_cast<int>(s.psd[s.flat(i, j)]) << '\n';
        }
    }
}

inline void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& curve) {
    out << "d,R\n";
    for (const auto& p : curve) out << p.d << ',' << format_double(p.R) << '\n';
}

}  // namespace povm
