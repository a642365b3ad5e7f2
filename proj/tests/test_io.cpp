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

#include <sstream>

#include <gtest/gtest.h>

#include "povm/io.hpp"
#include "povm/random.hpp"

namespace povm {
namespace {

double max_element_diff(const NMPovm& a, const NMPovm& b) {
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i)
        worst = std::max(worst, max_abs_diff(a.elements()[i].matrix(), b.elements()[i].matrix()));
    return worst;
}

TEST(Json, MatrixEncoding) {
    CMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(-1, 0);
    const Json j = matrix_to_json(m);
    EXPECT_EQ(j.dump(), "[[[1.0,0.0],[0.0,-0.5]],[[0.0,0.5],[-1.0,0.0]]]");
    EXPECT_EQ(matrix_from_json(j), m);
}

TEST(Json, MatrixRejectsMalformed) {
    EXPECT_THROW(matrix_from_json(Json::parse("[]")), StructureError);
    EXPECT_THROW(matrix_from_json(Json::parse("[[[1,0]],[[0,0],[1,0]]]")), StructureError);
    EXPECT_THROW(matrix_from_json(Json::parse("[[[1,0,0],[0,0]],[[0,0],[1,0]]]")), StructureError);
    EXPECT_THROW(matrix_from_json(Json::parse("[[\"a\",[0,0]],[[0,0],[1,0]]]")), StructureError);
}

TEST(Json, DoublesRoundTripExactly) {
    Rng rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
        const double v = u(rng) * std::pow(10.0, t % 30 - 15);
        EXPECT_EQ(Json::parse(Json(v).dump()).get<double>(), v);
    }
}

TEST(Json, PovmRoundTrip) {
    Rng rng(12);
    const OperatorBasis b = rotate_traceless(gell_mann_basis(4), random_orthogonal(15, rng));
    for (const NMPovm& p : {sufficient_construct(4, 5, 4, sufficient_x_bound(4, 4), b), optimal_n2_pauli(3, 9),
                            fixture_povm(Fixture::mub_d3), mum3_optimal_partition().povm}) {
        const std::string text = povm_to_json(p).dump();
        const NMPovm q = povm_from_json(Json::parse(text));
        EXPECT_EQ(q.params().x, p.params().x);
        EXPECT_LE(max_element_diff(p, q), 1e-14);
        const ValidationReport a = validate_povm(p), c = validate_povm(q);
        EXPECT_EQ(a.passed, c.passed);
        EXPECT_NEAR(a.max_residual(), c.max_residual(), 1e-14);
        EXPECT_EQ(povm_to_json(q).dump(), text);
    }
}

TEST(Json, PovmFileErrors) {
    EXPECT_THROW(povm_from_json(Json::parse(R"({"d":2,"N":1,"M":4})")), StructureError);
    const Json bad_x = {{"d", 2}, {"N", 1}, {"M", 4}, {"x", 0.125}, {"elements", Json::array()}};
    EXPECT_THROW(povm_from_json(bad_x), ParameterError);
    Json short_list = povm_to_json(fixture_povm(Fixture::sic_qubit));
    short_list["elements"].erase(0);
    EXPECT_THROW(povm_from_json(short_list), StructureError);
}

TEST(Json, BasisAndPartitionRoundTrip) {
    const OperatorBasis b = gell_mann_basis(3);
    const OperatorBasis c = basis_from_json(Json::parse(basis_to_json(b).dump()));
    ASSERT_EQ(c.size(), 9);
    for (int mu = 1; mu <= 9; ++mu) EXPECT_EQ(c.at(mu).matrix(), b.at(mu).matrix());
    const Partition p = fig1_partition();
    const Json pj = partition_to_json(p);
    EXPECT_EQ(pj.dump(), R"({"blocks":[[2,9],[8,3],[5,6],[4,7]],"d":3})");
    EXPECT_EQ(partition_from_json(pj).blocks, p.blocks);
    EXPECT_THROW(partition_from_json(Json::parse(R"({"d":3})")), StructureError);
}

TEST(Json, ReportsSerialize) {
    const NMPovm p = fixture_povm(Fixture::sic_qubit);
    const Json v = validate_povm(p);
    EXPECT_TRUE(v.at("passed").get<bool>());
    EXPECT_TRUE(v.at("residuals").contains("inter"));
    const Json n = check_optimal_m_ge_d(p);
    EXPECT_EQ(n.at("verdict"), "pass");
    EXPECT_EQ(n.at("extracted_operator_count"), 3);
    const Json s = feasibility_screen(5, 24, 2);
    EXPECT_EQ(s.at("reasons")[0], "d odd");
    const Json r = radii(3, 3);
    EXPECT_EQ(r.at("r_in_sq").get<double>(), 1.0 / 6.0);
}

TEST(Csv, ScanLayout) {
    const RegionScan s = region_scan(gell_mann_basis(3), 2, 9, 3, 16);
    std::ostringstream os;
    write_scan_csv(os, s);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "u,v,min_eig,psd");
    int rows = 0;
    std::string first;
    while (std::getline(in, line)) {
        if (rows == 1) first = line;
        ++rows;
    }
    EXPECT_EQ(rows, 256);
    // row-major: second row keeps u and advances v
    EXPECT_EQ(first.substr(0, first.find(',')), format_double(s.coordinate(0)));
}

TEST(Csv, Curve) {
    std::ostringstream os;
    write_curve_csv(os, ratio_curve(4, RatioRule::M_eq_2));
    EXPECT_EQ(os.str(), "d,R\n2,1\n3,0.5\n4,0.33333333333333331\n");
}

}  // namespace
}  // namespace povm
