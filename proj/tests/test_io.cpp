#include <gtest/gtest.h>

#include <sstream>

#include "equibouquet/certificate.hpp"
#include "equibouquet/constructions.hpp"
#include "equibouquet/export.hpp"
#include "equibouquet/jsonio.hpp"

namespace equibouquet {
namespace {

TEST(GroupElementJson, TextForm) {
    const GroupElement h({0, 1, 0}, Permutation::from_one_based({2, 1, 3}));
    EXPECT_EQ(to_json_value(h).dump(), R"({"perm":[2,1,3],"signs":[0,1,0]})");
    EXPECT_EQ(group_element_from_json(json::parse(R"({"signs":[0,1,0],"perm":[2,1,3]})")), h);
    EXPECT_EQ(to_json_value(GroupElement::identity(2)).dump(), R"({"perm":[1,2],"signs":[0,0]})");
}

TEST(GroupElementJson, RejectsMalformed) {
    EXPECT_THROW(group_element_from_json(json::parse(R"({"signs":[0,2],"perm":[1,2]})")), ParseError);
    EXPECT_THROW(group_element_from_json(json::parse(R"({"signs":[0,1],"perm":[1,1]})")), ParseError);
    EXPECT_THROW(group_element_from_json(json::parse(R"({"signs":[0,1,0],"perm":[1,2]})")), ParseError);
    EXPECT_THROW(group_element_from_json(json::parse(R"({"perm":[1,2]})")), ParseError);
}

TEST(EmbeddingJson, RoundTripIsBitExact) {
    for (const EmbeddedBouquet& e : {construction_b(3), compactify(construction_a(3)), b2_demo()}) {
        const std::string text = to_json_value(e).dump();
        const EmbeddedBouquet back = bouquet_from_json(json::parse(text));
        EXPECT_EQ(to_json_value(back).dump(), text);
        EXPECT_EQ(back.post_map, e.post_map);
        for (int i = 0; i < e.genus; ++i) {
            EXPECT_EQ(back.circles[i].center, e.circles[i].center);
            EXPECT_EQ(back.circles[i].axis_w, e.circles[i].axis_w);
        }
        EXPECT_EQ(to_json_value(verify_all(back)).dump(), to_json_value(verify_all(e)).dump());
        EXPECT_EQ(to_json_value(certify(back)).dump(), to_json_value(certify(e)).dump());
    }
}

TEST(EmbeddingJson, SchemaFields) {
    const json j = to_json_value(compactify(construction_a(2)));
    EXPECT_EQ(j.at("genus"), 2);
    EXPECT_EQ(j.at("ambient_dim"), 4);
    EXPECT_EQ(j.at("post_map"), "inverse_stereographic");
    EXPECT_EQ(j.at("circles").size(), 2u);
    EXPECT_EQ(j.at("circles")[0].at("center").size(), 3u);
    EXPECT_EQ(j.at("representation").at("rho")[0].size(), 16u);
    EXPECT_TRUE(j.at("representation").at("tau_generators").contains("(1 2)"));
}

TEST(EmbeddingJson, RejectsMalformed) {
    json good = to_json_value(construction_b(2));
    auto broken = [&](auto mutate) {
        json j = good;
        mutate(j);
        return j;
    };
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j.erase("genus"); })), ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["post_map"] = "mercator"; })), ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["circles"].erase(0); })), ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["circles"][0]["center"] = {1, 2}; })), ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["representation"]["rho"][0] = {1, 0, 0}; })),
                 ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["representation"]["tau_generators"].erase("(1 2)"); })),
                 ParseError);
    EXPECT_THROW(bouquet_from_json(broken([](json& j) { j["circles"][1]["axis_u"][0] = "x"; })), ParseError);
    EXPECT_THROW(bouquet_from_json(json::parse("[1,2,3]")), ParseError);
}

TEST(EmbeddingJson, CorruptedValuesGiveStructuredFailures) {
    json j = to_json_value(construction_b(3));
    j["representation"]["rho"][1][0] = 1.5;
    j["circles"][2]["center"][0] = 0.3;
    const auto reports = verify_all(bouquet_from_json(j));
    EXPECT_FALSE(all_pass(reports));
    int failures = 0;
    for (const auto& r : reports) {
        if (!r.pass) {
            ++failures;
            EXPECT_FALSE(r.witness.is_null()) << r.check;
        }
    }
    EXPECT_GE(failures, 2);
}

TEST(ThetaJson, RoundTrip) {
    const ThetaEmbedding e = m3_demo();
    const json j = to_json_value(e);
    EXPECT_TRUE(is_theta_document(j));
    EXPECT_FALSE(is_theta_document(to_json_value(construction_b(2))));
    const ThetaEmbedding back = theta_from_json(json::parse(j.dump()));
    EXPECT_EQ(to_json_value(back).dump(), j.dump());
    EXPECT_TRUE(all_pass(verify_theta(back)));
}

TEST(Export, OffCountsVerticesAndFaces) {
    const auto lines = sample_bouquet(construction_b(3), 256);
    std::istringstream in(to_off(lines));
    std::string header;
    int dim = 0, nv = 0, nf = 0, ne = -1;
    in >> header >> dim >> nv >> nf >> ne;
    EXPECT_EQ(header, "nOFF");
    EXPECT_EQ(dim, 6);
    EXPECT_EQ(nv, 3 * 256);
    EXPECT_EQ(nf, 3);
    EXPECT_EQ(ne, 0);
    std::vector<double> coords(static_cast<std::size_t>(nv * dim));
    for (auto& c : coords) in >> c;
    for (int f = 0; f < nf; ++f) {
        int count = 0;
        in >> count;
        EXPECT_EQ(count, 256);
        int first = -1, idx = 0;
        for (int k = 0; k < count; ++k) {
            in >> idx;
            if (k == 0) first = idx;
        }
        EXPECT_EQ(first, f * 256);
        EXPECT_EQ(idx, f * 256 + 255);
    }
    EXPECT_TRUE(static_cast<bool>(in));
}

TEST(Export, ThreeDimensionalOffHeader) {
    const std::string off = to_off(sample_bouquet(b2_demo(), 8));
    EXPECT_EQ(off.rfind("OFF\n16 2 0\n", 0), 0u);
}

TEST(Export, CsvRows) {
    const std::string csv = to_csv(sample_bouquet(construction_b(2), 4));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "curve,k,param,x1,x2,x3,x4");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 8);
}

TEST(Export, ThetaPolylinesAreOpen) {
    const auto lines = sample_theta(m3_demo(), 5);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_FALSE(lines[0].closed);
    EXPECT_NEAR(lines[0].points.front()(2), 1.0, 1e-15);
    EXPECT_NEAR(lines[0].points.back()(2), -1.0, 1e-15);
    EXPECT_EQ(polylines_to_json(lines).at("polylines").size(), 3u);
}

}  // namespace
}  // namespace equibouquet
