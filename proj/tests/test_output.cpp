#include "hess/report.hpp"

#include <gtest/gtest.h>

#include <memory>

using namespace hess;

namespace {

std::shared_ptr<const LieContext> g2() {
    static auto lie = LieContext::make("G2");
    return lie;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Json, RootSystemShape) {
    Json j = to_json(*g2()->rs);
    EXPECT_EQ(j["type"], "G2");
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(j["lengths"].size(), 6u);
    EXPECT_EQ(j["cartan"], Json::parse("[[2,-3],[-1,2]]"));
    EXPECT_EQ(j["positive_roots"][5], Json::parse("[3,2]"));
    EXPECT_EQ(j["names"][0], "α");

    Json e6 = to_json(RootSystem::from_type("E6"));
    EXPECT_EQ(e6["positive_roots"].size(), 36u);
    EXPECT_EQ(to_json(RootSystem::from_type("A1"))["positive_roots"].size(), 1u);
}

TEST(Json, KeyOrderIsStable) {
    Json j = to_json(*g2()->rs);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"type", "rank", "cartan", "simple_roots", "positive_roots", "names", "lengths"}));
    EXPECT_EQ(j.dump(), to_json(*LieContext::make("G2")->rs).dump());
}

TEST(Json, WeylElements) {
    const WeylGroup& W = *g2()->W;
    Json j = to_json(W, true);
    EXPECT_EQ(j["order"], 12);
    EXPECT_EQ(j["elements"].size(), 12u);
    EXPECT_EQ(j["longest"].size(), 6u);
    EXPECT_EQ(j["length_distribution"], Json::parse("[1,2,2,2,2,2,1]"));
    for (const auto& e : j["elements"]) EXPECT_EQ(e["inversions"].size(), e["length"].get<std::size_t>());
    EXPECT_FALSE(to_json(W, false).contains("elements"));
}

TEST(Json, DotActionStructuredMultiplicities) {
    DotActionSolver solver(g2());
    Json j = to_json(solver.solve(find_ideal(*g2()->rs, "I_beta")));
    ASSERT_EQ(j["poincare"].size(), 2u);
    for (const auto& d : j["poincare"]) {
        const Json& m = d["multiplicities"];
        EXPECT_EQ(m["1"], 1);
        EXPECT_EQ(m["ε₁"], 1);
        EXPECT_EQ(m["ε₂"], 0);
        EXPECT_EQ(m["ε"], 0);
        EXPECT_EQ(m["χ₁"], 1);
        EXPECT_EQ(m["χ₂"], 1);
    }
    EXPECT_EQ(j["remainder"]["1"], 1);
    EXPECT_EQ(j["remainder"]["ε₁"], 1);
    EXPECT_EQ(j["remainder"]["χ₂"], 1);
}

TEST(Json, BettiTableUsesNullForEmptyCells) {
    const WeylGroup& W = *g2()->W;
    BettiTable t = betti_table(W, find_ideal(*g2()->rs, "I_beta_alpha"), {0, 1});
    Json j = to_json(t, W);
    ASSERT_EQ(j["cells"].size(), 12u);
    int nulls = 0;
    for (const auto& c : j["cells"]) nulls += c["dim"].is_null();
    EXPECT_EQ(nulls, 8);
    EXPECT_EQ(j["betti"], Json::parse("[1,2,1]"));
}

TEST(Text, TableAlignsByCodePoints) {
    TextTable t;
    t.row({"α", "x"});
    t.row({"abc", "y"});
    EXPECT_EQ(t.str(), "α    x\nabc  y\n");
    EXPECT_EQ(display_width("β+2α"), 4u);
}

TEST(Text, CsvQuoting) {
    EXPECT_EQ(csv_row({"a", "b,c", "d\"e"}), "a,\"b,c\",\"d\"\"e\"\n");
    EXPECT_EQ(tuple_str({1, 2, 1}), "(1,2,1)");
}

TEST(Text, RootsListing) {
    std::string s = roots_text(*g2()->rs);
    EXPECT_NE(s.find("6 positive roots"), std::string::npos);
    EXPECT_NE(s.find("2β+3α"), std::string::npos);
    EXPECT_EQ(count_lines(roots_csv(*g2()->rs)), 7u);
}

TEST(Text, FiberGridEntries) {
    std::vector<std::unique_ptr<FiberEngine>> engines;
    FiberGrid g;
    g.ideals = hessenberg_ideals(*g2()->rs);
    for (const auto& k : supported_orbits("G2")) {
        engines.push_back(std::make_unique<FiberEngine>(orbit_context(g2(), k)));
        g.orbits.push_back(engines.back().get());
    }
    for (const auto& I : g.ideals) {
        g.pavings.emplace_back();
        for (auto* e : g.orbits) g.pavings.back().push_back(e->paving(I));
    }
    std::string text = fibers_text(g);
    EXPECT_NE(text.find("I_{α}      G/B  (1,2,1)    (2,3,1)  (3,3)   ∅"), std::string::npos) << text;
    EXPECT_NE(text.find("I_{α,β}    G/B  (1,2,2,1)  (1,3,2)  (1,4)   (1)"), std::string::npos);
    EXPECT_EQ(text, fibers_text(g));
    EXPECT_EQ(count_lines(fibers_csv(g)), 41u);
    EXPECT_EQ(fibers_json(g).size(), 40u);
}

TEST(Text, DotActionRows) {
    DotActionSolver solver(g2());
    std::vector<DotActionResult> rs;
    for (const auto& I : hessenberg_ideals(*g2()->rs)) rs.push_back(solver.solve(I));
    std::string s = dot_action_text(rs);
    EXPECT_NE(s.find("(1+ε₁+χ₁+χ₂)(1+q)"), std::string::npos) << s;
    EXPECT_NE(s.find("1+ε₁+ε₂+ε+2χ₁+2χ₂"), std::string::npos);
    EXPECT_EQ(s.find("ψ111"), std::string::npos);
}
