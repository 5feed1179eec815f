#include "hess/weylgrp.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <set>

using hess::Elem;
using hess::RootSystem;
using hess::WeylGroup;

namespace {

std::shared_ptr<const WeylGroup> weyl(const std::string& type) {
    return std::make_shared<const WeylGroup>(std::make_shared<const RootSystem>(RootSystem::from_type(type)));
}

std::set<oracle::Vec> coords(const RootSystem& rs, const std::vector<int>& idx) {
    std::set<oracle::Vec> s;
    for (int i : idx) s.insert(rs.root(i));
    return s;
}

/// Brute-force w = y v: y ranges over W_J, v must have length l(w) - l(y) and no left descent in J.
std::pair<Elem, Elem> brute_decompose(const WeylGroup& W, Elem w, const std::vector<int>& J) {
    std::pair<Elem, Elem> found{-1, -1};
    int hits = 0;
    for (Elem y : W.parabolic_subgroup(J)) {
        Elem v = W.mul(W.inverse(y), w);
        bool min = true;
        for (int j : J) {
            Elem sv = W.mul(W.simple(j), v);
            if (W.length(sv) < W.length(v)) min = false;
        }
        if (min) {
            found = {y, v};
            ++hits;
        }
    }
    EXPECT_EQ(hits, 1);
    return found;
}

}  // namespace

TEST(WeylGroup, Orders) {
    EXPECT_EQ(weyl("A1")->size(), 2);
    EXPECT_EQ(weyl("A3")->size(), 24);
    EXPECT_EQ(weyl("B3")->size(), 48);
    EXPECT_EQ(weyl("D4")->size(), 192);
    EXPECT_EQ(weyl("G2")->size(), 12);
    EXPECT_EQ(weyl("F4")->size(), 1152);
    EXPECT_EQ(weyl("E6")->size(), 51840);
}

TEST(WeylGroup, LongestElementLength) {
    for (const char* t : {"G2", "F4", "E6"}) {
        auto W = weyl(t);
        EXPECT_EQ(W->length(W->longest()), W->roots().num_positive()) << t;
        EXPECT_EQ(static_cast<int>(W->inversion_set(W->longest()).size()), W->roots().num_positive());
    }
}

TEST(WeylGroup, InversionSetsMatchCoordinateScan) {
    for (const char* t : {"G2", "B3", "F4"}) {
        auto W = weyl(t);
        const RootSystem& rs = W->roots();
        for (Elem w = 0; w < W->size(); ++w) {
            auto expect = oracle::inversion_set(rs.cartan(), W->word(w));
            ASSERT_EQ(coords(rs, W->inversion_set(w)), expect) << t << " " << W->name(w);
            EXPECT_EQ(static_cast<int>(expect.size()), W->length(w));
        }
    }
}

TEST(WeylGroup, ActionMatchesReflectionFormula) {
    auto W = weyl("F4");
    const RootSystem& rs = W->roots();
    for (Elem w = 0; w < W->size(); w += 7)
        for (int g = 0; g < rs.num_roots(); ++g)
            EXPECT_EQ(rs.root(W->act(w, g)), oracle::act_word(rs.cartan(), W->word(w), rs.root(g)));
}

TEST(WeylGroup, GroupAxioms) {
    auto W = weyl("G2");
    for (Elem a = 0; a < W->size(); ++a) {
        EXPECT_EQ(W->mul(a, W->inverse(a)), W->identity());
        EXPECT_EQ(W->length(W->inverse(a)), W->length(a));
        for (Elem b = 0; b < W->size(); ++b)
            for (Elem c = 0; c < W->size(); ++c) EXPECT_EQ(W->mul(W->mul(a, b), c), W->mul(a, W->mul(b, c)));
    }
    Elem s = W->simple(0), t = W->simple(1), r = W->mul(s, t);
    Elem p = W->identity();
    for (int k = 0; k < 6; ++k) p = W->mul(p, r);
    EXPECT_EQ(p, W->identity());
}

TEST(WeylGroup, G2ParabolicDecompositionMatchesBruteForce) {
    auto W = weyl("G2");
    for (std::vector<int> J : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}})
        for (Elem w = 0; w < W->size(); ++w) EXPECT_EQ(W->parabolic_decompose(w, J), brute_decompose(*W, w, J));
}

TEST(WeylGroup, F4ParabolicDecompositionMatchesBruteForce) {
    auto W = weyl("F4");
    std::vector<int> J{0, 2};
    for (Elem w = 0; w < W->size(); ++w) EXPECT_EQ(W->parabolic_decompose(w, J), brute_decompose(*W, w, J));
}

TEST(WeylGroup, CosetCountsMultiply) {
    for (const char* t : {"G2", "F4", "E6"}) {
        auto W = weyl(t);
        std::size_t n = W->rank();
        for (unsigned mask = 0; mask < (1u << n); mask += (n > 4 ? 5 : 1)) {
            std::vector<int> J;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) J.push_back(static_cast<int>(i));
            EXPECT_EQ(W->parabolic_subgroup(J).size() * W->min_coset_reps(J).size(), static_cast<std::size_t>(W->size()));
        }
    }
}

TEST(WeylGroup, BruhatOrderBasics) {
    auto W = weyl("G2");
    for (Elem w = 0; w < W->size(); ++w) {
        EXPECT_TRUE(W->bruhat_leq(W->identity(), w));
        EXPECT_TRUE(W->bruhat_leq(w, W->longest()));
    }
    EXPECT_FALSE(W->bruhat_leq(W->simple(0), W->simple(1)));
    EXPECT_EQ(W->lower_interval(W->longest()).size(), 12u);
}

TEST(WeylGroup, G2NamesAndParsing) {
    auto W = weyl("G2");
    Elem s = W->simple(0), t = W->simple(1), r = W->mul(s, t);
    EXPECT_EQ(W->name(W->identity()), "e");
    EXPECT_EQ(W->name(r), "st");
    EXPECT_EQ(W->parse("e"), W->identity());
    EXPECT_EQ(W->parse("st"), r);
    EXPECT_EQ(W->parse("r^-1"), W->inverse(r));
    EXPECT_EQ(W->parse("r⁻¹"), W->inverse(r));
    EXPECT_EQ(W->parse("tr^-2"), W->mul(t, W->mul(W->inverse(r), W->inverse(r))));
    EXPECT_EQ(W->parse("sr^2"), W->mul(s, W->mul(r, r)));
    EXPECT_EQ(W->parse("r^3"), W->longest());
    for (Elem w = 0; w < W->size(); ++w) EXPECT_EQ(W->parse(W->name(w)), w);
    EXPECT_THROW(W->parse("q"), std::invalid_argument);
}

TEST(WeylGroup, WordParsingOtherTypes) {
    auto W = weyl("F4");
    for (Elem w = 0; w < W->size(); w += 13) EXPECT_EQ(W->parse(W->name(w)), w);
    EXPECT_EQ(W->parse("s1 s1"), W->identity());
}

TEST(WeylGroup, LengthDistributionIsPalindromic) {
    auto W = weyl("E6");
    std::map<int, int> h;
    for (Elem w = 0; w < W->size(); ++w) ++h[W->length(w)];
    int top = W->length(W->longest());
    for (const auto& [l, c] : h) EXPECT_EQ(c, h[top - l]);
}
