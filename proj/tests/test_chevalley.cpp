#include "hess/orbitctx.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hess;

namespace {

std::shared_ptr<const LieContext> lie(const std::string& t) {
    static std::map<std::string, std::shared_ptr<const LieContext>> cache;
    auto& c = cache[t];
    if (!c) c = LieContext::make(t);
    return c;
}

QLiePoly E(const Chevalley&, int b, std::size_t nv = 0) { return QLiePoly::basis(nv, b); }

void expect_jacobi(const Chevalley& ch, int a, int b, int c) {
    QLiePoly x = E(ch, a), y = E(ch, b), z = E(ch, c);
    QLiePoly s = ch.bracket(x, ch.bracket(y, z)) + ch.bracket(y, ch.bracket(z, x)) + ch.bracket(z, ch.bracket(x, y));
    EXPECT_TRUE(s.is_zero()) << a << " " << b << " " << c;
}

/// n_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1) by three exponentials.
QLiePoly n_by_exponentials(const Chevalley& ch, int i, const QLiePoly& x) {
    const RootSystem& rs = ch.roots();
    QPoly one = QPoly::constant(x.nvars(), Q(1));
    QLiePoly r = ch.apply_unipotent(i, one, x);
    r = ch.apply_unipotent(rs.neg(i), -one, r);
    return ch.apply_unipotent(i, one, r);
}

}  // namespace

TEST(Chevalley, JacobiG2Exhaustive) {
    const Chevalley& ch = *lie("G2")->ch;
    ASSERT_EQ(ch.dim(), 14);
    for (int a = 0; a < ch.dim(); ++a)
        for (int b = 0; b < ch.dim(); ++b)
            for (int c = 0; c < ch.dim(); ++c) expect_jacobi(ch, a, b, c);
}

TEST(Chevalley, JacobiF4RootTriples) {
    const Chevalley& ch = *lie("F4")->ch;
    int nr = ch.nroots();
    for (int a = 0; a < nr; ++a)
        for (int b = a + 1; b < nr; ++b)
            for (int c = b + 1; c < nr; ++c) {
                const RootSystem& rs = ch.roots();
                // triples with no pairwise sum in Φ ∪ {0} bracket to zero trivially
                bool touch = rs.add(a, b) >= 0 || rs.add(b, c) >= 0 || rs.add(a, c) >= 0 || b == rs.neg(a) ||
                             c == rs.neg(a) || c == rs.neg(b);
                if (touch) expect_jacobi(ch, a, b, c);
            }
}

TEST(Chevalley, JacobiE6Sampled) {
    const Chevalley& ch = *lie("E6")->ch;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, ch.dim() - 1);
    for (int k = 0; k < 3000; ++k) expect_jacobi(ch, pick(rng), pick(rng), pick(rng));
}

TEST(Chevalley, StructureConstantsAgainstRootStrings) {
    for (const char* t : {"G2", "F4", "B3"}) {
        const Chevalley& ch = *lie(t)->ch;
        const RootSystem& rs = ch.roots();
        for (int g = 0; g < rs.num_roots(); ++g)
            for (int d = 0; d < rs.num_roots(); ++d) {
                EXPECT_EQ(ch.N(g, d), -ch.N(d, g));
                if (rs.add(g, d) < 0) {
                    EXPECT_EQ(ch.N(g, d), 0);
                    continue;
                }
                int p = rs.root_string(d, g).first;
                EXPECT_EQ(std::abs(ch.N(g, d)), p + 1) << t;
            }
    }
    const RootSystem& g2 = *lie("G2")->rs;
    const Chevalley& ch = *lie("G2")->ch;
    int a = g2.index_of({1, 0}), b = g2.index_of({0, 1}), ba = g2.index_of({1, 1});
    EXPECT_EQ(std::abs(ch.N(a, b)), 1);
    EXPECT_EQ(std::abs(ch.N(a, ba)), 2);
}

TEST(Chevalley, SL2Relations) {
    const Chevalley& a1 = *lie("A1")->ch;
    auto [e, h, f] = a1.sl2_triple(0);
    EXPECT_EQ(a1.bracket(e, f), h);
    EXPECT_EQ(a1.bracket(h, e), Q(2) * e);
    const Chevalley& ch = *lie("G2")->ch;
    const RootSystem& rs = ch.roots();
    for (int g = 0; g < rs.num_positive(); ++g) EXPECT_NO_THROW(ch.sl2_triple(g));
    auto values = [&](Root r) {
        auto [e2, h2, f2] = ch.sl2_triple(rs.index_of(r));
        return ch.simple_values(ch.h_coords(h2));
    };
    EXPECT_EQ(values({3, 2}), (QVector{Q(0), Q(1)}));
    EXPECT_EQ(values({2, 1}), (QVector{Q(1), Q(0)}));
    EXPECT_THROW(ch.sl2_triple(rs.neg(0)), ChevalleyError);
}

TEST(Chevalley, AlphaFlowOnG2a1Representative) {
    const Chevalley& ch = *lie("G2")->ch;
    const RootSystem& rs = ch.roots();
    int a = rs.index_of({1, 0}), ba = rs.index_of({1, 1}), b2a = rs.index_of({2, 1}), b3a = rs.index_of({3, 1});
    QLiePoly N = QLiePoly::basis(1, ba) + QLiePoly::basis(1, b3a);
    QPoly z = QPoly::var(1, 0);
    QLiePoly r = ch.apply_unipotent(a, z, N);
    EXPECT_EQ(r.support(), (std::vector<int>{ba, b2a, b3a}));
    QPoly c2 = r.coeff(b2a), c3 = r.coeff(b3a);
    Q c = c2.coeff({1});
    Q cp = c3.coeff({2});
    EXPECT_NE(c, Q(0));
    EXPECT_NE(cp, Q(0));
    EXPECT_EQ(c2, c * z);
    EXPECT_EQ(c3, QPoly::constant(1, Q(1)) + cp * z * z);
    EXPECT_EQ(r.coeff(ba), QPoly::constant(1, Q(1)));
    // c = N_{α,β+α}, c' = N_{α,β+α} N_{α,β+2α} / 2
    EXPECT_EQ(c, Q(ch.N(a, ba)));
    EXPECT_EQ(cp, Q(ch.N(a, ba) * ch.N(a, b2a)) / Q(2));
}

TEST(Chevalley, UnipotentInverseCancels) {
    const Chevalley& ch = *lie("G2")->ch;
    QPoly z = QPoly::var(1, 0);
    for (int g = 0; g < ch.nroots(); ++g)
        for (int b = 0; b < ch.dim(); ++b) {
            QLiePoly x = QLiePoly::basis(1, b);
            EXPECT_EQ(ch.apply_unipotent(g, -z, ch.apply_unipotent(g, z, x)), x);
        }
}

TEST(Chevalley, UnipotentIsAutomorphism) {
    const Chevalley& ch = *lie("G2")->ch;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, ch.dim() - 1), root(0, ch.nroots() - 1);
    QPoly z = QPoly::var(2, 0) + Q(3) * QPoly::var(2, 1);
    for (int k = 0; k < 200; ++k) {
        int g = root(rng);
        QLiePoly x = QLiePoly::basis(2, pick(rng)), y = QLiePoly::basis(2, pick(rng));
        EXPECT_EQ(ch.apply_unipotent(g, z, ch.bracket(x, y)),
                  ch.bracket(ch.apply_unipotent(g, z, x), ch.apply_unipotent(g, z, y)));
    }
}

TEST(Chevalley, WeylGeneratorMatchesExponentials) {
    for (const char* t : {"A1", "G2", "F4"}) {
        const Chevalley& ch = *lie(t)->ch;
        for (std::size_t i = 0; i < ch.roots().rank(); ++i)
            for (int b = 0; b < ch.dim(); ++b) {
                QLiePoly x = QLiePoly::basis(0, b);
                QLiePoly expect = n_by_exponentials(ch, static_cast<int>(i), x);
                EXPECT_EQ(ch.apply_n(static_cast<int>(i), false, x), expect) << t;
                EXPECT_EQ(ch.apply_n(static_cast<int>(i), true, expect), x) << t;
            }
    }
}

TEST(Chevalley, A1WeylRepresentative) {
    const Chevalley& ch = *lie("A1")->ch;
    QLiePoly e = QLiePoly::basis(0, 0);
    EXPECT_EQ(ch.weyl_rep_action(ch.weyl().simple(0), e), Q(-1) * QLiePoly::basis(0, 1));
    EXPECT_EQ(ch.weyl_rep_action(ch.weyl().identity(), e), e);
}

TEST(Chevalley, WeylRepresentativesPermuteWithSigns) {
    const Chevalley& ch = *lie("G2")->ch;
    const WeylGroup& W = ch.weyl();
    for (Elem w = 0; w < W.size(); ++w)
        for (int g = 0; g < ch.nroots(); ++g) {
            QLiePoly img = ch.weyl_rep_action(w, QLiePoly::basis(0, g));
            ASSERT_EQ(img.support(), std::vector<int>{W.act(w, g)});
            Q c = img.coeff(W.act(w, g)).constant_term();
            EXPECT_TRUE(c == Q(1) || c == Q(-1));
            EXPECT_EQ(ch.weyl_rep_inverse_action(w, img), QLiePoly::basis(0, g));
        }
}

TEST(Chevalley, WeylRepresentativesComposeUpToTorus) {
    const Chevalley& ch = *lie("G2")->ch;
    const WeylGroup& W = ch.weyl();
    for (Elem u = 0; u < W.size(); ++u)
        for (Elem v = 0; v < W.size(); ++v)
            for (int g = 0; g < ch.nroots(); ++g) {
                QLiePoly x = QLiePoly::basis(0, g);
                QLiePoly a = ch.weyl_rep_action(u, ch.weyl_rep_action(v, x));
                QLiePoly b = ch.weyl_rep_action(W.mul(u, v), x);
                ASSERT_EQ(a.support(), b.support());
                Q ca = a.terms().begin()->second.constant_term(), cb = b.terms().begin()->second.constant_term();
                EXPECT_TRUE(ca == cb || ca == -cb);
            }
}

TEST(Chevalley, RegularTriples) {
    const Chevalley& g2 = *lie("G2")->ch;
    const RootSystem& rs = g2.roots();
    auto t = g2.regular_nilpotent_sl2(rs.closed_subsystem({0, 1}));
    EXPECT_EQ(t.h, (QVector{Q(6), Q(10)}));
    EXPECT_EQ(g2.bracket(t.H, t.N), Q(2) * t.N);
    EXPECT_EQ(g2.bracket(t.N, t.Y), t.H);

    const Chevalley& a1 = *lie("A1")->ch;
    EXPECT_EQ(a1.regular_nilpotent_sl2(a1.roots().closed_subsystem({0})).h, QVector{Q(1)});

    const Chevalley& f4 = *lie("F4")->ch;
    const RootSystem& f = f4.roots();
    std::vector<int> gens;
    for (Root r : {Root{1, 1, 2, 0}, Root{1, 1, 0, 0}, Root{0, 0, 1, 1}, Root{0, 1, 1, 0}}) gens.push_back(f.index_of(r));
    auto tf = f4.regular_nilpotent_sl2(f.closed_subsystem(gens));
    for (int g : gens) EXPECT_EQ(f4.root_value(g, tf.h), Q(2));
    EXPECT_EQ(f4.simple_values(tf.h), (QVector{Q(0), Q(2), Q(0), Q(2)}));
}

TEST(Chevalley, Printing) {
    const Chevalley& ch = *lie("G2")->ch;
    const RootSystem& rs = ch.roots();
    int ba = rs.index_of({1, 1}), b3a = rs.index_of({3, 1});
    QLiePoly x = QLiePoly::basis(1, ba) + QPoly::var(1, 0) * QLiePoly::basis(1, b3a);
    EXPECT_EQ(ch.str(x, {"z"}), "E_{β+α} + z·E_{β+3α}");
    EXPECT_EQ(ch.basis_ascii(ba), "E[beta+alpha]");
    EXPECT_EQ(ch.basis_name(ch.h_label(0)), "H_{α}");
}

TEST(OrbitContext, G2Orbits) {
    auto L = lie("G2");
    std::map<std::string, std::pair<int, std::vector<int>>> expect{
        {"0", {0, {0, 0}}}, {"A1", {6, {0, 1}}}, {"A1t", {8, {1, 0}}}, {"G2a1", {10, {0, 2}}}, {"G2", {12, {2, 2}}}};
    for (const auto& key : supported_orbits("G2")) {
        OrbitContext ctx = orbit_context(L, key);
        EXPECT_EQ(ctx.orbit_dim, expect.at(key).first) << key;
        EXPECT_EQ(ctx.drawn_diagram(), expect.at(key).second) << key;
        EXPECT_EQ(ctx.ch().bracket(ctx.H, ctx.N), Q(2) * ctx.N);
        if (key != "0") {
            EXPECT_EQ(ctx.ch().bracket(ctx.N, ctx.Y), ctx.H);
        }
    }
    EXPECT_EQ(orbit_context(L, "Ã1").key, "A1t");
    EXPECT_EQ(orbit_label_of("G2", "G2a1"), "G2(a1)");
    EXPECT_THROW(orbit_context(L, "B2"), OrbitError);
}

TEST(OrbitContext, G2RegularGrading) {
    OrbitContext ctx = orbit_context(lie("G2"), "G2");
    EXPECT_EQ(ctx.h, (QVector{Q(6), Q(10)}));
    EXPECT_TRUE(ctx.levi_simples.empty());
}

TEST(OrbitContext, G2a1Grading) {
    OrbitContext ctx = orbit_context(lie("G2"), "G2a1");
    const RootSystem& rs = ctx.rs();
    EXPECT_EQ(ctx.levi_simples, std::vector<int>{0});
    std::vector<int> g2 = ctx.roots_of_degree(2);
    std::set<Root> got;
    for (int g : g2) got.insert(rs.root(g));
    EXPECT_EQ(got, (std::set<Root>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST(OrbitContext, ExceptionalRepresentatives) {
    OrbitContext f = orbit_context(lie("F4"), "F4a2");
    EXPECT_EQ(f.diagram, (std::vector<int>{0, 2, 0, 2}));
    EXPECT_EQ(f.orbit_dim, 44);
    EXPECT_EQ(f.levi_simples, (std::vector<int>{0, 2}));
    EXPECT_EQ(f.subsystem_type, "A1+C3");

    OrbitContext e = orbit_context(lie("E6"), "E6a3");
    EXPECT_EQ(e.drawn_diagram(), (std::vector<int>{2, 0, 0, 2, 0, 2}));
    EXPECT_EQ(e.orbit_dim, 66);
    EXPECT_EQ(e.levi_simples.size(), 3u);
}
