#include "hess/reptheory.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace hess;

namespace {

std::shared_ptr<const LieContext> g2() {
    static auto c = LieContext::make("G2");
    return c;
}

DotActionSolver& solver() {
    static DotActionSolver s(g2());
    return s;
}

const WeylGroup& W() { return *g2()->W; }

HessIdeal ideal(const std::string& ascii) { return find_ideal(*g2()->rs, ascii); }

/// Multiplicities in the order 1, ε₁, ε₂, ε, χ₁, χ₂.
Multiplicities m(int a, int b, int c, int d, int e, int f) { return {Z(a), Z(b), Z(c), Z(d), Z(e), Z(f)}; }

/// Conjugacy classes by closing each element under conjugation.
std::vector<std::set<Elem>> brute_classes(const WeylGroup& w) {
    std::vector<std::set<Elem>> out;
    std::vector<bool> done(static_cast<std::size_t>(w.size()), false);
    for (Elem x = 0; x < w.size(); ++x) {
        if (done[x]) continue;
        std::set<Elem> cls;
        for (Elem g = 0; g < w.size(); ++g) cls.insert(w.mul(w.mul(g, x), w.inverse(g)));
        for (Elem y : cls) done[y] = true;
        out.push_back(cls);
    }
    return out;
}

/// Permutation character on right cosets W_J g, counted by acting on the coset sets.
std::vector<int> brute_induced(const WeylGroup& w, const std::vector<int>& J, const std::vector<Elem>& reps) {
    std::set<Elem> sub{w.identity()};
    for (bool grew = true; grew;) {
        grew = false;
        for (Elem a : std::set<Elem>(sub))
            for (int j : J) grew |= sub.insert(w.mul(a, w.simple(j))).second;
    }
    std::set<std::set<Elem>> cosets;
    for (Elem g = 0; g < w.size(); ++g) {
        std::set<Elem> c;
        for (Elem h : sub) c.insert(w.mul(h, g));
        cosets.insert(c);
    }
    std::vector<int> vals;
    for (Elem x : reps) {
        int fixed = 0;
        for (const auto& c : cosets) {
            std::set<Elem> moved;
            for (Elem y : c) moved.insert(w.mul(y, x));
            fixed += moved == c;
        }
        vals.push_back(fixed);
    }
    return vals;
}

std::vector<Elem> class_reps() {
    Elem s = W().simple(0), t = W().simple(1), st = W().mul(s, t);
    return {W().identity(), s, t, st, W().mul(st, st), W().mul(st, W().mul(st, st))};
}

}  // namespace

TEST(Characters, ClassSizesByBruteForce) {
    const G2Characters& ct = char_table_g2();
    auto classes = brute_classes(W());
    ASSERT_EQ(classes.size(), 6u);
    std::vector<int> sizes;
    for (Elem r : class_reps())
        for (const auto& c : classes)
            if (c.count(r)) sizes.push_back(static_cast<int>(c.size()));
    EXPECT_EQ(sizes, (std::vector<int>{1, 3, 3, 2, 2, 1}));
    EXPECT_EQ(ct.class_sizes(), sizes);
    for (Elem x = 0; x < W().size(); ++x)
        for (const auto& c : classes)
            if (c.count(x)) {
                EXPECT_TRUE(c.count(class_reps()[static_cast<std::size_t>(ct.class_of(x))]));
            }
}

TEST(Characters, TableValues) {
    const G2Characters& ct = char_table_g2();
    std::vector<std::vector<int>> expect{{1, 1, 1, 1, 1, 1},  {1, 1, -1, -1, 1, -1}, {1, -1, 1, -1, 1, -1},
                                         {1, -1, -1, 1, 1, 1}, {2, 0, 0, 1, -1, -2}, {2, 0, 0, -1, -1, 2}};
    for (int i = 0; i < kIrreps; ++i) {
        std::vector<Q> row;
        for (int v : expect[static_cast<std::size_t>(i)]) row.emplace_back(v);
        EXPECT_EQ(ct.irrep(i).values, row) << irrep_ascii()[static_cast<std::size_t>(i)];
    }
}

TEST(Characters, Orthogonality) {
    const G2Characters& ct = char_table_g2();
    std::vector<int> sizes{1, 3, 3, 2, 2, 1};
    for (int i = 0; i < kIrreps; ++i)
        for (int j = 0; j < kIrreps; ++j) {
            Q s(0);
            for (std::size_t c = 0; c < 6; ++c) s += Q(sizes[c]) * ct.irrep(i).values[c] * ct.irrep(j).values[c];
            EXPECT_EQ(s / Q(12), Q(i == j ? 1 : 0));
            EXPECT_EQ(ct.inner(ct.irrep(i), ct.irrep(j)), Q(i == j ? 1 : 0));
        }
    int sq = 0;
    for (int i = 0; i < kIrreps; ++i) sq += ct.dimension(i) * ct.dimension(i);
    EXPECT_EQ(sq, 12);
}

TEST(Characters, InducedFromParabolics) {
    const G2Characters& ct = char_table_g2();
    for (const auto& J : DotActionSolver::levi_subsets()) {
        std::vector<Q> brute;
        for (int v : brute_induced(W(), J, class_reps())) brute.emplace_back(v);
        EXPECT_EQ(ct.induce_trivial(J).values, brute);
    }
    EXPECT_EQ(ct.decompose(ct.induce_trivial({})), m(1, 1, 1, 1, 2, 2));
    EXPECT_EQ(ct.decompose(ct.induce_trivial({0})), m(1, 1, 0, 0, 1, 1));
    EXPECT_EQ(ct.decompose(ct.induce_trivial({1})), m(1, 0, 1, 0, 1, 1));
    EXPECT_EQ(ct.decompose(ct.induce_trivial({0, 1})), m(1, 0, 0, 0, 0, 0));
}

TEST(Characters, DecomposeRejectsNonCharacters) {
    const G2Characters& ct = char_table_g2();
    ClassFunction half = Q(1, 2) * ct.irrep(Triv);
    EXPECT_THROW(ct.decompose(half), RepError);
    EXPECT_EQ(ct.decompose(ct.from_multiplicities(m(0, 3, 1, 0, 2, 1))), m(0, 3, 1, 0, 2, 1));
    EXPECT_THROW(G2Characters(LieContext::make("B2")->W), RepError);
}

TEST(Springer, CorrespondenceTable) {
    std::map<std::pair<std::string, std::string>, std::optional<int>> got;
    for (const auto& e : springer_table_g2()) got[{e.orbit, e.local_system}] = e.irrep;
    EXPECT_EQ(got.size(), 7u);
    EXPECT_EQ(got[std::make_pair(std::string("0"), std::string("1"))], std::optional<int>(Triv));
    EXPECT_EQ(got[std::make_pair(std::string("A1"), std::string("1"))], std::optional<int>(Eps1));
    EXPECT_EQ(got[std::make_pair(std::string("A1t"), std::string("1"))], std::optional<int>(Chi2));
    EXPECT_EQ(got[std::make_pair(std::string("G2a1"), std::string("ψ3"))], std::optional<int>(Chi1));
    EXPECT_EQ(got[std::make_pair(std::string("G2a1"), std::string("ψ21"))], std::optional<int>(Eps2));
    EXPECT_FALSE(got[std::make_pair(std::string("G2a1"), std::string("ψ111"))].has_value());
    EXPECT_EQ(got[std::make_pair(std::string("G2"), std::string("1"))], std::optional<int>(Eps));
}

// ---- regular Hessenberg Betti tables ----

namespace {

struct BettiCase {
    std::string ideal;
    std::vector<int> J;
    std::map<std::string, int> cells;  // everything not listed is empty
};

const std::vector<BettiCase>& betti_cases() {
    static const std::vector<BettiCase> c{
        {"I_beta_alpha", {0, 1}, {{"e", 0}, {"r^-3", 2}, {"t", 1}, {"tr^-1", 1}}},
        {"I_beta_alpha", {1}, {{"e", 0}, {"tr^-1", 1}, {"tr^-2", 1}, {"tr^-3", 1}, {"r^-4", 1}, {"r^-5", 1}, {"t", 1}, {"r^-3", 2}}},
        {"I_alpha", {0}, {{"e", 0}, {"t", 1}, {"sr^2", 1}, {"sr^3", 1}, {"r^4", 0}, {"r^5", 0}}},
        {"I_alpha", {1}, {{"e", 0}, {"tr^-1", 0}, {"tr^-2", 0}, {"tr^-3", 0}, {"r^-4", 1}, {"r^-5", 1}, {"t", 1}, {"r^-3", 1}}},
        {"I_beta", {0}, {{"e", 0}, {"t", 0}, {"sr^2", 0}, {"sr^3", 0}, {"r^4", 1}, {"r^5", 1}, {"s", 1}, {"r^3", 1}}},
        {"I_beta", {1}, {{"e", 0}, {"tr^-1", 1}, {"tr^-2", 1}, {"tr^-3", 1}, {"r^-4", 0}, {"r^-5", 0}}},
    };
    return c;
}

}  // namespace

TEST(RegularBetti, AppendixTables) {
    for (const auto& bc : betti_cases()) {
        HessIdeal I = ideal(bc.ideal);
        std::map<Elem, int> expect;
        for (const auto& [name, d] : bc.cells) expect[W().parse(name)] = d;
        ASSERT_EQ(expect.size(), bc.cells.size());
        for (Elem w = 0; w < W().size(); ++w) {
            auto got = precup_cell_dim(W(), I, bc.J, w);
            auto it = expect.find(w);
            if (it == expect.end()) {
                EXPECT_FALSE(got.has_value()) << bc.ideal << " " << W().name(w);
            } else {
                ASSERT_TRUE(got.has_value()) << bc.ideal << " " << W().name(w);
                EXPECT_EQ(*got, it->second) << bc.ideal << " " << W().name(w);
            }
        }
    }
}

TEST(RegularBetti, TotalIsOrderOfW) {
    // Hess(M, x) for regular semisimple x (J empty) has Euler characteristic |W|
    for (const auto& I : enumerate_ideals(*g2()->rs)) {
        int total = 0;
        for (int b : regular_hess_betti(W(), I, {})) total += b;
        EXPECT_EQ(total, 12) << I.name;
    }
}

TEST(RegularBetti, RegularNilpotentCase) {
    // J = Δ: x_J is regular nilpotent; M = b gives a point and M = g gives G/B
    auto b = regular_hess_betti(W(), ideal("I_alphabeta"), {0, 1});
    EXPECT_EQ(b, std::vector<int>{1});
    EXPECT_EQ(regular_hess_betti(W(), ideal("I_emptyset"), {0, 1}), (std::vector<int>{1, 2, 2, 2, 2, 2, 1}));
}

// ---- dot action ----

namespace {

using Row = std::vector<Multiplicities>;

Multiplicities T(int n) { return m(n, 0, 0, 0, 0, 0); }

std::map<std::string, Row> table5() {
    return {
        {"I_emptyset", {T(1), T(2), T(2), T(2), T(2), T(2), T(1)}},
        {"I_2beta_3alpha", {T(1), T(2), m(2, 1, 0, 0, 0, 0), m(2, 1, 0, 0, 0, 0), T(2), T(1)}},
        {"I_beta_3alpha", {T(1), m(2, 1, 0, 0, 0, 0), m(2, 2, 0, 0, 0, 0), m(2, 1, 0, 0, 0, 0), T(1)}},
        {"I_beta_2alpha", {T(1), m(2, 1, 0, 0, 0, 1), m(2, 1, 0, 0, 0, 1), T(1)}},
        {"I_beta_alpha", {T(1), m(2, 1, 1, 0, 1, 2), T(1)}},
        {"I_alpha", {m(1, 0, 1, 0, 1, 1), m(1, 0, 1, 0, 1, 1)}},
        {"I_beta", {m(1, 1, 0, 0, 1, 1), m(1, 1, 0, 0, 1, 1)}},
        // the regular representation; the printed row drops ε and sums to 11
        {"I_alphabeta", {m(1, 1, 1, 1, 2, 2)}},
    };
}

}  // namespace

TEST(DotAction, AllRows) {
    auto rows = table5();
    for (const auto& I : enumerate_ideals(*g2()->rs)) {
        const DotActionResult& r = solver().solve(I);
        EXPECT_EQ(r.poincare.coeffs, rows.at(I.ascii)) << I.name << ": " << r.poincare.str();
    }
    EXPECT_EQ(dot_action(ideal("I_alpha")).coeffs, rows.at("I_alpha"));
}

TEST(DotAction, DimensionAndPalindromy) {
    for (const auto& r : solver().solve_all()) {
        EXPECT_EQ(r.poincare.total_dim(solver().characters()), Z(12)) << r.ideal.name;
        EXPECT_TRUE(r.poincare.palindromic()) << r.ideal.name;
        EXPECT_EQ(static_cast<int>(r.poincare.degree()), static_cast<int>(r.constants.n)) << r.ideal.name;
    }
}

TEST(DotAction, Remainders) {
    using R = std::array<Z, 3>;
    EXPECT_EQ(solver().solve(ideal("I_beta_alpha")).remainder, (R{Z(0), Z(0), Z(1)}));
    EXPECT_EQ(solver().solve(ideal("I_alpha")).remainder, (R{Z(1), Z(0), Z(1)}));
    EXPECT_EQ(solver().solve(ideal("I_beta")).remainder, (R{Z(1), Z(1), Z(1)}));
}

TEST(DotAction, NoSign111LocalSystem) {
    for (const auto& r : solver().solve_all())
        for (const auto& s : r.ic) EXPECT_NE(s.local_system, "ψ111") << r.ideal.name;
}

TEST(DotAction, ICSummandsOnMaximalOrbit) {
    const DotActionResult& r = solver().solve(ideal("I_alpha"));
    EXPECT_EQ(r.max_orbit, "G2a1");
    std::set<std::string> ls;
    for (const auto& s : r.ic) ls.insert(s.local_system);
    EXPECT_TRUE(ls.count("ψ3"));
    EXPECT_TRUE(ls.count("ψ21"));
    EXPECT_FALSE(r.connected);
    EXPECT_FALSE(solver().solve(ideal("I_beta")).connected);
    EXPECT_TRUE(solver().solve(ideal("I_beta_alpha")).connected);
    EXPECT_TRUE(solver().solve(ideal("I_emptyset")).connected);
}

TEST(DotAction, BettiCrossCheckAgainstInducedCharacters) {
    const G2Characters& ct = solver().characters();
    int checks = 0;
    for (const auto& I : enumerate_ideals(*g2()->rs))
        for (const auto& J : DotActionSolver::levi_subsets()) {
            const GradedCharacter& P = solver().solve(I).poincare;
            std::vector<int> betti = regular_hess_betti(W(), I, J);
            ClassFunction ind = ct.induce_trivial(J);
            ASSERT_EQ(betti.size(), P.coeffs.size()) << I.name;
            for (std::size_t i = 0; i < betti.size(); ++i)
                EXPECT_EQ(ct.inner(ct.from_multiplicities(P.coeffs[i]), ind), Q(betti[i])) << I.name << " deg " << i;
            ++checks;
        }
    EXPECT_EQ(checks, 32);
}

TEST(DotAction, Printing) {
    GradedCharacter P = solver().solve(ideal("I_beta_2alpha")).poincare;
    EXPECT_EQ(P.str(), "1 + (2+ε₁+χ₂)q + (2+ε₁+χ₂)q² + 1q³");
}

TEST(DotAction, OnlyG2) { EXPECT_THROW(DotActionSolver(LieContext::make("F4")), RepError); }
