#pragma once
// JSON views of the library objects. Key order is insertion order, so dumps are stable.

#include "hess/hessfibers.hpp"
#include "hess/reptheory.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hess {

using Json = nlohmann::ordered_json;

/// Names of the simple reflections as used in reduced words ("s","t" for G2, "s1".."sn" otherwise).
inline std::vector<std::string> reflection_names(const RootSystem& rs) {
    if (rs.label() == "G2") return {"s", "t"};
    std::vector<std::string> r;
    for (std::size_t i = 0; i < rs.rank(); ++i) r.push_back("s" + std::to_string(i + 1));
    return r;
}

inline Json root_names_json(const RootSystem& rs, const std::vector<int>& roots) {
    Json a = Json::array();
    for (int g : roots) a.push_back(rs.name(g));
    return a;
}

inline Json to_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["simple_roots"] = rs.simple_names();
    Json pos = Json::array(), names = Json::array(), lengths = Json::array();
    for (int i = 0; i < rs.num_positive(); ++i) {
        pos.push_back(rs.root(i));
        names.push_back(rs.name(i));
        lengths.push_back(rs.norm(i));
    }
    j["positive_roots"] = pos;
    j["names"] = names;
    j["lengths"] = lengths;
    return j;
}

/// Reduced word of w over named simple reflections.
inline Json weyl_word_json(const WeylGroup& W, Elem w) {
    auto refl = reflection_names(W.roots());
    Json a = Json::array();
    for (int i : W.word(w)) a.push_back(refl[static_cast<std::size_t>(i)]);
    return a;
}

inline Json weyl_element_json(const WeylGroup& W, Elem w) {
    Json j;
    j["word"] = weyl_word_json(W, w);
    j["length"] = W.length(w);
    j["inversions"] = root_names_json(W.roots(), W.inversion_set(w));
    return j;
}

inline Json to_json(const WeylGroup& W, bool with_elements) {
    Json j;
    j["type"] = W.roots().label();
    j["order"] = W.size();
    j["longest"] = weyl_word_json(W, W.longest());
    std::vector<int> hist(static_cast<std::size_t>(W.length(W.longest())) + 1, 0);
    for (Elem w = 0; w < W.size(); ++w) ++hist[static_cast<std::size_t>(W.length(w))];
    j["length_distribution"] = hist;
    if (with_elements) {
        Json els = Json::array();
        for (Elem w = 0; w < W.size(); ++w) els.push_back(weyl_element_json(W, w));
        j["elements"] = els;
    }
    return j;
}

/// Term list [{basis, label, coefficient}] with coefficients rendered as polynomials.
inline Json lie_poly_json(const Chevalley& ch, const QLiePoly& x, const std::vector<std::string>& vars = {}) {
    Json a = Json::array();
    for (const auto& [b, p] : x.terms()) {
        Json t;
        t["basis"] = ch.basis_name(b);
        t["label"] = ch.basis_ascii(b);
        t["coefficient"] = p.str(vars);
        a.push_back(t);
    }
    return a;
}

inline Json to_json(const HessIdeal& I, const RootSystem& rs) {
    Json j;
    j["name"] = I.name;
    j["ascii"] = I.ascii;
    j["size"] = I.size();
    j["generators"] = root_names_json(rs, I.generators);
    j["roots"] = root_names_json(rs, I.roots);
    return j;
}

inline Json to_json(const OrbitContext& ctx) {
    const RootSystem& rs = ctx.rs();
    Json j;
    j["type"] = rs.label();
    j["label"] = ctx.label;
    j["key"] = ctx.key;
    j["subsystem"] = ctx.subsystem_type;
    j["dim"] = ctx.orbit_dim;
    j["N"] = lie_poly_json(ctx.ch(), ctx.N);
    Json h = Json::array();
    for (const Q& c : ctx.h) h.push_back(to_string(c));
    j["H"] = h;
    j["diagram"] = ctx.drawn_diagram();
    j["levi_simples"] = root_names_json(rs, ctx.levi_simples);
    Json deg = Json::object();
    int top = *std::max_element(ctx.grade.begin(), ctx.grade.end());
    for (int i = 0; i <= top; ++i) {
        std::vector<int> roots;
        for (int g : ctx.roots_of_degree(i))
            if (i > 0 || rs.is_positive(g)) roots.push_back(g);
        deg[std::to_string(i)] = root_names_json(rs, roots);
    }
    j["degrees"] = deg;
    return j;
}

inline Json to_json(const FiberPaving& p) {
    Json j;
    j["orbit"] = p.orbit;
    j["ideal"] = p.ideal;
    Json cells = Json::array();
    for (const auto& c : p.cells) cells.push_back({{"v", c.v}, {"dim", c.dim}, {"descriptor", c.descriptor}});
    j["cells"] = cells;
    j["betti"] = p.betti;
    j["components"] = p.components;
    return j;
}

/// Same as to_json(FiberPaving) but with v rendered as a reduced word.
inline Json to_json(const FiberPaving& p, const WeylGroup& W) {
    Json j = to_json(p);
    for (std::size_t k = 0; k < p.cells.size(); ++k) j["cells"][k]["v"] = W.name(p.cells[k].v);
    return j;
}

inline Json to_json(const Quintuple& q, const WeylGroup& W) {
    const RootSystem& rs = W.roots();
    Json j;
    j["orbit"] = q.orbit;
    j["ideal"] = q.ideal;
    j["v"] = W.name(q.v);
    j["up_cap"] = root_names_json(rs, q.up_cap);
    j["g2_cap"] = root_names_json(rs, q.g2_cap);
    j["nonempty"] = q.nonempty;
    if (q.nonempty) {
        j["dim_P"] = q.dim_P;
        j["dim_L"] = q.dim_L;
        j["r"] = q.r;
    }
    return j;
}

inline Json to_json(const ZeroSet& z) {
    Json j;
    j["locus"] = z.describe();
    j["tag"] = z.tag();
    j["dim"] = z.dim;
    j["residual"] = z.residual;
    if (!z.points.empty()) j["points"] = z.points;
    return j;
}

inline Json to_json(const StableClassification& sc, const FiberEngine& e) {
    const OrbitContext& ctx = e.context();
    const RootSystem& rs = ctx.rs();
    Json j;
    j["orbit"] = sc.orbit;
    j["levi_dim"] = sc.levi_dim;
    j["variables"] = e.var_names();
    Json shapes = Json::array();
    for (const auto& s : e.levi_cells())
        shapes.push_back({{"pattern", s.pattern},
                          {"dim", s.vars.size()},
                          {"expansion", lie_poly_json(ctx.ch(), s.expansion, e.var_names())}});
    j["cells"] = shapes;
    Json subs = Json::array();
    for (const auto& s : sc.subspaces) {
        Json o;
        o["removed"] = root_names_json(rs, s.removed);
        o["codim"] = s.codim();
        o["nonempty"] = s.nonempty();
        Json cells = Json::array();
        for (const auto& c : s.cells) {
            Json cj{{"pattern", c.shape->pattern}};
            cj.update(to_json(c.zeros));
            cells.push_back(cj);
        }
        o["cells"] = cells;
        subs.push_back(o);
    }
    j["subspaces"] = subs;
    Json groups = Json::array();
    for (const auto& g : sc.groups) groups.push_back({{"codim", g.codim}, {"members", g.members}});
    j["groups"] = groups;
    return j;
}

inline Json multiplicities_json(const Multiplicities& m) {
    Json j;
    for (int k = 0; k < kIrreps; ++k) {
        const Z& c = m[static_cast<std::size_t>(k)];
        j[irrep_names()[static_cast<std::size_t>(k)]] = static_cast<long long>(c);
    }
    return j;
}

inline Json to_json(const GradedCharacter& P) {
    Json a = Json::array();
    for (std::size_t i = 0; i < P.coeffs.size(); ++i)
        a.push_back({{"degree", i}, {"multiplicities", multiplicities_json(P.coeffs[i])}});
    return a;
}

inline Json to_json(const DotActionResult& r) {
    Json j;
    j["ideal"] = r.ideal.name;
    j["poincare"] = to_json(r.poincare);
    j["max_orbit"] = r.max_orbit;
    Json ic = Json::array();
    for (const auto& s : r.ic) ic.push_back({{"orbit", s.orbit}, {"local_system", s.local_system}, {"shift", s.shift}});
    j["ic"] = ic;
    j["remainder"] = {{"1", static_cast<long long>(r.remainder[0])},
                      {"ε₁", static_cast<long long>(r.remainder[1])},
                      {"χ₂", static_cast<long long>(r.remainder[2])}};
    return j;
}

/// One regular Hessenberg Betti table: cell dimension (or null) for every w.
struct BettiTable {
    HessIdeal ideal;
    std::vector<int> levi;
    std::vector<std::optional<int>> cells;  // indexed by Elem
    std::vector<int> betti;
};

inline BettiTable betti_table(const WeylGroup& W, const HessIdeal& I, const std::vector<int>& J) {
    BettiTable t;
    t.ideal = I;
    t.levi = J;
    for (Elem w = 0; w < W.size(); ++w) t.cells.push_back(precup_cell_dim(W, I, J, w));
    t.betti = regular_hess_betti(W, I, J);
    return t;
}

inline Json to_json(const BettiTable& t, const WeylGroup& W) {
    const RootSystem& rs = W.roots();
    Json j;
    j["ideal"] = t.ideal.name;
    Json J = Json::array();
    for (int s : t.levi) J.push_back(rs.simple_names()[static_cast<std::size_t>(s)]);
    j["levi"] = J;
    Json cells = Json::array();
    for (Elem w = 0; w < W.size(); ++w) {
        const auto& d = t.cells[static_cast<std::size_t>(w)];
        cells.push_back({{"w", W.name(w)}, {"dim", d ? Json(*d) : Json(nullptr)}});
    }
    j["cells"] = cells;
    j["betti"] = t.betti;
    return j;
}

}  // namespace hess
