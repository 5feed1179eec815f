#pragma once
// Nilpotent orbit contexts: representative, grading, Levi data and recorded A(N) actions.

#include "hess/chevalley.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

/// Root system, Weyl group and Chevalley basis of one type, shared by everything built on it.
struct LieContext {
    std::shared_ptr<const RootSystem> rs;
    std::shared_ptr<const WeylGroup> W;
    std::shared_ptr<const Chevalley> ch;

    static std::shared_ptr<const LieContext> make(const std::string& type) {
        auto ctx = std::make_shared<LieContext>();
        ctx->rs = std::make_shared<const RootSystem>(RootSystem::from_type(type));
        ctx->W = std::make_shared<const WeylGroup>(ctx->rs);
        ctx->ch = std::make_shared<const Chevalley>(ctx->rs, ctx->W);
        return ctx;
    }
};

/**
 * Recorded component-group action on fiber cohomology.
 *
 * For each ideal (ASCII name) and each q-degree, the sizes of the A(N)-orbits
 * on the cell basis of that degree. Only S3 and the trivial group occur.
 */
struct ComponentActionData {
    std::string group_label = "trivial";
    std::map<std::string, std::map<int, std::vector<int>>> orbits;
};

class OrbitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GradingSpaces {
    std::vector<int> levi_roots;   // gamma(H) = 0
    std::vector<int> up_roots;     // gamma(H) > 0
    std::vector<int> up_ge2_roots; // gamma(H) >= 2
    std::vector<int> g2_roots;     // gamma(H) = 2
};

struct OrbitContext {
    std::shared_ptr<const LieContext> lie;
    std::string label;                  // e.g. "G2(a1)"
    std::string key;                    // e.g. "G2a1"
    std::vector<int> generators;        // root indices
    std::string subsystem_type;
    QLiePoly N, H, Y;
    QVector h;                          // H in the simple coroot basis
    std::vector<int> grade;             // gamma(H) per root index
    std::vector<int> diagram;           // alpha_i(H), simple-root order
    std::vector<int> expected_diagram;  // drawing order
    std::vector<int> levi_simples;
    std::vector<std::string> levi_vars; // one indeterminate per Levi simple root
    int orbit_dim = 0;
    ComponentActionData an;

    const RootSystem& rs() const { return *lie->rs; }
    const WeylGroup& W() const { return *lie->W; }
    const Chevalley& ch() const { return *lie->ch; }

    std::vector<int> roots_of_degree(int i) const {
        std::vector<int> r;
        for (int g = 0; g < rs().num_roots(); ++g)
            if (grade[g] == i) r.push_back(g);
        return r;
    }

    GradingSpaces grading_spaces() const {
        GradingSpaces s;
        for (int g = 0; g < rs().num_roots(); ++g) {
            if (grade[g] == 0) s.levi_roots.push_back(g);
            if (grade[g] > 0) s.up_roots.push_back(g);
            if (grade[g] >= 2) s.up_ge2_roots.push_back(g);
            if (grade[g] == 2) s.g2_roots.push_back(g);
        }
        return s;
    }

    bool verify_weighted_diagram() const {
        std::vector<int> vals;
        for (std::size_t i = 0; i < rs().rank(); ++i) vals.push_back(grade[i]);
        return rs().in_bourbaki_order(vals) == expected_diagram;
    }

    bool is_levi_simple(int i) const {
        return std::find(levi_simples.begin(), levi_simples.end(), i) != levi_simples.end();
    }

    /// Weighted diagram in drawing order.
    std::vector<int> drawn_diagram() const { return rs().in_bourbaki_order(diagram); }
};

namespace detail {

struct OrbitRecord {
    std::string type, label, key;
    std::vector<Root> generators;
    std::vector<int> diagram;  // drawing order
    std::vector<std::string> vars;
};

inline const std::vector<OrbitRecord>& orbit_registry() {
    static const std::vector<OrbitRecord> reg{
        {"G2", "0", "0", {}, {0, 0}, {"z1", "z2"}},
        {"G2", "A1", "A1", {{3, 2}}, {0, 1}, {"z"}},
        {"G2", "Ã1", "A1t", {{2, 1}}, {1, 0}, {"z"}},
        {"G2", "G2(a1)", "G2a1", {{1, 1}, {3, 1}}, {0, 2}, {"z"}},
        {"G2", "G2", "G2", {{1, 0}, {0, 1}}, {2, 2}, {}},
        {"F4", "F4(a2)", "F4a2", {{1, 1, 2, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 0}}, {0, 2, 0, 2}, {"z1", "z3"}},
        {"E6",
         "E6(a3)",
         "E6a3",
         {{0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 1, 0, 0, 1}, {1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 0, 1}},
         {2, 0, 0, 2, 0, 2},
         {"z1", "z2", "z3"}},
    };
    return reg;
}

inline ComponentActionData component_action_data(const std::string& type, const std::string& key) {
    ComponentActionData d;
    if (type == "G2" && key == "G2a1") {
        d.group_label = "S3";
        d.orbits = {
            {"I_beta_alpha", {{0, {3}}}},
            {"I_alpha", {{0, {3}}, {1, {3}}}},
            {"I_beta", {{0, {1}}, {1, {1}}}},
            {"I_alphabeta", {{0, {1}}, {1, {3, 1}}}},
        };
    }
    return d;
}

}  // namespace detail

inline std::vector<std::string> supported_orbits(const std::string& type) {
    std::vector<std::string> r;
    for (const auto& rec : detail::orbit_registry())
        if (rec.type == type) r.push_back(rec.key);
    return r;
}

inline std::string supported_orbit_list(const std::string& type) {
    std::string s;
    for (const auto& k : supported_orbits(type)) s += (s.empty() ? "" : ", ") + k;
    return s.empty() ? "(none)" : s;
}

/// Display label of a registered orbit key, e.g. "A1t" -> "Ã1".
inline std::string orbit_label_of(const std::string& type, const std::string& key) {
    for (const auto& rec : detail::orbit_registry())
        if (rec.type == type && rec.key == key) return rec.label;
    return key;
}

/// Build and verify the context of a registered orbit; label may be the key or display label.
inline OrbitContext orbit_context(std::shared_ptr<const LieContext> lie, const std::string& label) {
    const RootSystem& rs = *lie->rs;
    const detail::OrbitRecord* rec = nullptr;
    for (const auto& r : detail::orbit_registry())
        if (r.type == rs.label() && (r.key == label || r.label == label)) rec = &r;
    if (!rec)
        throw OrbitError("unsupported orbit '" + label + "' for type " + rs.label() + "; supported: " +
                         supported_orbit_list(rs.label()));
    const Chevalley& ch = *lie->ch;
    OrbitContext ctx;
    ctx.lie = lie;
    ctx.label = rec->label;
    ctx.key = rec->key;
    ctx.expected_diagram = rec->diagram;
    ctx.an = detail::component_action_data(rs.label(), rec->key);
    for (const Root& g : rec->generators) {
        int idx = rs.index_of(g);
        if (idx < 0) throw OrbitError("orbit generator is not a root");
        ctx.generators.push_back(idx);
    }
    std::size_t n = rs.rank();
    if (ctx.generators.empty()) {
        ctx.N = ctx.H = ctx.Y = QLiePoly(0);
        ctx.h.assign(n, Q(0));
        ctx.subsystem_type = "";
    } else {
        Subsystem sub = rs.closed_subsystem(ctx.generators);
        ctx.subsystem_type = sub.type;
        auto t = ch.regular_nilpotent_sl2(sub);
        ctx.N = t.N;
        ctx.H = t.H;
        ctx.Y = t.Y;
        ctx.h = t.h;
    }
    ctx.grade.resize(static_cast<std::size_t>(rs.num_roots()));
    for (int g = 0; g < rs.num_roots(); ++g) {
        Q v = ch.root_value(g, ctx.h);
        if (!is_integer(v)) throw OrbitError("non-integral grading");
        ctx.grade[g] = static_cast<int>(numer(v));
        if (rs.is_positive(g) && ctx.grade[g] < 0) throw OrbitError("grading element is not dominant");
    }
    for (std::size_t i = 0; i < n; ++i) {
        ctx.diagram.push_back(ctx.grade[i]);
        if (ctx.grade[i] == 0) ctx.levi_simples.push_back(static_cast<int>(i));
    }
    if (rec->vars.size() >= ctx.levi_simples.size())
        ctx.levi_vars.assign(rec->vars.begin(), rec->vars.begin() + static_cast<long>(ctx.levi_simples.size()));
    for (int g : ctx.N.support())
        if (ctx.grade[g] != 2) throw OrbitError("representative is not in g(2)");
    if (ch.bracket(ctx.H, ctx.N) != Q(2) * ctx.N) throw OrbitError("[H, N] != 2N");
    if (!ctx.verify_weighted_diagram()) throw OrbitError("weighted diagram mismatch for " + ctx.label);
    int g0 = static_cast<int>(n) + static_cast<int>(ctx.roots_of_degree(0).size());
    int g1 = static_cast<int>(ctx.roots_of_degree(1).size());
    ctx.orbit_dim = ch.dim() - g0 - g1;
    return ctx;
}

}  // namespace hess
