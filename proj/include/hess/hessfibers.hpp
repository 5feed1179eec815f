#pragma once
// Hessenberg ideals, quintuples, Levi fibers, affine pavings and stable-subspace grids.

#include "hess/orbitctx.hpp"
#include "hess/zeroset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

class FiberError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper set of positive roots (an ad-nilpotent ideal of b, recorded by its roots).
struct HessIdeal {
    std::vector<int> roots;       // sorted root indices
    std::vector<int> generators;  // minimal elements
    std::string name;             // e.g. "I_{β+α}"
    std::string ascii;            // e.g. "I_beta_alpha"

    bool contains(int g) const { return std::binary_search(roots.begin(), roots.end(), g); }
    std::size_t size() const { return roots.size(); }
};

namespace detail {

inline std::vector<int> minimal_roots(const RootSystem& rs, const std::vector<int>& up) {
    std::set<int> s(up.begin(), up.end());
    std::vector<int> mins;
    for (int g : up) {
        bool minimal = true;
        for (std::size_t i = 0; i < rs.rank() && minimal; ++i) {
            int d = rs.index_of([&] {
                Root r = rs.root(g);
                r[i] -= 1;
                return r;
            }());
            if (d >= 0 && rs.is_positive(d) && s.count(d)) minimal = false;
        }
        if (minimal) mins.push_back(g);
    }
    return mins;
}

inline std::string ascii_token(std::string s) {
    std::replace(s.begin(), s.end(), '+', '_');
    return s;
}

}  // namespace detail

inline HessIdeal make_ideal(const RootSystem& rs, std::vector<int> roots) {
    std::sort(roots.begin(), roots.end());
    HessIdeal I;
    I.roots = roots;
    I.generators = detail::minimal_roots(rs, roots);
    if (roots.empty()) {
        I.name = "I_∅";
        I.ascii = "I_emptyset";
        return I;
    }
    std::string n, a;
    for (int g : I.generators) {
        n += (n.empty() ? "" : ",") + rs.name(g);
        a += detail::ascii_token(rs.ascii_name(g));
    }
    I.name = "I_{" + n + "}";
    I.ascii = "I_" + a;
    return I;
}

/// All upper sets of the positive root poset, ordered by size then by sorted root indices.
inline std::vector<HessIdeal> hessenberg_ideals(const RootSystem& rs) {
    std::vector<int> order(static_cast<std::size_t>(rs.num_positive()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rs.height(a) > rs.height(b); });
    std::vector<std::vector<int>> found;
    std::vector<char> in(static_cast<std::size_t>(rs.num_positive()), 0);
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            found.push_back(cur);
            return;
        }
        int g = order[k];
        self(self, k + 1);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            int up = rs.add(g, static_cast<int>(i));
            if (up >= 0 && !in[up]) return;
        }
        in[g] = 1;
        cur.push_back(g);
        self(self, k + 1);
        cur.pop_back();
        in[g] = 0;
    };
    rec(rec, 0);
    for (auto& f : found) std::sort(f.begin(), f.end());
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<HessIdeal> r;
    for (auto& f : found) r.push_back(make_ideal(rs, f));
    return r;
}

/// Look an ideal up by its display or ASCII name.
inline HessIdeal find_ideal(const RootSystem& rs, const std::string& name) {
    auto all = hessenberg_ideals(rs);
    std::string avail;
    for (auto& I : all) {
        if (I.name == name || I.ascii == name) return I;
        avail += (avail.empty() ? "" : ", ") + I.ascii;
    }
    if (all.size() > 16) avail = std::to_string(all.size()) + " ideals, see the ideals command";
    throw FiberError("unknown ideal '" + name + "'; available: " + avail);
}

/// Roots of the Hessenberg space M containing b attached to I: all roots except -I.
inline std::vector<int> ideal_dual(const RootSystem& rs, const HessIdeal& I) {
    std::vector<int> m;
    for (int g = 0; g < rs.num_roots(); ++g)
        if (rs.is_positive(g) || !I.contains(rs.neg(g))) m.push_back(g);
    return m;
}

struct Quintuple {
    std::string orbit, ideal;
    Elem v = 0;
    std::vector<int> up_cap;  // roots of u_P^{>=2} ∩ v.I
    std::vector<int> g2_cap;  // roots of g(2) ∩ v.I
    bool nonempty = false;
    int dim_P = -1, dim_L = -1, r = -1;
};

/// One Bruhat cell of L/(L∩B) with the expansion of g^{-1}.N along it.
struct LeviCellShape {
    Elem y = 0;
    std::vector<int> roots;        // Φ_y, one coordinate each
    std::vector<std::size_t> vars; // coordinate variable indices
    QLiePoly expansion;            // g^{-1}.N, lies in g(2)
    std::string pattern;           // "CCI"-style for products of A1 factors, else the word of y
};

struct LeviCell {
    const LeviCellShape* shape = nullptr;
    std::vector<int> constraint_roots;
    ZeroSet zeros;
};

struct PavingCell {
    Elem v = 0, y = 0, w = 0;
    int levi_dim = 0;  // dimension of the affine piece inside L/(L∩B)
    int r = 0;
    int dim = 0;
    int piece = 0;     // index among the pieces of the same Levi cell
    std::string locus;
    std::string descriptor;
};

struct FiberPaving {
    std::string orbit, ideal;
    std::vector<PavingCell> cells;
    std::vector<int> betti;  // b_{2i}
    int components = 0;
    bool empty() const { return cells.empty(); }
    int dim() const { return betti.empty() ? -1 : static_cast<int>(betti.size()) - 1; }
};

struct StableSubspace {
    std::vector<int> removed;  // g(2) roots not in U
    std::vector<int> U;
    std::vector<LeviCell> cells;
    int codim() const { return static_cast<int>(removed.size()); }
    bool nonempty() const {
        return std::any_of(cells.begin(), cells.end(), [](const LeviCell& c) { return !c.zeros.empty(); });
    }
};

struct SubspaceGroup {
    int codim = 0;
    std::vector<std::size_t> members;  // indices into the subspace list
};

struct StableClassification {
    std::string orbit;
    int levi_dim = 0;
    std::vector<StableSubspace> subspaces;
    std::vector<SubspaceGroup> groups;  // codimensions strictly between 0 and levi_dim
};

/**
 * @brief Fiber computations over one orbit context.
 *
 * Levi cells are x_{γ1}(z_{γ1})...x_{γk}(z_{γk}) n_y (L∩B) with Φ_y = {γ1..γk};
 * the point lies in the fiber iff g^{-1}.N ∈ U.
 */
class FiberEngine {
public:
    explicit FiberEngine(OrbitContext ctx) : ctx_(std::move(ctx)) {
        const RootSystem& rs = ctx_.rs();
        const WeylGroup& W = ctx_.W();
        spaces_ = ctx_.grading_spaces();
        for (int g : spaces_.levi_roots)
            if (rs.is_positive(g)) levi_pos_.push_back(g);
        a1_product_ = levi_pos_.size() == ctx_.levi_simples.size();
        if (a1_product_ && ctx_.levi_vars.size() == levi_pos_.size()) {
            var_names_ = ctx_.levi_vars;
        } else {
            for (std::size_t i = 0; i < levi_pos_.size(); ++i) var_names_.push_back("z" + std::to_string(i + 1));
        }
        coset_reps_ = W.min_coset_reps(ctx_.levi_simples);
        std::size_t nv = levi_pos_.size();
        QLiePoly n0(nv);
        for (const auto& [b, p] : ctx_.N.terms()) n0.add(b, QPoly::constant(nv, p.constant_term()));
        for (Elem y : W.parabolic_subgroup(ctx_.levi_simples)) {
            LeviCellShape s;
            s.y = y;
            s.roots = W.inversion_set(y);
            GroupWord g;
            const auto& word = W.word(y);
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                g.push_back({GroupFactor::WeylGenInverse, *it, QPoly(nv)});
            for (auto it = s.roots.rbegin(); it != s.roots.rend(); ++it) {
                std::size_t var = static_cast<std::size_t>(
                    std::find(levi_pos_.begin(), levi_pos_.end(), *it) - levi_pos_.begin());
                if (var == nv) throw FiberError("inversion root outside the Levi");
                g.push_back({GroupFactor::Unipotent, *it, Q(-1) * QPoly::var(nv, var)});
            }
            for (int gamma : s.roots)
                s.vars.push_back(static_cast<std::size_t>(
                    std::find(levi_pos_.begin(), levi_pos_.end(), gamma) - levi_pos_.begin()));
            std::sort(s.vars.begin(), s.vars.end());
            s.expansion = ctx_.ch().act(g, n0);
            for (int b : s.expansion.support())
                if (b >= rs.num_roots() || ctx_.grade[b] != 2)
                    throw FiberError("Levi cell expansion leaves g(2)");
            if (a1_product_) {
                for (std::size_t k = 0; k < nv; ++k)
                    s.pattern += std::find(s.vars.begin(), s.vars.end(), k) != s.vars.end() ? 'C' : 'I';
            } else {
                s.pattern = W.name(y);
            }
            shapes_.push_back(std::move(s));
        }
        std::stable_sort(shapes_.begin(), shapes_.end(), [](const LeviCellShape& a, const LeviCellShape& b) {
            if (a.vars.size() != b.vars.size()) return a.vars.size() > b.vars.size();
            return a.vars < b.vars;
        });
    }

    FiberEngine(const FiberEngine&) = delete;
    FiberEngine& operator=(const FiberEngine&) = delete;
    FiberEngine(FiberEngine&&) = default;

    const OrbitContext& context() const { return ctx_; }
    const std::vector<LeviCellShape>& levi_cells() const { return shapes_; }
    const std::vector<Elem>& coset_reps() const { return coset_reps_; }
    const std::vector<std::string>& var_names() const { return var_names_; }
    bool levi_is_a1_product() const { return a1_product_; }
    int levi_dim() const { return static_cast<int>(levi_pos_.size()); }
    const std::vector<int>& g2_roots() const { return spaces_.g2_roots; }

    /// Coefficient of E_gamma in the expansion on a Levi cell.
    QPoly coefficient(const LeviCellShape& s, int gamma) const { return s.expansion.coeff(gamma); }

    /// Levi Hessenberg variety {g(L∩B) : g^{-1}.N ∈ U} cell by cell; U is a set of g(2) roots.
    std::vector<LeviCell> levi_fiber(const std::vector<int>& U) const {
        std::set<int> us(U.begin(), U.end());
        for (int g : us)
            if (ctx_.grade[g] != 2) throw FiberError("levi_fiber: U is not inside g(2)");
        std::vector<LeviCell> out;
        for (const auto& s : shapes_) {
            LeviCell c;
            c.shape = &s;
            std::vector<QPoly> eqs;
            for (int g : spaces_.g2_roots) {
                if (us.count(g)) continue;
                c.constraint_roots.push_back(g);
                eqs.push_back(s.expansion.coeff(g));
            }
            c.zeros = classify_zero_set(eqs, s.vars, var_names_);
            out.push_back(std::move(c));
        }
        return out;
    }

    /// True when U is stable under the positive Levi roots.
    bool is_stable(const std::vector<int>& U) const {
        std::set<int> us(U.begin(), U.end());
        const RootSystem& rs = ctx_.rs();
        for (int g : us)
            for (int d : levi_pos_) {
                int s = root_sum(g, d);
                if (s >= 0 && !us.count(s)) return false;
            }
        (void)rs;
        return true;
    }

    Quintuple quintuple(const HessIdeal& I, Elem v) const {
        const RootSystem& rs = ctx_.rs();
        const WeylGroup& W = ctx_.W();
        if (!W.is_min_rep(v, ctx_.levi_simples))
            throw FiberError("quintuple: " + W.name(v) + " is not a minimal coset representative");
        Quintuple q;
        q.orbit = ctx_.label;
        q.ideal = I.name;
        q.v = v;
        Elem vi = W.inverse(v);
        auto in_vI = [&](int g) {
            int h = W.act(vi, g);
            return rs.is_positive(h) && I.contains(h);
        };
        for (int g : spaces_.up_ge2_roots)
            if (in_vI(g)) q.up_cap.push_back(g);
        for (int g : spaces_.g2_roots)
            if (in_vI(g)) q.g2_cap.push_back(g);
        std::vector<int> inv = W.inversion_set(v);
        std::set<int> invs(inv.begin(), inv.end());
        std::set<int> upc(q.up_cap.begin(), q.up_cap.end());
        for (int g : q.up_cap)
            for (int d = 0; d < rs.num_positive(); ++d) {
                if (invs.count(d)) continue;
                int s = root_sum(g, d);
                if (s >= 0 && !upc.count(s)) throw std::logic_error("quintuple: u_P^{>=2} ∩ v.I is not stable");
            }
        if (!is_stable(q.g2_cap)) throw std::logic_error("quintuple: g(2) ∩ v.I is not stable");
        auto cells = levi_fiber(q.g2_cap);
        q.nonempty = std::any_of(cells.begin(), cells.end(), [](const LeviCell& c) { return !c.zeros.empty(); });
        if (q.nonempty) {
            int codim_up = static_cast<int>(spaces_.up_ge2_roots.size() - q.up_cap.size());
            int codim_g2 = static_cast<int>(spaces_.g2_roots.size() - q.g2_cap.size());
            q.dim_P = levi_dim() + W.length(v) - codim_up;
            q.dim_L = levi_dim() - codim_g2;
            q.r = q.dim_P - q.dim_L;
            if (q.r < 0) throw std::logic_error("quintuple: negative fiber rank");
        }
        return q;
    }

    /// Affine paving of the Hessenberg fiber over the orbit for the ideal I.
    FiberPaving paving(const HessIdeal& I) const {
        const WeylGroup& W = ctx_.W();
        FiberPaving fp;
        fp.orbit = ctx_.label;
        fp.ideal = I.name;
        for (Elem v : coset_reps_) {
            Quintuple q = quintuple(I, v);
            if (!q.nonempty) continue;
            for (const auto& c : levi_fiber(q.g2_cap)) {
                if (c.zeros.empty()) continue;
                if (!c.zeros.is_affine_union())
                    throw FiberError("fiber over " + ctx_.label + " for " + I.name + " is not paved by affines at v=" +
                                     W.name(v));
                auto dims = c.zeros.piece_dims();
                for (std::size_t k = 0; k < dims.size(); ++k) {
                    PavingCell pc;
                    pc.v = v;
                    pc.y = c.shape->y;
                    pc.w = W.mul(pc.y, v);
                    pc.levi_dim = dims[k];
                    pc.r = q.r;
                    pc.dim = dims[k] + q.r;
                    pc.piece = static_cast<int>(k);
                    pc.locus = c.zeros.describe();
                    pc.descriptor = "v=" + W.name(v) + "; y=" + W.name(pc.y) + "; locus=" + pc.locus +
                                    (c.zeros.points.empty() ? "" : " {" + join(c.zeros.points) + "}") +
                                    (dims.size() > 1 ? "; piece=" + std::to_string(k + 1) + "/" + std::to_string(dims.size()) : "") +
                                    "; r=" + std::to_string(q.r);
                    fp.cells.push_back(std::move(pc));
                }
            }
        }
        for (const auto& c : fp.cells) {
            if (static_cast<int>(fp.betti.size()) <= c.dim) fp.betti.resize(static_cast<std::size_t>(c.dim) + 1, 0);
            ++fp.betti[static_cast<std::size_t>(c.dim)];
        }
        fp.components = fp.betti.empty() ? 0 : fp.betti[0];
        return fp;
    }

    /// Every L∩B-stable U ⊂ g(2) of codimension at most max_codim, with its Levi fiber.
    std::vector<StableSubspace> stable_subspaces(int max_codim) const {
        const auto& g2 = spaces_.g2_roots;
        std::vector<StableSubspace> out;
        std::vector<int> removed;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            std::vector<int> U;
            for (int g : g2)
                if (std::find(removed.begin(), removed.end(), g) == removed.end()) U.push_back(g);
            if (is_stable(U)) {
                StableSubspace s;
                s.removed = removed;
                s.U = U;
                s.cells = levi_fiber(U);
                out.push_back(std::move(s));
            }
            if (static_cast<int>(removed.size()) == max_codim) return;
            for (std::size_t i = start; i < g2.size(); ++i) {
                removed.push_back(g2[i]);
                self(self, i + 1);
                removed.pop_back();
            }
        };
        rec(rec, 0);
        std::stable_sort(out.begin(), out.end(), [](const StableSubspace& a, const StableSubspace& b) {
            if (a.removed.size() != b.removed.size()) return a.removed.size() < b.removed.size();
            return a.removed < b.removed;
        });
        return out;
    }

    /**
     * @brief Stable subspaces of codimension <= max(3, dim L/(L∩B)) grouped by their grid shape.
     *
     * Two subspaces of the same codimension share a group when a permutation of the
     * Levi factors carries the dimension grid of one onto the other.
     */
    StableClassification classify() const {
        if (!a1_product_) throw FiberError("classify: Levi is not a product of A1 factors");
        StableClassification sc;
        sc.orbit = ctx_.label;
        sc.levi_dim = levi_dim();
        sc.subspaces = stable_subspaces(std::max(3, sc.levi_dim));
        std::map<std::pair<int, std::vector<int>>, std::size_t> index;
        for (std::size_t i = 0; i < sc.subspaces.size(); ++i) {
            const auto& s = sc.subspaces[i];
            if (s.codim() == 0 || s.codim() >= sc.levi_dim) continue;
            auto key = std::make_pair(s.codim(), grid_signature(s));
            auto it = index.find(key);
            if (it == index.end()) {
                index[key] = sc.groups.size();
                sc.groups.push_back({s.codim(), {i}});
            } else {
                sc.groups[it->second].members.push_back(i);
            }
        }
        return sc;
    }

    std::string subspace_name(const StableSubspace& s) const {
        std::string r;
        for (int g : s.removed) r += (r.empty() ? "" : ",") + ctx_.rs().name(g);
        return "g(2) minus {" + r + "}";
    }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    }

    int root_sum(int a, int b) const {
        const RootSystem& rs = ctx_.rs();
        Root r = rs.root(a);
        const Root& d = rs.root(b);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += d[i];
        return rs.index_of(r);
    }

    std::vector<int> grid_signature(const StableSubspace& s) const {
        std::size_t nv = levi_pos_.size();
        std::vector<std::size_t> perm(nv);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            std::map<std::vector<std::size_t>, int> dims;
            for (const auto& c : s.cells) {
                std::vector<std::size_t> image;
                for (std::size_t v : c.shape->vars) image.push_back(perm[v]);
                std::sort(image.begin(), image.end());
                dims[image] = c.zeros.dim;
            }
            std::vector<int> sig;
            for (const auto& sh : shapes_) sig.push_back(dims.at(sh.vars));
            if (best.empty() || sig < best) best = sig;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    OrbitContext ctx_;
    GradingSpaces spaces_;
    std::vector<int> levi_pos_;
    bool a1_product_ = false;
    std::vector<std::string> var_names_;
    std::vector<Elem> coset_reps_;
    std::vector<LeviCellShape> shapes_;
};

inline std::vector<HessIdeal> enumerate_ideals(const RootSystem& rs) { return hessenberg_ideals(rs); }

inline FiberPaving fiber_paving(const FiberEngine& e, const HessIdeal& I) { return e.paving(I); }

inline const std::vector<int>& fiber_betti(const FiberPaving& p) { return p.betti; }

inline StableClassification classify_quintuples_exceptional(const FiberEngine& e) { return e.classify(); }

}  // namespace hess
