#pragma once
// Characters of W(G2), regular Hessenberg Betti numbers and the dot-action solver.

#include "hess/hessfibers.hpp"
#include "hess/linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

class RepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Irreducible characters of W(G2), in table order.
enum Irrep { Triv = 0, Eps1, Eps2, Eps, Chi1, Chi2 };
constexpr int kIrreps = 6;

inline const std::array<std::string, kIrreps>& irrep_names() {
    static const std::array<std::string, kIrreps> n{"1", "ε₁", "ε₂", "ε", "χ₁", "χ₂"};
    return n;
}
inline const std::array<std::string, kIrreps>& irrep_ascii() {
    static const std::array<std::string, kIrreps> n{"1", "eps1", "eps2", "eps", "chi1", "chi2"};
    return n;
}

/// Rational function on the conjugacy classes.
struct ClassFunction {
    std::vector<Q> values;

    ClassFunction() = default;
    explicit ClassFunction(std::vector<Q> v) : values(std::move(v)) {}

    ClassFunction& operator+=(const ClassFunction& o) {
        if (values.empty()) values.assign(o.values.size(), Q(0));
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator*(const Q& c, ClassFunction f) {
        for (auto& v : f.values) v *= c;
        return f;
    }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
        return r;
    }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

using Multiplicities = std::array<Z, kIrreps>;

/**
 * @brief Conjugacy classes and irreducible characters of W(G2).
 *
 * Classes are ordered as those of 1, s, t, st, (st)^2, (st)^3 with s, t the
 * reflections in the short and long simple roots.
 */
class G2Characters {
public:
    explicit G2Characters(std::shared_ptr<const WeylGroup> W) : W_(std::move(W)) {
        if (W_->roots().label() != "G2") throw RepError("character data is only available for G2");
        const WeylGroup& w = *W_;
        Elem s = w.simple(0), t = w.simple(1), st = w.mul(s, t);
        std::vector<Elem> reps{w.identity(), s, t, st, w.mul(st, st), w.mul(st, w.mul(st, st))};
        class_of_.assign(static_cast<std::size_t>(w.size()), -1);
        for (std::size_t c = 0; c < reps.size(); ++c) {
            std::vector<Elem> cls;
            for (Elem g = 0; g < w.size(); ++g) {
                Elem x = w.mul(w.mul(g, reps[c]), w.inverse(g));
                if (class_of_[x] == -1) {
                    class_of_[x] = static_cast<int>(c);
                    cls.push_back(x);
                } else if (class_of_[x] != static_cast<int>(c)) {
                    throw std::logic_error("class representatives are conjugate");
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(cls);
        }
        for (int c : class_of_)
            if (c < 0) throw std::logic_error("conjugacy classes do not cover W");
        for (const auto& cls : classes_) sizes_.push_back(static_cast<int>(cls.size()));

        auto from_elem = [&](auto f) {
            std::vector<Q> v;
            for (Elem r : reps) v.push_back(f(r));
            return ClassFunction(v);
        };
        auto letter_sign = [&](Elem x, int letter) {
            int n = 0;
            for (int i : w.word(x)) n += i == letter;
            return Q(n % 2 ? -1 : 1);
        };
        ClassFunction triv = from_elem([](Elem) { return Q(1); });
        ClassFunction eps1 = from_elem([&](Elem x) { return letter_sign(x, 1); });
        ClassFunction eps2 = from_elem([&](Elem x) { return letter_sign(x, 0); });
        ClassFunction eps = from_elem([&](Elem x) { return Q(w.length(x) % 2 ? -1 : 1); });
        ClassFunction chi1 = from_elem([&](Elem x) { return reflection_trace(x); });
        ClassFunction chi2 = chi1 * eps1;
        table_ = {triv, eps1, eps2, eps, chi1, chi2};
    }

    const WeylGroup& weyl() const { return *W_; }
    const std::vector<std::vector<Elem>>& classes() const { return classes_; }
    const std::vector<int>& class_sizes() const { return sizes_; }
    int class_of(Elem w) const { return class_of_[w]; }
    const std::vector<ClassFunction>& table() const { return table_; }
    const ClassFunction& irrep(int i) const { return table_[static_cast<std::size_t>(i)]; }

    /// <f, g> = (1/|W|) sum_C |C| f(C) g(C); characters of W(G2) are real.
    Q inner(const ClassFunction& f, const ClassFunction& g) const {
        Q s(0);
        for (std::size_t c = 0; c < sizes_.size(); ++c) s += Q(sizes_[c]) * f.values[c] * g.values[c];
        return s / Q(W_->size());
    }

    /// Multiplicities of the irreducibles; throws if f is not a genuine character.
    Multiplicities decompose(const ClassFunction& f) const {
        Multiplicities m{};
        for (int i = 0; i < kIrreps; ++i) {
            Q c = inner(f, irrep(i));
            if (!is_integer(c) || c < 0) throw RepError("class function is not a character");
            m[static_cast<std::size_t>(i)] = numer(c);
        }
        return m;
    }

    ClassFunction from_multiplicities(const Multiplicities& m) const {
        ClassFunction f(std::vector<Q>(sizes_.size(), Q(0)));
        for (int i = 0; i < kIrreps; ++i) f += Q(m[static_cast<std::size_t>(i)]) * irrep(i);
        return f;
    }

    /// Permutation character of W on W/W_J.
    ClassFunction induce_trivial(const std::vector<int>& J) const {
        const WeylGroup& w = *W_;
        std::vector<Elem> reps = w.min_coset_reps(J);  // v with no left descent in J: cosets W_J v
        std::vector<Q> vals;
        for (const auto& cls : classes_) {
            Elem g = cls.front();
            int fixed = 0;
            // g fixes the right coset W_J v iff v g v^{-1} ∈ W_J
            for (Elem v : reps)
                if (w.in_parabolic(w.mul(w.mul(v, g), w.inverse(v)), J)) ++fixed;
            vals.emplace_back(fixed);
        }
        return ClassFunction(vals);
    }

    int dimension(int irrep_index) const { return static_cast<int>(numer(irrep(irrep_index).values[0])); }

private:
    Q reflection_trace(Elem x) const {
        const RootSystem& rs = W_->roots();
        Q tr(0);
        for (std::size_t i = 0; i < rs.rank(); ++i) tr += Q(rs.root(W_->act(x, static_cast<int>(i)))[i]);
        return tr;
    }

    std::shared_ptr<const WeylGroup> W_;
    std::vector<std::vector<Elem>> classes_;
    std::vector<int> class_of_;
    std::vector<int> sizes_;
    std::vector<ClassFunction> table_;
};

struct SpringerEntry {
    std::string orbit;          // orbit key
    std::string local_system;   // "1", "ψ3", "ψ21", "ψ111"
    std::optional<int> irrep;   // empty when no W-representation corresponds
};

/// Springer correspondence for G2, normalized so that the trivial character goes to ({0}, 1).
inline const std::vector<SpringerEntry>& springer_table_g2() {
    static const std::vector<SpringerEntry> t{
        {"0", "1", Triv},     {"A1", "1", Eps1},    {"A1t", "1", Chi2},  {"G2a1", "ψ3", Chi1},
        {"G2a1", "ψ21", Eps2}, {"G2a1", "ψ111", {}}, {"G2", "1", Eps},
    };
    return t;
}

/// G2 orbits in increasing dimension; the closure order is total.
inline const std::vector<std::string>& g2_orbit_order() {
    static const std::vector<std::string> o{"0", "A1", "A1t", "G2a1", "G2"};
    return o;
}

/// Roots of the Levi of J: those in the span of the simple roots in J.
inline std::vector<int> levi_root_set(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<int> r;
    for (int g = 0; g < rs.num_roots(); ++g) {
        bool ok = true;
        for (std::size_t i = 0; i < rs.rank() && ok; ++i)
            if (rs.root(g)[i] != 0 && std::find(J.begin(), J.end(), static_cast<int>(i)) == J.end()) ok = false;
        if (ok) r.push_back(g);
    }
    return r;
}

/**
 * @brief Dimension of the Schubert-cell piece C_w ∩ Hess(M, x_J), or nothing when empty.
 *
 * w = y v with y ∈ W_J and v minimal in W_J v; M_v = v(Φ(M)) ∩ Φ(L_J).
 * Nonempty iff y^{-1}(α_j) ∈ M_v for all j ∈ J; the dimension is
 * |Φ_y ∩ y(Φ^-(M_v))| + |y(Φ_v) ∩ w(Φ^-(M))|.
 */
inline std::optional<int> precup_cell_dim(const WeylGroup& W, const HessIdeal& I, const std::vector<int>& J, Elem w) {
    const RootSystem& rs = W.roots();
    auto [y, v] = W.parabolic_decompose(w, J);
    std::vector<int> m = ideal_dual(rs, I);
    std::set<int> M(m.begin(), m.end());
    std::vector<int> lroots = levi_root_set(rs, J);
    std::set<int> L(lroots.begin(), lroots.end());
    std::set<int> Mv;
    for (int g : M) {
        int h = W.act(v, g);
        if (L.count(h)) Mv.insert(h);
    }
    Elem yi = W.inverse(y);
    for (int j : J)
        if (!Mv.count(W.act(yi, j))) return std::nullopt;
    int d = 0;
    for (int g : W.inversion_set(y)) {
        int pre = W.act(yi, g);
        if (!rs.is_positive(pre) && Mv.count(pre)) ++d;
    }
    Elem wi = W.inverse(w);
    for (int g : W.inversion_set(v)) {
        int yg = W.act(y, g);
        int pre = W.act(wi, yg);
        if (!rs.is_positive(pre) && M.count(pre)) ++d;
    }
    return d;
}

/// Betti numbers b_{2d} of Hess(M, x_J) from the cell dimensions.
inline std::vector<int> regular_hess_betti(const WeylGroup& W, const HessIdeal& I, const std::vector<int>& J) {
    std::vector<int> b;
    for (Elem w = 0; w < W.size(); ++w) {
        auto d = precup_cell_dim(W, I, J, w);
        if (!d) continue;
        if (static_cast<int>(b.size()) <= *d) b.resize(static_cast<std::size_t>(*d) + 1, 0);
        ++b[static_cast<std::size_t>(*d)];
    }
    return b;
}

struct ICSummand {
    std::string orbit;          // orbit key
    std::string local_system;   // "1", "ψ3", "ψ21"
    int shift = 0;

    std::string str(const std::string& orbit_label) const {
        std::string s = "IC(" + orbit_label + (local_system == "1" ? "" : ", " + local_system) + ")";
        if (shift != 0) s += "[" + std::to_string(shift) + "]";
        return s;
    }
};

/// Bookkeeping constants: d = dim G×^B M, d∨ = dim G×^B I, n = dim Hess(M, y).
struct DegreeConstants {
    int d = 0, d_vee = 0, n = 0, dim_g = 0;
};

inline DegreeConstants degree_constants(const Chevalley& ch, const HessIdeal& I) {
    const RootSystem& rs = ch.roots();
    int npos = rs.num_positive(), sz = static_cast<int>(I.size());
    DegreeConstants c;
    c.dim_g = ch.dim();
    c.d_vee = npos + sz;
    c.d = npos + ch.dim() - sz;
    c.n = npos - sz;
    return c;
}

/**
 * @brief IC summands of Rπ_*C[d∨] supported on the orbit of ctx, read off its fiber.
 *
 * A cell class of fiber degree 2k sits in stalk degree 2k - d∨, so a local
 * system found there comes from the shift b = d∨ - dim C - 2k.
 */
inline std::vector<ICSummand> ic_summands(const OrbitContext& ctx, const HessIdeal& I, const FiberPaving& fiber) {
    if (fiber.empty()) throw RepError("ic_summands: empty fiber over " + ctx.label + " for " + I.name);
    DegreeConstants dc = degree_constants(ctx.ch(), I);
    std::vector<ICSummand> out;
    const auto& an = ctx.an;
    std::map<int, std::vector<int>> orbit_sizes;
    if (an.group_label == "trivial") {
        for (std::size_t k = 0; k < fiber.betti.size(); ++k)
            orbit_sizes[static_cast<int>(k)] = std::vector<int>(static_cast<std::size_t>(fiber.betti[k]), 1);
    } else {
        auto it = an.orbits.find(I.ascii);
        if (it == an.orbits.end())
            throw RepError("no component-group action recorded for " + ctx.label + " and " + I.name);
        orbit_sizes = it->second;
        for (std::size_t k = 0; k < fiber.betti.size(); ++k) {
            int total = 0;
            if (orbit_sizes.count(static_cast<int>(k)))
                for (int s : orbit_sizes[static_cast<int>(k)]) total += s;
            if (total != fiber.betti[k])
                throw RepError("component-group data for " + ctx.label + ", " + I.name +
                               " disagrees with the fiber in degree " + std::to_string(2 * k));
        }
    }
    std::vector<int> shifts;
    for (const auto& [k, sizes] : orbit_sizes) {
        int b = dc.d_vee - ctx.orbit_dim - 2 * k;
        for (int s : sizes) {
            std::vector<std::string> pieces;
            if (an.group_label == "trivial") {
                if (s != 1) throw RepError("trivial component group with a nontrivial orbit");
                pieces = {"1"};
            } else if (s == 1) {
                pieces = {"ψ3"};
            } else if (s == 3) {
                pieces = {"ψ3", "ψ21"};
            } else {
                throw RepError("permutation orbit of size " + std::to_string(s) +
                               " contains the sign character of S3");
            }
            for (const auto& p : pieces) {
                out.push_back({ctx.key, p, b});
                shifts.push_back(b);
            }
        }
    }
    std::multiset<int> sh(shifts.begin(), shifts.end()), neg;
    for (int b : shifts) neg.insert(-b);
    if (sh != neg) throw RepError("IC shifts are not symmetric about 0");
    std::stable_sort(out.begin(), out.end(), [](const ICSummand& a, const ICSummand& b) { return a.shift > b.shift; });
    return out;
}

/// Graded character sum_i coeffs[i] q^i stored by irreducible multiplicities.
struct GradedCharacter {
    std::vector<Multiplicities> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Z dim(const G2Characters& ct, std::size_t i) const {
        Z s = 0;
        for (int k = 0; k < kIrreps; ++k) s += coeffs[i][static_cast<std::size_t>(k)] * ct.dimension(k);
        return s;
    }
    Z total_dim(const G2Characters& ct) const {
        Z s = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += dim(ct, i);
        return s;
    }
    bool palindromic() const {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != coeffs[coeffs.size() - 1 - i]) return false;
        return true;
    }

    static std::string coeff_str(const Multiplicities& m) {
        std::string s;
        int terms = 0;
        for (int k = 0; k < kIrreps; ++k) {
            const Z& c = m[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            std::string name = irrep_names()[static_cast<std::size_t>(k)];
            std::string t = k == Triv ? c.str() : (c == 1 ? name : c.str() + name);
            s += (terms ? "+" : "") + t;
            ++terms;
        }
        return terms ? s : "0";
    }

    /// e.g. "1 + (2+ε₁+χ₂)q + (2+ε₁+χ₂)q² + 1q³"
    std::string str() const {
        static const std::array<std::string, 10> sup{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        std::string out;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::string c = coeff_str(coeffs[i]);
            if (c == "0") continue;
            int terms = 0;
            for (const auto& x : coeffs[i]) terms += x != 0;
            bool simple = terms == 1;
            std::string t;
            if (i == 0) t = c;
            else {
                std::string q = "q" + (i == 1 ? std::string() : sup[i]);
                t = (simple ? c : "(" + c + ")") + q;
            }
            out += (out.empty() ? "" : " + ") + t;
        }
        return out.empty() ? "0" : out;
    }
};

struct DotActionResult {
    HessIdeal ideal;
    DegreeConstants constants;
    std::string max_orbit;                 // key of the largest orbit with nonempty fiber
    std::vector<ICSummand> ic;
    GradedCharacter poincare;
    bool connected = false;
    std::array<Z, 3> remainder{};          // coefficients of 1, ε₁, χ₂ left after IC and restriction data
    std::map<std::string, std::vector<int>> betti_by_levi;  // "", "alpha", "beta", "alpha,beta"
    std::vector<std::string> constraints;  // human-readable list of equations used
};

/**
 * @brief Dot action of W(G2) on H*(Hess(M, y)) for each Hessenberg ideal.
 *
 * Unknowns are the multiplicities m[i][χ]. The system collects: IC data on the
 * maximal orbit through the Springer table, vanishing for characters of larger
 * orbits, regular-element Betti numbers for every J ⊂ Δ, palindromy, a trivial
 * H^0 when the variety is connected and the regular representation for M = b.
 */
class DotActionSolver {
public:
    explicit DotActionSolver(std::shared_ptr<const LieContext> lie) : lie_(std::move(lie)), ct_(lie_->W) {
        if (lie_->rs->label() != "G2") throw RepError("dot actions are only computed for G2");
        for (const auto& k : g2_orbit_order()) engines_.emplace(k, std::make_unique<FiberEngine>(orbit_context(lie_, k)));
        ideals_ = hessenberg_ideals(*lie_->rs);
    }

    const G2Characters& characters() const { return ct_; }
    const std::vector<HessIdeal>& ideals() const { return ideals_; }
    const FiberEngine& engine(const std::string& key) const { return *engines_.at(key); }

    static const std::vector<std::vector<int>>& levi_subsets() {
        static const std::vector<std::vector<int>> J{{}, {0}, {1}, {0, 1}};
        return J;
    }
    std::string levi_label(const std::vector<int>& J) const {
        std::string s;
        for (int j : J) s += (s.empty() ? "" : ",") + lie_->rs->simple_ascii()[static_cast<std::size_t>(j)];
        return s;
    }

    const DotActionResult& solve(const HessIdeal& I) {
        auto it = cache_.find(I.roots);
        if (it != cache_.end()) return it->second;
        DotActionResult r = compute(I);
        return cache_.emplace(I.roots, std::move(r)).first->second;
    }

    std::vector<DotActionResult> solve_all() {
        std::vector<DotActionResult> out;
        for (const auto& I : ideals_) out.push_back(solve(I));
        return out;
    }

private:
    int irrep_orbit_rank(int irrep) const {
        const auto& order = g2_orbit_order();
        for (const auto& e : springer_table_g2())
            if (e.irrep && *e.irrep == irrep)
                return static_cast<int>(std::find(order.begin(), order.end(), e.orbit) - order.begin());
        throw std::logic_error("irreducible character missing from the Springer table");
    }

    DotActionResult compute(const HessIdeal& I) {
        const WeylGroup& W = *lie_->W;
        DotActionResult res;
        res.ideal = I;
        res.constants = degree_constants(*lie_->ch, I);
        const DegreeConstants& dc = res.constants;
        const int n = dc.n;
        const auto& order = g2_orbit_order();

        int max_rank = -1;
        FiberPaving max_fiber;
        for (int k = static_cast<int>(order.size()) - 1; k >= 0 && max_rank < 0; --k) {
            FiberPaving p = engines_.at(order[static_cast<std::size_t>(k)])->paving(I);
            if (!p.empty()) {
                max_rank = k;
                max_fiber = p;
            }
        }
        if (max_rank < 0) throw RepError("no orbit has a nonempty fiber for " + I.name);
        res.max_orbit = order[static_cast<std::size_t>(max_rank)];
        const OrbitContext& mctx = engines_.at(res.max_orbit)->context();
        res.ic = ic_summands(mctx, I, max_fiber);

        std::vector<std::vector<Z>> ic_known(static_cast<std::size_t>(n) + 1, std::vector<Z>(kIrreps, 0));
        for (const auto& s : res.ic) {
            std::optional<int> chi;
            for (const auto& e : springer_table_g2())
                if (e.orbit == s.orbit && e.local_system == s.local_system) chi = e.irrep;
            if (!chi) throw RepError("IC summand " + s.local_system + " has no Springer partner");
            int twice = dc.d - s.shift - dc.dim_g;
            if (twice % 2 != 0 || twice < 0 || twice / 2 > n)
                throw RepError("IC summand lands outside the cohomological range");
            ic_known[static_cast<std::size_t>(twice / 2)][static_cast<std::size_t>(*chi)] += 1;
        }

        const std::size_t nu = static_cast<std::size_t>((n + 1) * kIrreps);
        auto var = [](int i, int chi) { return static_cast<std::size_t>(i * kIrreps + chi); };
        QMatrix A;
        QVector b;
        auto add_eq = [&](std::vector<std::pair<std::size_t, Q>> terms, const Q& rhs, const std::string& text) {
            QVector row(nu, Q(0));
            for (auto& [k, c] : terms) row[k] += c;
            A.push_back(row);
            b.push_back(rhs);
            res.constraints.push_back(text);
        };
        auto mname = [&](int i, int chi) {
            return "m[" + std::to_string(i) + "][" + irrep_ascii()[static_cast<std::size_t>(chi)] + "]";
        };

        for (int chi = 0; chi < kIrreps; ++chi) {
            int rank = irrep_orbit_rank(chi);
            for (int i = 0; i <= n; ++i) {
                if (rank > max_rank) add_eq({{var(i, chi), Q(1)}}, Q(0), mname(i, chi) + " = 0 (orbit above the image)");
                else if (rank == max_rank)
                    add_eq({{var(i, chi), Q(1)}}, Q(ic_known[static_cast<std::size_t>(i)][static_cast<std::size_t>(chi)]),
                           mname(i, chi) + " = " + ic_known[static_cast<std::size_t>(i)][static_cast<std::size_t>(chi)].str() +
                               " (IC on the maximal orbit)");
            }
        }
        for (const auto& J : levi_subsets()) {
            std::vector<int> betti = regular_hess_betti(W, I, J);
            res.betti_by_levi[levi_label(J)] = betti;
            if (static_cast<int>(betti.size()) > n + 1)
                throw RepError("regular Hessenberg variety has cohomology above degree 2n");
            Multiplicities ind = ct_.decompose(ct_.induce_trivial(J));
            for (int i = 0; i <= n; ++i) {
                std::vector<std::pair<std::size_t, Q>> t;
                for (int chi = 0; chi < kIrreps; ++chi)
                    if (ind[static_cast<std::size_t>(chi)] != 0) t.push_back({var(i, chi), Q(ind[static_cast<std::size_t>(chi)])});
                int rhs = i < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(i)] : 0;
                add_eq(t, Q(rhs),
                       "<H^" + std::to_string(2 * i) + ", Ind_{W_J}1> = " + std::to_string(rhs) + " for J={" + levi_label(J) + "}");
            }
        }
        for (int i = 0; i < n - i; ++i)
            for (int chi = 0; chi < kIrreps; ++chi)
                add_eq({{var(i, chi), Q(1)}, {var(n - i, chi), Q(-1)}}, Q(0),
                       mname(i, chi) + " = " + mname(n - i, chi) + " (hard Lefschetz)");
        const auto& b0 = res.betti_by_levi.at("");
        res.connected = !b0.empty() && b0[0] == 1;
        if (res.connected)
            for (int chi = 0; chi < kIrreps; ++chi)
                add_eq({{var(0, chi), Q(1)}}, Q(chi == Triv ? 1 : 0), mname(0, chi) + " from a trivial H^0");
        if (static_cast<int>(I.size()) == lie_->rs->num_positive())
            for (int chi = 0; chi < kIrreps; ++chi)
                add_eq({{var(0, chi), Q(1)}}, Q(ct_.dimension(chi)), mname(0, chi) + " from the regular representation");

        LinearSolution sol = solve_linear(A, b);
        if (!sol.consistent) throw RepError("dot-action system for " + I.name + " is inconsistent");
        if (!sol.kernel.empty())
            throw RepError("dot-action system for " + I.name + " is underdetermined: " +
                           std::to_string(sol.kernel.size()) + "-dimensional solution space");
        res.poincare.coeffs.assign(static_cast<std::size_t>(n) + 1, Multiplicities{});
        for (int i = 0; i <= n; ++i)
            for (int chi = 0; chi < kIrreps; ++chi) {
                const Q& x = sol.particular[var(i, chi)];
                if (!is_integer(x) || x < 0)
                    throw RepError("dot-action solution for " + I.name + " has " + mname(i, chi) + " = " + to_string(x));
                res.poincare.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(chi)] = numer(x);
            }
        if (res.poincare.total_dim(ct_) != W.size()) throw RepError("dot action does not have total dimension |W|");
        if (!res.poincare.palindromic()) throw RepError("dot action is not palindromic");

        // restriction to a connected smaller variety is injective on H^2
        Multiplicities lower{};
        if (res.connected && n >= 1) {
            for (const auto& J : covered_ideals(I)) {
                const DotActionResult& prev = solve(J);
                if (prev.poincare.coeffs.size() < 2) continue;
                for (int chi = 0; chi < kIrreps; ++chi) {
                    auto c = static_cast<std::size_t>(chi);
                    lower[c] = std::max(lower[c], prev.poincare.coeffs[1][c]);
                    if (res.poincare.coeffs[1][c] < prev.poincare.coeffs[1][c])
                        throw RepError("H^2 of " + I.name + " does not contain H^2 of " + J.name);
                }
            }
        }
        if (n >= 1) {
            Multiplicities rem = res.poincare.coeffs[1];
            for (int chi = 0; chi < kIrreps; ++chi) {
                auto c = static_cast<std::size_t>(chi);
                rem[c] -= irrep_orbit_rank(chi) == max_rank ? ic_known[1][c] : lower[c];
                if (rem[c] < 0) throw RepError("negative remainder for " + I.name);
            }
            if (rem[Eps2] != 0 || rem[Eps] != 0 || rem[Chi1] != 0)
                throw RepError("remainder of " + I.name + " is not a combination of 1, ε₁, χ₂");
            res.remainder = {rem[Triv], rem[Eps1], rem[Chi2]};
        }
        return res;
    }

    std::vector<HessIdeal> covered_ideals(const HessIdeal& I) const {
        std::vector<HessIdeal> out;
        for (const auto& J : ideals_)
            if (J.size() + 1 == I.size() &&
                std::includes(I.roots.begin(), I.roots.end(), J.roots.begin(), J.roots.end()))
                out.push_back(J);
        return out;
    }

    std::shared_ptr<const LieContext> lie_;
    G2Characters ct_;
    std::map<std::string, std::unique_ptr<FiberEngine>> engines_;
    std::vector<HessIdeal> ideals_;
    std::map<std::vector<int>, DotActionResult> cache_;
};

inline const G2Characters& char_table_g2() {
    static const G2Characters ct(LieContext::make("G2")->W);
    return ct;
}

inline GradedCharacter dot_action(const HessIdeal& I) {
    static DotActionSolver solver(LieContext::make("G2"));
    return solver.solve(I).poincare;
}

}  // namespace hess
