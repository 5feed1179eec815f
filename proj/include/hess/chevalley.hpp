#pragma once
// Chevalley basis: structure constants, brackets, exponentials and Weyl representatives.

#include "hess/poly.hpp"
#include "hess/weylgrp.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

/**
 * @brief Element of the Lie algebra with polynomial coefficients.
 *
 * Basis labels: 0..2N-1 are root vectors E_gamma (root indices), 2N + i is the
 * simple coroot H_i.
 */
template <class K>
class LiePoly {
public:
    using P = Poly<K>;

    explicit LiePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LiePoly basis(std::size_t nvars, int label, const K& c = K(1)) {
        LiePoly x(nvars);
        x.add(label, P::constant(nvars, c));
        return x;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<int, P>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    P coeff(int label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? P(nvars_) : it->second;
    }

    void add(int label, const P& p) {
        if (p.nvars() != nvars_) throw std::invalid_argument("LiePoly: variable count mismatch");
        if (p.is_zero()) return;
        auto it = terms_.find(label);
        if (it == terms_.end()) {
            terms_.emplace(label, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LiePoly& operator+=(const LiePoly& o) {
        for (const auto& [b, p] : o.terms_) add(b, p);
        return *this;
    }
    LiePoly& operator-=(const LiePoly& o) {
        for (const auto& [b, p] : o.terms_) add(b, -p);
        return *this;
    }
    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
    friend LiePoly operator*(const P& s, const LiePoly& x) {
        LiePoly r(x.nvars_);
        for (const auto& [b, p] : x.terms_) r.add(b, s * p);
        return r;
    }
    friend LiePoly operator*(const K& s, const LiePoly& x) {
        LiePoly r(x.nvars_);
        for (const auto& [b, p] : x.terms_) r.add(b, s * p);
        return r;
    }
    friend bool operator==(const LiePoly& a, const LiePoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LiePoly& a, const LiePoly& b) { return !(a == b); }

    /// Labels carrying a nonzero coefficient.
    std::vector<int> support() const {
        std::vector<int> s;
        for (const auto& [b, p] : terms_) s.push_back(b);
        return s;
    }

private:
    std::size_t nvars_;
    std::map<int, P> terms_;
};

using QLiePoly = LiePoly<Q>;

/// One factor of a group element acting by the adjoint action.
struct GroupFactor {
    enum Kind { Unipotent, WeylGen, WeylGenInverse } kind = Unipotent;
    int root = 0;   // root index for Unipotent, simple index otherwise
    QPoly coeff;    // x_root(coeff)
};

/// Product g = f_0 f_1 ... f_k; acting on X applies f_k first.
using GroupWord = std::vector<GroupFactor>;

class ChevalleyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Chevalley {
public:
    Chevalley(std::shared_ptr<const RootSystem> rs, std::shared_ptr<const WeylGroup> W)
        : rs_(std::move(rs)), W_(std::move(W)) {
        build_constants();
        build_weyl_tables();
    }

    const RootSystem& roots() const { return *rs_; }
    const WeylGroup& weyl() const { return *W_; }
    int nroots() const { return rs_->num_roots(); }
    int dim() const { return nroots() + static_cast<int>(rs_->rank()); }
    int h_label(int i) const { return nroots() + i; }
    bool is_root_label(int b) const { return b < nroots(); }

    /// N_{gamma,delta}; zero when gamma+delta is not a root.
    int N(int g, int d) const { return n_[static_cast<std::size_t>(g) * nroots() + d]; }

    /// Coordinates of H_gamma = [E_gamma, E_{-gamma}] in the simple coroot basis.
    const std::vector<int>& coroot(int g) const { return coroot_[g]; }

    /// alpha_j(H) for H given in the simple coroot basis.
    template <class T>
    std::vector<T> simple_values(const std::vector<T>& h) const {
        std::size_t n = rs_->rank();
        std::vector<T> v(n, T(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) v[j] += h[i] * T(rs_->cartan()[i][j]);
        return v;
    }
    template <class T>
    T root_value(int g, const std::vector<T>& h) const {
        auto v = simple_values(h);
        T s(0);
        for (std::size_t j = 0; j < v.size(); ++j) s += T(rs_->root(g)[j]) * v[j];
        return s;
    }

    /// [b1, b2] for basis labels, as a list of (label, coefficient).
    std::vector<std::pair<int, int>> bracket_basis(int b1, int b2) const {
        std::vector<std::pair<int, int>> r;
        int nr = nroots();
        if (b1 >= nr && b2 >= nr) return r;
        if (b1 >= nr) {
            int p = rs_->pairing(b2, b1 - nr);
            if (p) r.emplace_back(b2, p);
            return r;
        }
        if (b2 >= nr) {
            int p = rs_->pairing(b1, b2 - nr);
            if (p) r.emplace_back(b1, -p);
            return r;
        }
        if (b2 == rs_->neg(b1)) {
            const auto& c = coroot(b1);
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i]) r.emplace_back(nr + static_cast<int>(i), c[i]);
            return r;
        }
        int s = rs_->add(b1, b2);
        if (s >= 0) r.emplace_back(s, N(b1, b2));
        return r;
    }

    template <class K>
    LiePoly<K> bracket(const LiePoly<K>& x, const LiePoly<K>& y) const {
        LiePoly<K> r(x.nvars());
        for (const auto& [b1, p1] : x.terms())
            for (const auto& [b2, p2] : y.terms()) {
                auto prod = p1 * p2;
                for (auto [b, c] : bracket_basis(b1, b2)) r.add(b, K(c) * prod);
            }
        return r;
    }

    /// exp(ad(coeff * E_gamma)) X.
    template <class K>
    LiePoly<K> apply_unipotent(int gamma, const Poly<K>& coeff, const LiePoly<K>& x) const {
        LiePoly<K> result = x, term = x;
        K fact(1);
        for (int n = 1; !term.is_zero(); ++n) {
            LiePoly<K> next(x.nvars());
            for (const auto& [b, p] : term.terms())
                for (auto [lbl, c] : bracket_basis(gamma, b)) next.add(lbl, K(c) * (coeff * p));
            fact *= K(n);
            term = next;
            if (n > 8) throw ChevalleyError("apply_unipotent: ad is not nilpotent");
            result += (K(1) / fact) * term;
        }
        return result;
    }

    /// Action of the fixed representative of w (product of n_i over the canonical word).
    template <class K>
    LiePoly<K> weyl_rep_action(Elem w, const LiePoly<K>& x) const {
        LiePoly<K> r = x;
        const auto& word = W_->word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_n(*it, false, r);
        return r;
    }
    /// Action of the inverse of the representative of w.
    template <class K>
    LiePoly<K> weyl_rep_inverse_action(Elem w, const LiePoly<K>& x) const {
        LiePoly<K> r = x;
        for (int i : W_->word(w)) r = apply_n(i, true, r);
        return r;
    }

    /// n_i or n_i^{-1} applied to X, via the precomputed signed permutation.
    template <class K>
    LiePoly<K> apply_n(int i, bool inverse, const LiePoly<K>& x) const {
        LiePoly<K> r(x.nvars());
        int nr = nroots();
        std::size_t n = rs_->rank();
        for (const auto& [b, p] : x.terms()) {
            if (b < nr) {
                int sign = inverse ? nsign_inv_[i][b] : nsign_[i][b];
                r.add(rs_->reflect(i, b), K(sign) * p);
            } else {
                int j = b - nr;
                for (std::size_t k = 0; k < n; ++k) {
                    int c = hrefl_[i][j][k];
                    if (c) r.add(nr + static_cast<int>(k), K(c) * p);
                }
            }
        }
        return r;
    }

    /// g X for a group word.
    LiePoly<Q> act(const GroupWord& g, const LiePoly<Q>& x) const {
        LiePoly<Q> r = x;
        for (auto it = g.rbegin(); it != g.rend(); ++it) {
            switch (it->kind) {
                case GroupFactor::Unipotent:
                    r = apply_unipotent(it->root, it->coeff, r);
                    break;
                case GroupFactor::WeylGen:
                    r = apply_n(it->root, false, r);
                    break;
                case GroupFactor::WeylGenInverse:
                    r = apply_n(it->root, true, r);
                    break;
            }
        }
        return r;
    }

    /// (E_gamma, H_gamma, E_{-gamma}) with the three bracket identities checked.
    std::tuple<QLiePoly, QLiePoly, QLiePoly> sl2_triple(int gamma, std::size_t nvars = 0) const {
        if (!rs_->is_positive(gamma)) throw ChevalleyError("sl2_triple: root must be positive");
        QLiePoly e = QLiePoly::basis(nvars, gamma);
        QLiePoly f = QLiePoly::basis(nvars, rs_->neg(gamma));
        QLiePoly h = bracket(e, f);
        check_triple(e, h, f);
        return {e, h, f};
    }

    void check_triple(const QLiePoly& e, const QLiePoly& h, const QLiePoly& f) const {
        if (bracket(h, e) != Q(2) * e || bracket(h, f) != Q(-2) * f || bracket(e, f) != h)
            throw ChevalleyError("sl2 triple relations fail");
    }

    /// Coroot-basis coordinates of an element supported on H's.
    QVector h_coords(const QLiePoly& h) const {
        QVector v(rs_->rank(), Q(0));
        for (const auto& [b, p] : h.terms()) {
            if (b < nroots() || !p.is_constant()) throw ChevalleyError("h_coords: not a constant toral element");
            v[static_cast<std::size_t>(b - nroots())] = p.constant_term();
        }
        return v;
    }

    struct RegularTriple {
        QLiePoly N, H, Y;
        QVector x;       // H = sum x_k H_{beta_k}
        QVector h;       // H in the simple coroot basis
    };

    /// Regular nilpotent sl2-triple of the subalgebra generated by a simple system.
    RegularTriple regular_nilpotent_sl2(const Subsystem& sub) const {
        if (!sub.simple_system) throw ChevalleyError("regular_nilpotent_sl2: generators are not a simple system");
        std::size_t l = sub.generators.size();
        QMatrix c = to_qmatrix(sub.cartan);
        QMatrix ci;
        try {
            ci = inverse(c);
        } catch (const std::domain_error&) {
            throw ChevalleyError("regular_nilpotent_sl2: singular Cartan matrix");
        }
        RegularTriple t{QLiePoly(0), QLiePoly(0), QLiePoly(0), QVector(l, Q(0)), QVector(rs_->rank(), Q(0))};
        for (std::size_t k = 0; k < l; ++k)
            for (std::size_t j = 0; j < l; ++j) t.x[k] += Q(2) * ci[j][k];
        for (std::size_t k = 0; k < l; ++k) {
            int b = sub.generators[k];
            t.N.add(b, QPoly::constant(0, Q(1)));
            t.Y.add(rs_->neg(b), QPoly::constant(0, t.x[k]));
            const auto& cr = coroot(b);
            for (std::size_t i = 0; i < cr.size(); ++i) t.h[i] += t.x[k] * Q(cr[i]);
        }
        for (std::size_t i = 0; i < t.h.size(); ++i) t.H.add(h_label(static_cast<int>(i)), QPoly::constant(0, t.h[i]));
        check_triple(t.N, t.H, t.Y);
        return t;
    }

    /// Display name of a basis label, e.g. "E_{β+α}" or "H_α".
    std::string basis_name(int b) const {
        if (b < nroots()) return "E_{" + rs_->name(b) + "}";
        return "H_{" + rs_->simple_names()[static_cast<std::size_t>(b - nroots())] + "}";
    }
    std::string basis_ascii(int b) const {
        if (b < nroots()) return "E[" + rs_->ascii_name(b) + "]";
        return "H[" + rs_->simple_ascii()[static_cast<std::size_t>(b - nroots())] + "]";
    }

    template <class K>
    std::string str(const LiePoly<K>& x, const std::vector<std::string>& vars) const {
        if (x.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [b, p] : x.terms()) {
            std::string cs = p.str(vars);
            bool single = p.terms().size() == 1;
            bool neg = single && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string term;
            if (cs == "1") term = basis_name(b);
            else if (single) term = cs + "·" + basis_name(b);
            else term = "(" + cs + ")·" + basis_name(b);
            if (first) out += neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }

private:
    // N for positive pairs, filled in height order; mixed signs reduce to lower height.
    int npos_get(int g, int d) const {
        int nr = nroots();
        int s = rs_->add(g, d);
        if (s < 0) return 0;
        bool pg = rs_->is_positive(g), pd = rs_->is_positive(d);
        if (pg && pd) {
            int v = n_[static_cast<std::size_t>(g) * nr + d];
            if (v == 0) throw ChevalleyError("structure constant requested before it was computed");
            return v;
        }
        if (!pg && !pd) return -npos_get(rs_->neg(g), rs_->neg(d));
        // N_{g,d}/B(z,z) = N_{d,z}/B(g,g) = N_{z,g}/B(d,d) with z = -(g+d)
        int z = rs_->neg(s);
        if (rs_->is_positive(z)) {
            // z and whichever of g, d is positive form a positive pair
            if (pg) return rs_->norm(z) * npos_get(z, g) / rs_->norm(d);
            return rs_->norm(z) * npos_get(d, z) / rs_->norm(g);
        }
        // z negative: the pair not containing the positive root is negative-negative
        if (pg) return rs_->norm(z) * npos_get(d, z) / rs_->norm(g);
        return rs_->norm(z) * npos_get(z, g) / rs_->norm(d);
    }

    void build_constants() {
        const RootSystem& rs = *rs_;
        int nr = rs.num_roots(), np = rs.num_positive();
        n_.assign(static_cast<std::size_t>(nr) * nr, 0);
        auto set = [&](int a, int b, int v) {
            n_[static_cast<std::size_t>(a) * nr + b] = v;
            n_[static_cast<std::size_t>(b) * nr + a] = -v;
        };
        for (int xi = static_cast<int>(rs.rank()); xi < np; ++xi) {
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < np; ++a)
                for (int b = a + 1; b < np; ++b)
                    if (rs.add(a, b) == xi) pairs.emplace_back(a, b);
            if (pairs.empty()) throw ChevalleyError("non-simple root without a decomposition");
            auto [a0, b0] = pairs.front();
            int n0 = rs.root_string(b0, a0).first + 1;
            set(a0, b0, n0);
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                auto [a, b] = pairs[k];
                Q acc = 0;
                int bma = rs.add(b, rs.neg(a0));
                if (bma >= 0) acc += Q(npos_get(b, rs.neg(a0)) * npos_get(a, rs.neg(b0)), rs.norm(bma));
                int ama = rs.add(a, rs.neg(a0));
                if (ama >= 0) acc += Q(npos_get(rs.neg(a0), a) * npos_get(b, rs.neg(b0)), rs.norm(ama));
                Q v = Q(rs.norm(xi)) / Q(n0) * acc;
                if (!is_integer(v)) throw ChevalleyError("non-integral structure constant");
                set(a, b, static_cast<int>(numer(v)));
            }
        }
        // fill every pair from the positive table
        std::vector<int> full(static_cast<std::size_t>(nr) * nr, 0);
        for (int g = 0; g < nr; ++g)
            for (int d = 0; d < nr; ++d)
                if (rs.add(g, d) >= 0) full[static_cast<std::size_t>(g) * nr + d] = npos_get(g, d);
        n_ = std::move(full);
        for (int g = 0; g < nr; ++g)
            for (int d = 0; d < nr; ++d) {
                if (rs.add(g, d) < 0) continue;
                int v = N(g, d);
                int p = rs.root_string(d, g).first;
                if (v != -N(d, g) || (v < 0 ? -v : v) != p + 1)
                    throw ChevalleyError("structure constants violate |N| = p+1 or antisymmetry");
            }
        coroot_.resize(static_cast<std::size_t>(nr));
        std::size_t n = rs.rank();
        for (int g = 0; g < nr; ++g) {
            coroot_[g].resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                int num = rs.root(g)[i] * rs.gram()[i][i];
                if (num % rs.norm(g) != 0) throw ChevalleyError("non-integral coroot");
                coroot_[g][i] = num / rs.norm(g);
            }
        }
    }

    void build_weyl_tables() {
        const RootSystem& rs = *rs_;
        int nr = rs.num_roots();
        std::size_t n = rs.rank();
        nsign_.assign(n, std::vector<int>(nr, 0));
        nsign_inv_.assign(n, std::vector<int>(nr, 0));
        hrefl_.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
        for (std::size_t i = 0; i < n; ++i) {
            int a = static_cast<int>(i), na = rs.neg(a);
            auto one = QPoly::constant(0, Q(1));
            auto minus = QPoly::constant(0, Q(-1));
            auto n_fwd = [&](const QLiePoly& x) {
                return apply_unipotent(a, one, apply_unipotent(na, minus, apply_unipotent(a, one, x)));
            };
            auto n_inv = [&](const QLiePoly& x) {
                return apply_unipotent(a, minus, apply_unipotent(na, one, apply_unipotent(a, minus, x)));
            };
            for (int g = 0; g < nr; ++g) {
                int target = rs.reflect(a, g);
                for (int pass = 0; pass < 2; ++pass) {
                    QLiePoly img = pass == 0 ? n_fwd(QLiePoly::basis(0, g)) : n_inv(QLiePoly::basis(0, g));
                    if (img.terms().size() != 1 || img.terms().begin()->first != target)
                        throw ChevalleyError("Weyl representative is not a signed permutation");
                    Q c = img.terms().begin()->second.constant_term();
                    if (c != 1 && c != -1) throw ChevalleyError("Weyl representative sign is not +-1");
                    (pass == 0 ? nsign_ : nsign_inv_)[i][g] = c == 1 ? 1 : -1;
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                QLiePoly img = n_fwd(QLiePoly::basis(0, nr + static_cast<int>(j)));
                QLiePoly img2 = n_inv(QLiePoly::basis(0, nr + static_cast<int>(j)));
                if (img != img2) throw ChevalleyError("n_i and its inverse differ on the torus");
                for (const auto& [b, p] : img.terms()) {
                    if (b < nr) throw ChevalleyError("Weyl representative does not preserve the torus");
                    hrefl_[i][j][static_cast<std::size_t>(b - nr)] = static_cast<int>(numer(p.constant_term()));
                }
            }
        }
    }

    std::shared_ptr<const RootSystem> rs_;
    std::shared_ptr<const WeylGroup> W_;
    std::vector<int> n_;
    std::vector<std::vector<int>> coroot_;
    std::vector<std::vector<int>> nsign_, nsign_inv_;
    std::vector<std::vector<std::vector<int>>> hrefl_;
};

}  // namespace hess
