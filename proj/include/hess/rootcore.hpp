#pragma once
// Finite root systems in the simple-root basis.
//
// Roots are addressed by index: positive roots 0..npos-1 in canonical order
// (height, then coordinates descending lexicographically, so index i < rank is
// the simple root alpha_i), negative roots npos..2*npos-1 with neg(i) = i +- npos.

#include "hess/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hess {

using Root = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

class RootSystemError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed subsystem generated by a list of roots.
struct Subsystem {
    std::vector<int> generators;
    std::vector<int> roots;       // closure, sorted by index
    IntMatrix cartan;             // cartan[i][j] = <gen_j, gen_i^vee>
    std::string type;             // e.g. "A1+C3"
    bool simple_system = true;    // false when some off-diagonal entry is positive
};

class RootSystem {
public:
    /// Build from a symmetric Gram matrix of the simple roots.
    static RootSystem from_gram(IntMatrix gram, std::string label, std::vector<std::string> names = {},
                                std::vector<std::string> ascii = {}) {
        RootSystem rs;
        rs.label_ = std::move(label);
        rs.gram_ = std::move(gram);
        rs.init(std::move(names), std::move(ascii));
        return rs;
    }

    /// Build from a generalized Cartan matrix A_ij = <alpha_j, alpha_i^vee>.
    static RootSystem from_cartan(const IntMatrix& a, std::string label = "") {
        return from_gram(symmetrize(a), label.empty() ? "custom" : std::move(label));
    }

    /// Build from a label such as "G2", "F4", "E6", "B3" or "A1+A2".
    static RootSystem from_type(const std::string& label) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t p = label.find('+', start);
            parts.push_back(label.substr(start, p == std::string::npos ? std::string::npos : p - start));
            if (p == std::string::npos) break;
            start = p + 1;
        }
        if (parts.size() == 1) {
            auto [g, names, ascii] = simple_gram(parts[0]);
            RootSystem rs = from_gram(g, parts[0], names, ascii);
            if (parts[0] == "E6") rs.to_bourbaki_ = {0, 2, 3, 4, 5, 1};
            return rs;
        }
        IntMatrix g;
        std::size_t n = 0;
        for (const auto& p : parts) {
            auto [b, names, ascii] = simple_gram(p);
            std::size_t m = b.size();
            for (auto& row : g) row.resize(n + m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<int> row(n, 0);
                row.insert(row.end(), b[i].begin(), b[i].end());
                g.push_back(row);
            }
            n += m;
        }
        return from_gram(g, label);
    }

    const std::string& label() const { return label_; }
    std::size_t rank() const { return gram_.size(); }
    int num_positive() const { return npos_; }
    int num_roots() const { return 2 * npos_; }
    const IntMatrix& gram() const { return gram_; }
    const IntMatrix& cartan() const { return cartan_; }
    const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
    const std::vector<Root>& roots() const { return roots_; }
    bool is_positive(int i) const { return i < npos_; }
    int neg(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    int height(int i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }
    /// Positive representative of +-root i.
    int abs(int i) const { return i < npos_ ? i : i - npos_; }

    int index_of(const Root& r) const {
        auto it = index_.find(r);
        return it == index_.end() ? -1 : it->second;
    }
    /// Index of root(i) + root(j), or -1 if the sum is not a root.
    int add(int i, int j) const { return sum_[static_cast<std::size_t>(i) * roots_.size() + j]; }

    /// Symmetric bilinear form.
    int form(const Root& x, const Root& y) const {
        int s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram_[i][j] * y[j];
        return s;
    }
    int form(int i, int j) const { return form_[static_cast<std::size_t>(i) * roots_.size() + j]; }
    int norm(int i) const { return form(i, i); }
    bool is_long(int i) const { return norm(i) == max_norm_; }

    /// <beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha).
    int pairing(int beta, int alpha) const { return 2 * form(beta, alpha) / norm(alpha); }
    int pairing(const Root& beta, int alpha) const { return 2 * form(beta, root(alpha)) / norm(alpha); }

    /// (p, q) with delta - p*gamma ... delta + q*gamma the gamma-string through delta.
    std::pair<int, int> root_string(int delta, int gamma) const {
        if (delta == gamma || delta == neg(gamma)) throw RootSystemError("root_string: delta = +-gamma");
        int p = 0, q = 0;
        for (int cur = delta; (cur = add(cur, neg(gamma))) >= 0;) ++p;
        for (int cur = delta; (cur = add(cur, gamma)) >= 0;) ++q;
        return {p, q};
    }

    /// s_{alpha_i}(root k).
    int reflect(int i, int k) const { return reflect_[static_cast<std::size_t>(k) * rank() + i]; }

    bool irreducible() const { return components_ == 1; }

    int lowest_root() const {
        if (!irreducible()) throw RootSystemError("lowest_root: reducible root system " + label_);
        int best = npos_;
        for (int i = npos_; i < 2 * npos_; ++i)
            if (height(i) < height(best)) best = i;
        return best;
    }

    /// Display name, e.g. "2β+3α" for G2 or "α1+α2+2α3".
    std::string name(int i) const { return render(root(i), names_); }
    std::string ascii_name(int i) const { return render(root(i), ascii_); }
    const std::vector<std::string>& simple_names() const { return names_; }
    const std::vector<std::string>& simple_ascii() const { return ascii_; }

    /// For E6: position of each simple root in the Bourbaki numbering; empty otherwise.
    const std::vector<int>& to_bourbaki() const { return to_bourbaki_; }

    /// Values indexed by simple root, rearranged into Bourbaki drawing order when a relabeling exists.
    template <class T>
    std::vector<T> in_bourbaki_order(const std::vector<T>& v) const {
        if (to_bourbaki_.empty()) return v;
        std::vector<T> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[to_bourbaki_[i]] = v[i];
        return r;
    }

    Subsystem closed_subsystem(const std::vector<int>& gens) const {
        Subsystem s;
        s.generators = gens;
        QMatrix m;
        for (int g : gens) {
            QVector row;
            for (int c : root(g)) row.emplace_back(c);
            m.push_back(row);
        }
        if (hess::rank(m) != gens.size())
            throw RootSystemError("closed_subsystem: generators are linearly dependent");
        std::set<int> cl;
        for (int g : gens) {
            cl.insert(g);
            cl.insert(neg(g));
        }
        for (bool grown = true; grown;) {
            grown = false;
            std::vector<int> cur(cl.begin(), cl.end());
            for (int a : cur)
                for (int b : cur) {
                    int c = add(a, b);
                    if (c >= 0 && cl.insert(c).second) grown = true;
                }
        }
        s.roots.assign(cl.begin(), cl.end());
        std::size_t n = gens.size();
        s.cartan.assign(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                s.cartan[i][j] = pairing(gens[j], gens[i]);
                if (i != j && s.cartan[i][j] > 0) s.simple_system = false;
            }
        std::vector<int> norms;
        for (int g : gens) norms.push_back(norm(g));
        s.type = dynkin_type(s.cartan, norms);
        return s;
    }

    /// Dynkin type of a Cartan matrix; components in order of first node.
    static std::string dynkin_type(const IntMatrix& c, const std::vector<int>& norms) {
        std::size_t n = c.size();
        std::vector<int> comp(n, -1);
        std::vector<std::vector<std::size_t>> comps;
        for (std::size_t s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<std::size_t> stack{s}, members;
            comp[s] = static_cast<int>(comps.size());
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (std::size_t w = 0; w < n; ++w)
                    if (w != v && c[v][w] != 0 && comp[w] < 0) {
                        comp[w] = comp[s];
                        stack.push_back(w);
                    }
            }
            std::sort(members.begin(), members.end());
            comps.push_back(members);
        }
        std::string out;
        for (const auto& m : comps) {
            if (!out.empty()) out += "+";
            out += component_type(c, norms, m);
        }
        return out;
    }

private:
    RootSystem() = default;

    static std::string component_type(const IntMatrix& c, const std::vector<int>& norms,
                                      const std::vector<std::size_t>& m) {
        std::size_t n = m.size();
        std::string r = std::to_string(n);
        if (n == 1) return "A1";
        int maxbond = 0;
        std::vector<int> deg(n, 0);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && c[m[i]][m[j]] != 0) {
                    ++deg[i];
                    if (i < j) ++edges;
                    maxbond = std::max(maxbond, c[m[i]][m[j]] * c[m[j]][m[i]]);
                }
        if (edges != n - 1) return "?" + r;
        if (maxbond == 3) return "G2";
        if (maxbond == 2) {
            // double bond: locate it
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (c[m[i]][m[j]] * c[m[j]][m[i]] == 2 && deg[i] == 2 && deg[j] == 2) return "F4";
            int mx = 0;
            for (std::size_t i : m) mx = std::max(mx, norms[i]);
            int shorts = 0;
            for (std::size_t i : m) shorts += norms[i] < mx;
            if (n == 2) return "B2";
            return (shorts == 1 ? "B" : "C") + r;
        }
        auto branch = std::find(deg.begin(), deg.end(), 3);
        if (branch == deg.end()) return "A" + r;
        std::size_t b = static_cast<std::size_t>(branch - deg.begin());
        std::vector<int> arms;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == b || c[m[b]][m[j]] == 0) continue;
            int len = 1;
            std::size_t prev = b, cur = j;
            while (true) {
                std::size_t next = n;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != cur && k != prev && c[m[cur]][m[k]] != 0) next = k;
                if (next == n) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + r;
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + r;
        return "?" + r;
    }

    struct GramData {
        IntMatrix gram;
        std::vector<std::string> names, ascii;
    };

    static GramData simple_gram(const std::string& t) {
        if (t.size() < 2) throw RootSystemError("unknown root system type '" + t + "'");
        char kind = t[0];
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(t.substr(1), &used);
            if (used != t.size() - 1) n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n < 1) throw RootSystemError("unknown root system type '" + t + "'");
        IntMatrix g(n, std::vector<int>(n, 0));
        auto chain = [&](int norm) {
            for (int i = 0; i < n; ++i) g[i][i] = norm;
            for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = -norm / 2;
        };
        switch (kind) {
            case 'A':
                chain(2);
                break;
            case 'B':
                if (n < 2) throw RootSystemError("B_n needs n >= 2");
                chain(4);
                g[n - 1][n - 1] = 2;
                break;
            case 'C':
                if (n < 2) throw RootSystemError("C_n needs n >= 2");
                chain(2);
                g[n - 1][n - 1] = 4;
                g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
                break;
            case 'D':
                if (n < 4) throw RootSystemError("D_n needs n >= 4");
                chain(2);
                g[n - 2][n - 1] = g[n - 1][n - 2] = 0;
                g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
                break;
            case 'E': {
                if (n < 6 || n > 8) throw RootSystemError("E_n needs 6 <= n <= 8");
                // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
                std::vector<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {1, 3}};
                for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
                for (int i = 0; i < n; ++i) g[i][i] = 2;
                for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
                if (n == 6) {
                    // relabel so that alpha_1..alpha_5 is the long chain and alpha_6 hangs off alpha_3
                    const int bour[6] = {0, 2, 3, 4, 5, 1};
                    IntMatrix h(6, std::vector<int>(6));
                    for (int i = 0; i < 6; ++i)
                        for (int j = 0; j < 6; ++j) h[i][j] = g[bour[i]][bour[j]];
                    g = h;
                }
                break;
            }
            case 'F':
                if (n != 4) throw RootSystemError("F_n needs n = 4");
                g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
                break;
            case 'G':
                if (n != 2) throw RootSystemError("G_n needs n = 2");
                g = {{2, -3}, {-3, 6}};
                return {g, {"α", "β"}, {"alpha", "beta"}};
            default:
                throw RootSystemError("unknown root system type '" + t + "'");
        }
        return {g, {}, {}};
    }

    static IntMatrix symmetrize(const IntMatrix& a) {
        std::size_t n = a.size();
        for (const auto& row : a)
            if (row.size() != n) throw RootSystemError("Cartan matrix is not square");
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i][i] != 2) throw RootSystemError("Cartan matrix diagonal must be 2");
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && (a[i][j] > 0 || ((a[i][j] == 0) != (a[j][i] == 0))))
                    throw RootSystemError("not a generalized Cartan matrix");
        }
        // d_i A_ij = d_j A_ji, propagated over each component
        std::vector<Q> d(n, Q(0));
        for (std::size_t s = 0; s < n; ++s) {
            if (d[s] != 0) continue;
            d[s] = 1;
            std::vector<std::size_t> stack{s};
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || a[i][j] == 0) continue;
                    Q want = d[i] * a[i][j] / a[j][i];
                    if (d[j] == 0) {
                        d[j] = want;
                        stack.push_back(j);
                    } else if (d[j] != want) {
                        throw RootSystemError("not of finite type: Cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        Z l = 1;
        for (const auto& x : d) l = boost::multiprecision::lcm(l, denom(x));
        IntMatrix g(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g[i][j] = static_cast<int>(numer(d[i] * Q(l) * a[i][j]));
        return g;
    }

    void init(std::vector<std::string> names, std::vector<std::string> ascii) {
        std::size_t n = gram_.size();
        if (n == 0) throw RootSystemError("empty root system");
        for (std::size_t i = 0; i < n; ++i) {
            if (gram_[i].size() != n) throw RootSystemError("Gram matrix is not square");
            for (std::size_t j = 0; j < n; ++j)
                if (gram_[i][j] != gram_[j][i]) throw RootSystemError("Gram matrix is not symmetric");
        }
        QMatrix gq = to_qmatrix(gram_);
        for (std::size_t k = 1; k <= n; ++k) {
            QMatrix minor(k, QVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor[i][j] = gq[i][j];
            if (det(minor) <= 0) throw RootSystemError("not of finite type: form is not positive definite");
        }
        cartan_.assign(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if ((2 * gram_[i][j]) % gram_[i][i] != 0) throw RootSystemError("non-integral Cartan entry");
                cartan_[i][j] = 2 * gram_[i][j] / gram_[i][i];
            }
        if (names.empty())
            for (std::size_t i = 0; i < n; ++i) names.push_back("α" + std::to_string(i + 1));
        if (ascii.empty())
            for (std::size_t i = 0; i < n; ++i) ascii.push_back("a" + std::to_string(i + 1));
        names_ = std::move(names);
        ascii_ = std::move(ascii);

        // positive roots by height: gamma + alpha_i is a root iff q > 0, q = p - <gamma, alpha_i^vee>
        std::set<Root> pos;
        std::vector<Root> layer;
        for (std::size_t i = 0; i < n; ++i) {
            Root r(n, 0);
            r[i] = 1;
            pos.insert(r);
            layer.push_back(r);
        }
        auto form_q = [&](const Root& x, const Root& y) {
            int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s += x[i] * gram_[i][j] * y[j];
            return s;
        };
        while (!layer.empty()) {
            std::set<Root> next;
            for (const Root& g : layer)
                for (std::size_t i = 0; i < n; ++i) {
                    Root e(n, 0);
                    e[i] = 1;
                    if (g == e) continue;
                    int p = 0;
                    for (Root cur = g;;) {
                        cur[i] -= 1;
                        if (!pos.count(cur)) break;
                        ++p;
                    }
                    int q = p - 2 * form_q(g, e) / gram_[i][i];
                    if (q > 0) {
                        Root s = g;
                        s[i] += 1;
                        next.insert(s);
                    }
                }
            layer.assign(next.begin(), next.end());
            pos.insert(next.begin(), next.end());
        }
        std::vector<Root> p(pos.begin(), pos.end());
        std::sort(p.begin(), p.end(), [](const Root& a, const Root& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
            if (ha != hb) return ha < hb;
            return a > b;
        });
        npos_ = static_cast<int>(p.size());
        roots_ = p;
        for (const Root& r : p) {
            Root m(r);
            for (int& c : m) c = -c;
            roots_.push_back(m);
        }
        for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);

        std::size_t N = roots_.size();
        sum_.assign(N * N, -1);
        form_.assign(N * N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                Root s(n);
                for (std::size_t k = 0; k < n; ++k) s[k] = roots_[i][k] + roots_[j][k];
                sum_[i * N + j] = index_of(s);
                form_[i * N + j] = form_q(roots_[i], roots_[j]);
            }
        max_norm_ = 0;
        for (std::size_t i = 0; i < N; ++i) max_norm_ = std::max(max_norm_, form_[i * N + i]);
        reflect_.assign(N * n, -1);
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                Root r = roots_[k];
                r[i] -= 2 * form_q(roots_[k], roots_[i]) / gram_[i][i];
                int idx = index_of(r);
                if (idx < 0) throw RootSystemError("root set not closed under reflections");
                reflect_[k * n + i] = idx;
            }
        // connected components of the Dynkin diagram
        std::vector<int> comp(n, -1);
        components_ = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<std::size_t> stack{s};
            comp[s] = components_;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t w = 0; w < n; ++w)
                    if (gram_[v][w] != 0 && comp[w] < 0) {
                        comp[w] = components_;
                        stack.push_back(w);
                    }
            }
            ++components_;
        }
        // G2 is written with the long root first, as in 2β+3α
        display_order_.resize(n);
        std::iota(display_order_.begin(), display_order_.end(), 0);
        if (label_ == "G2") display_order_ = {1, 0};
    }

    std::string render(const Root& r, const std::vector<std::string>& names) const {
        bool negative = std::any_of(r.begin(), r.end(), [](int c) { return c < 0; });
        std::string s;
        int terms = 0;
        for (std::size_t k : display_order_) {
            int c = negative ? -r[k] : r[k];
            if (c == 0) continue;
            if (terms++) s += "+";
            if (c != 1) s += std::to_string(c);
            s += names[k];
        }
        if (!negative) return s;
        return terms > 1 ? "-(" + s + ")" : "-" + s;
    }

    std::string label_;
    IntMatrix gram_, cartan_;
    std::vector<std::string> names_, ascii_;
    std::vector<Root> roots_;
    std::map<Root, int> index_;
    std::vector<int> sum_, form_, reflect_;
    std::vector<int> to_bourbaki_;
    std::vector<std::size_t> display_order_;
    int npos_ = 0;
    int max_norm_ = 0;
    int components_ = 0;
};

inline RootSystem build_root_system(const std::string& type_label) { return RootSystem::from_type(type_label); }
inline RootSystem build_root_system(const IntMatrix& cartan) { return RootSystem::from_cartan(cartan); }

}  // namespace hess
