#pragma once
// Weyl groups as signed permutations of the root set.

#include "hess/rootcore.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hess {

/// Element handle: index into the enumeration (length, then canonical word).
using Elem = int;

struct ParabolicDecomposition {
    std::vector<int> levi_subset;
    std::vector<Elem> wl_elements;
    std::vector<Elem> min_reps;
};

class WeylGroup {
public:
    explicit WeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) { enumerate(); }

    const RootSystem& roots() const { return *rs_; }
    int size() const { return static_cast<int>(length_.size()); }
    std::size_t rank() const { return rs_->rank(); }
    Elem identity() const { return 0; }
    Elem simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
    Elem longest() const { return size() - 1; }

    int length(Elem w) const { return length_[w]; }
    /// Lexicographically least reduced word.
    const std::vector<int>& word(Elem w) const { return word_[w]; }

    /// Image of root index k under w.
    int act(Elem w, int k) const { return perm_[static_cast<std::size_t>(w) * nroots_ + k]; }

    Elem mul(Elem a, Elem b) const {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < rank(); ++i) key = (key << 8) | static_cast<std::uint64_t>(act(a, act(b, i)));
        return lookup(key);
    }
    Elem inverse(Elem w) const { return inv_[w]; }

    Elem from_word(const std::vector<int>& word) const {
        Elem w = identity();
        for (int i : word) {
            if (i < 0 || static_cast<std::size_t>(i) >= rank()) throw std::out_of_range("from_word: letter");
            w = mul(w, simple(i));
        }
        return w;
    }

    /// Phi_w = { gamma > 0 : w^{-1} gamma < 0 }, sorted.
    std::vector<int> inversion_set(Elem w) const {
        std::vector<int> r;
        Elem wi = inverse(w);
        for (int g = 0; g < rs_->num_positive(); ++g)
            if (!rs_->is_positive(act(wi, g))) r.push_back(g);
        return r;
    }

    bool is_left_descent(Elem w, int i) const { return !rs_->is_positive(act(inverse(w), i)); }
    bool is_right_descent(Elem w, int i) const { return !rs_->is_positive(act(w, i)); }

    bool in_parabolic(Elem w, const std::vector<int>& J) const {
        for (int i : word(w))
            if (std::find(J.begin(), J.end(), i) == J.end()) return false;
        return true;
    }
    /// v in W^L: no left descent in J.
    bool is_min_rep(Elem v, const std::vector<int>& J) const {
        for (int j : J)
            if (is_left_descent(v, j)) return false;
        return true;
    }

    std::vector<Elem> parabolic_subgroup(const std::vector<int>& J) const {
        std::vector<Elem> r;
        for (Elem w = 0; w < size(); ++w)
            if (in_parabolic(w, J)) r.push_back(w);
        return r;
    }
    std::vector<Elem> min_coset_reps(const std::vector<int>& J) const {
        std::vector<Elem> r;
        for (Elem w = 0; w < size(); ++w)
            if (is_min_rep(w, J)) r.push_back(w);
        return r;
    }
    ParabolicDecomposition parabolic(const std::vector<int>& J) const {
        return {J, parabolic_subgroup(J), min_coset_reps(J)};
    }

    /// w = y v with y in W_L, v in W^L; checks the length and inversion-set identities.
    std::pair<Elem, Elem> parabolic_decompose(Elem w, const std::vector<int>& J) const {
        Elem y = identity(), v = w;
        for (bool again = true; again;) {
            again = false;
            for (int j : J)
                if (is_left_descent(v, j)) {
                    v = mul(simple(j), v);
                    y = mul(y, simple(j));
                    again = true;
                    break;
                }
        }
        if (mul(y, v) != w || length(y) + length(v) != length(w))
            throw std::logic_error("parabolic_decompose: length is not additive");
        std::vector<int> expect = inversion_set(y);
        for (int g : inversion_set(v)) expect.push_back(act(y, g));
        std::sort(expect.begin(), expect.end());
        if (expect != inversion_set(w)) throw std::logic_error("parabolic_decompose: inversion sets disagree");
        return {y, v};
    }

    /// Strong Bruhat order, by the lifting property.
    bool bruhat_leq(Elem u, Elem w) const {
        while (true) {
            if (length(u) > length(w)) return false;
            if (w == identity()) return u == identity();
            int s = word(w).front();
            Elem sw = mul(simple(s), w);
            if (is_left_descent(u, s)) u = mul(simple(s), u);
            w = sw;
        }
    }

    std::vector<Elem> lower_interval(Elem w) const {
        std::vector<Elem> r;
        for (Elem u = 0; u < size(); ++u)
            if (bruhat_leq(u, w)) r.push_back(u);
        return r;
    }

    /// Word over named reflections, e.g. "s1 s2" or "st" for G2; "e" for the identity.
    std::string name(Elem w) const {
        if (w == identity()) return "e";
        std::string s;
        bool g2 = rs_->label() == "G2";
        for (int i : word(w)) {
            if (g2) {
                s += i == 0 ? "s" : "t";
            } else {
                if (!s.empty()) s += " ";
                s += "s" + std::to_string(i + 1);
            }
        }
        return s;
    }

    /**
     * Parse a dihedral expression in s, t, r = st for G2, e.g. "tr^-2", "sr3",
     * "r⁻⁴" or "e". For other types, a space-separated word "s1 s3 s2".
     */
    Elem parse(const std::string& text) const {
        if (rs_->label() != "G2") {
            std::vector<int> word;
            std::size_t pos = 0;
            while (pos < text.size()) {
                if (text[pos] == ' ') {
                    ++pos;
                    continue;
                }
                if (text[pos] == 'e') {
                    ++pos;
                    continue;
                }
                if (text[pos] != 's') throw std::invalid_argument("cannot parse Weyl element '" + text + "'");
                ++pos;
                std::size_t used = 0;
                int k = std::stoi(text.substr(pos), &used);
                pos += used;
                word.push_back(k - 1);
            }
            return from_word(word);
        }
        Elem s = simple(0), t = simple(1), r = mul(s, t);
        Elem w = identity();
        std::size_t pos = 0;
        auto power = [&](Elem x, int k) {
            Elem b = k < 0 ? inverse(x) : x;
            Elem p = identity();
            for (int i = 0; i < (k < 0 ? -k : k); ++i) p = mul(p, b);
            return p;
        };
        while (pos < text.size()) {
            char c = text[pos++];
            Elem base;
            if (c == 'e') continue;
            if (c == ' ' || c == '*') continue;
            if (c == 's') base = s;
            else if (c == 't') base = t;
            else if (c == 'r') base = r;
            else throw std::invalid_argument("cannot parse Weyl element '" + text + "'");
            int k = 1;
            std::size_t save = pos;
            if (pos < text.size() && (text[pos] == '^' || std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                      text[pos] == '-')) {
                if (text[pos] == '^') ++pos;
                if (pos < text.size() && text[pos] == '{') ++pos;
                std::size_t used = 0;
                k = std::stoi(text.substr(pos), &used);
                pos += used;
                if (pos < text.size() && text[pos] == '}') ++pos;
            } else if (pos < text.size() && static_cast<unsigned char>(text[pos]) >= 0x80) {
                k = parse_superscript(text, pos);
                if (pos == save) k = 1;
            }
            w = mul(w, power(base, k));
        }
        return w;
    }

private:
    static int parse_superscript(const std::string& text, std::size_t& pos) {
        static const std::vector<std::string> digits{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        static const std::string minus = "⁻";
        int sign = 1, value = 0;
        bool any = false;
        if (text.compare(pos, minus.size(), minus) == 0) {
            sign = -1;
            pos += minus.size();
        }
        for (bool more = true; more;) {
            more = false;
            for (std::size_t d = 0; d < digits.size(); ++d)
                if (text.compare(pos, digits[d].size(), digits[d]) == 0) {
                    value = value * 10 + static_cast<int>(d);
                    pos += digits[d].size();
                    more = any = true;
                    break;
                }
        }
        if (!any) throw std::invalid_argument("bad exponent in '" + text + "'");
        return sign * value;
    }

    Elem lookup(std::uint64_t key) const {
        auto it = index_.find(key);
        if (it == index_.end()) throw std::logic_error("WeylGroup: element not found");
        return it->second;
    }

    std::uint64_t key_of(const std::vector<std::int16_t>& p) const {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < rank(); ++i) key = (key << 8) | static_cast<std::uint64_t>(p[i]);
        return key;
    }

    void enumerate() {
        const RootSystem& rs = *rs_;
        std::size_t n = rs.rank();
        if (n > 8) throw std::invalid_argument("WeylGroup: rank above 8 is not supported");
        nroots_ = static_cast<std::size_t>(rs.num_roots());
        using Perm = std::vector<std::int16_t>;
        struct Node {
            Perm perm;
            std::vector<int> word;
        };
        std::unordered_map<std::uint64_t, std::size_t> seen;  // key -> position in `all`
        std::vector<Node> all;
        std::vector<int> lengths;
        Perm id(nroots_);
        for (std::size_t k = 0; k < nroots_; ++k) id[k] = static_cast<std::int16_t>(k);
        all.push_back({id, {}});
        lengths.push_back(0);
        seen[key_of(id)] = 0;
        std::size_t begin = 0, end = 1;
        int len = 0;
        while (begin < end) {
            ++len;
            std::vector<Node> layer;
            std::unordered_map<std::uint64_t, std::size_t> layer_seen;
            for (std::size_t w = begin; w < end; ++w) {
                for (std::size_t i = 0; i < n; ++i) {
                    Perm p(nroots_);
                    for (std::size_t k = 0; k < nroots_; ++k)
                        p[k] = static_cast<std::int16_t>(rs.reflect(static_cast<int>(i), all[w].perm[k]));
                    std::uint64_t key = key_of(p);
                    if (seen.count(key) || layer_seen.count(key)) continue;
                    layer_seen[key] = layer.size();
                    layer.push_back({std::move(p), {}});
                }
            }
            // canonical word: smallest left descent, then the canonical word of the shorter element
            for (auto& node : layer) {
                for (std::size_t i = 0; i < n; ++i) {
                    Perm p(nroots_);
                    for (std::size_t k = 0; k < n; ++k)
                        p[k] = static_cast<std::int16_t>(rs.reflect(static_cast<int>(i), node.perm[k]));
                    auto it = seen.find(key_of(p));
                    if (it != seen.end() && lengths[it->second] == len - 1) {
                        node.word = {static_cast<int>(i)};
                        const auto& rest = all[it->second].word;
                        node.word.insert(node.word.end(), rest.begin(), rest.end());
                        break;
                    }
                }
            }
            std::sort(layer.begin(), layer.end(), [](const Node& a, const Node& b) { return a.word < b.word; });
            for (auto& node : layer) {
                seen[key_of(node.perm)] = all.size();
                all.push_back(std::move(node));
                lengths.push_back(len);
            }
            begin = end;
            end = all.size();
        }
        std::size_t N = all.size();
        perm_.resize(N * nroots_);
        length_ = lengths;
        word_.resize(N);
        for (std::size_t w = 0; w < N; ++w) {
            std::copy(all[w].perm.begin(), all[w].perm.end(), perm_.begin() + static_cast<long>(w * nroots_));
            word_[w] = std::move(all[w].word);
            index_[key_of(all[w].perm)] = static_cast<Elem>(w);
        }
        simple_.resize(n);
        for (std::size_t i = 0; i < n; ++i) simple_[i] = lookup(key_of(single(i)));
        inv_.resize(N);
        for (std::size_t w = 0; w < N; ++w) {
            std::vector<int> pre(nroots_);
            for (std::size_t k = 0; k < nroots_; ++k) pre[static_cast<std::size_t>(act(static_cast<Elem>(w), static_cast<int>(k)))] = static_cast<int>(k);
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < n; ++i) key = (key << 8) | static_cast<std::uint64_t>(pre[i]);
            inv_[w] = lookup(key);
        }
    }

    std::vector<std::int16_t> single(std::size_t i) const {
        std::vector<std::int16_t> p(nroots_);
        for (std::size_t k = 0; k < nroots_; ++k)
            p[k] = static_cast<std::int16_t>(rs_->reflect(static_cast<int>(i), static_cast<int>(k)));
        return p;
    }

    std::shared_ptr<const RootSystem> rs_;
    std::size_t nroots_ = 0;
    std::vector<std::int16_t> perm_;
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::unordered_map<std::uint64_t, Elem> index_;
    std::vector<Elem> simple_, inv_;
};

}  // namespace hess
