#pragma once
// Independent reference computations used to cross-check the library.
// Everything here works on plain coordinate vectors and integer Cartan matrices.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

/// <beta, alpha_i^vee> with cartan[i][j] = <alpha_j, alpha_i^vee>.
inline int pair_with_coroot(const Mat& cartan, const Vec& beta, std::size_t i) {
    int s = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan[i][j];
    return s;
}

inline Vec reflect(const Mat& cartan, Vec beta, std::size_t i) {
    beta[i] -= pair_with_coroot(cartan, beta, i);
    return beta;
}

/// Positive roots by the root-string rule: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
inline std::set<Vec> positive_roots(const Mat& cartan) {
    std::size_t n = cartan.size();
    std::set<Vec> roots;
    std::vector<Vec> layer;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        roots.insert(e);
    }
    while (!layer.empty()) {
        std::set<Vec> next;
        for (const Vec& b : layer)
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                Vec down = b;
                while (true) {
                    down[i] -= 1;
                    if (!roots.count(down)) break;
                    ++p;
                }
                if (p - pair_with_coroot(cartan, b, i) > 0) {
                    Vec up = b;
                    up[i] += 1;
                    if (!roots.count(up)) next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        roots.insert(next.begin(), next.end());
    }
    return roots;
}

inline bool is_positive(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
           std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

/// w(beta) for w = s_{word[0]} ... s_{word[k-1]}.
inline Vec act_word(const Mat& cartan, const std::vector<int>& word, Vec beta) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) beta = reflect(cartan, beta, static_cast<std::size_t>(*it));
    return beta;
}

/// {gamma > 0 : w^{-1}(gamma) < 0} by scanning every positive root.
inline std::set<Vec> inversion_set(const Mat& cartan, const std::vector<int>& word) {
    std::vector<int> inv(word.rbegin(), word.rend());
    std::set<Vec> r;
    for (const Vec& g : positive_roots(cartan))
        if (!is_positive(act_word(cartan, inv, g))) r.insert(g);
    return r;
}

/// Upper-closed subsets of the positive roots, by brute force over all subsets.
inline std::set<std::set<Vec>> upper_closed_subsets(const Mat& cartan) {
    std::set<Vec> pos = positive_roots(cartan);
    std::vector<Vec> list(pos.begin(), pos.end());
    std::size_t n = cartan.size();
    std::set<std::set<Vec>> out;
    for (unsigned long mask = 0; mask < (1ul << list.size()); ++mask) {
        std::set<Vec> S;
        for (std::size_t k = 0; k < list.size(); ++k)
            if (mask & (1ul << k)) S.insert(list[k]);
        bool closed = true;
        for (const Vec& g : S)
            for (std::size_t i = 0; i < n && closed; ++i) {
                Vec up = g;
                up[i] += 1;
                if (pos.count(up) && !S.count(up)) closed = false;
            }
        if (closed) out.insert(S);
    }
    return out;
}

}  // namespace oracle
