#pragma once
// Sparse multivariate polynomials over an exact field, plus univariate helpers.

#include "hess/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

template <class K>
class Poly {
public:
    using Mono = std::vector<int>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const K& c) {
        Poly p(nvars);
        p.add_term(Mono(nvars, 0), c);
        return p;
    }
    static Poly var(std::size_t nvars, std::size_t i, const K& c = K(1)) {
        if (i >= nvars) throw std::out_of_range("Poly::var: index");
        Mono m(nvars, 0);
        m[i] = 1;
        Poly p(nvars);
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Mono, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_unit_mono(terms_.begin()->first));
    }
    K constant_term() const { return coeff(Mono(nvars_, 0)); }
    K coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Mono& m, const K& c) {
        if (m.size() != nvars_) throw std::invalid_argument("Poly: monomial arity");
        if (c == K(0)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m(ma);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) {
        Poly r(a.nvars_);
        if (s == K(0)) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned n) const {
        Poly r = constant(nvars_, K(1));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    int degree_in(std::size_t v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    bool uses(std::size_t v) const { return degree_in(v) > 0; }

    std::set<Mono> support() const {
        std::set<Mono> s;
        for (const auto& [m, c] : terms_) s.insert(m);
        return s;
    }

    /// Coefficient of z_v^k, as a polynomial not involving z_v.
    Poly coefficient_of(std::size_t v, int k) const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m[v] == k) {
                Mono mm(m);
                mm[v] = 0;
                r.add_term(mm, c);
            }
        return r;
    }

    /// Replace z_v by p.
    Poly substitute(std::size_t v, const Poly& p) const {
        check(p);
        Poly r(nvars_);
        int deg = degree_in(v);
        if (deg < 0) return r;
        std::vector<Poly> powers{constant(nvars_, K(1))};
        for (int i = 1; i <= deg; ++i) powers.push_back(powers.back() * p);
        for (const auto& [m, c] : terms_) {
            Mono mm(m);
            int e = mm[v];
            mm[v] = 0;
            Poly t(nvars_);
            t.add_term(mm, c);
            r += t * powers[e];
        }
        return r;
    }

    K evaluate(const std::vector<K>& x) const {
        K s(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= x[i];
            s += t;
        }
        return s;
    }

    template <class K2>
    Poly<K2> convert() const {
        Poly<K2> r(nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, K2(c));
        return r;
    }

    /// Human-readable form; terms by total degree, then variable order.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Mono, K>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            int dx = 0, dy = 0;
            for (int e : x.first) dx += e;
            for (int e : y.first) dy += e;
            if (dx != dy) return dx < dy;
            return x.first > y.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            std::string ms;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!ms.empty()) ms += "*";
                ms += i < names.size() ? names[i] : "z" + std::to_string(i + 1);
                if (m[i] > 1) ms += "^" + std::to_string(m[i]);
            }
            std::string term;
            if (ms.empty()) term = cs;
            else if (cs == "1") term = ms;
            else if (cs.find_first_of("+-", 1) != std::string::npos) term = "(" + cs + ")*" + ms;
            else term = cs + "*" + ms;
            if (first) out += neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }

private:
    static bool is_unit_mono(const Mono& m) {
        return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    }
    static std::string coeff_str(const Q& c) { return to_string(c); }
    static std::string coeff_str(const QuadNumber& c) { return c.str(); }
    void check(const Poly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    }

    std::size_t nvars_;
    std::map<Mono, K> terms_;
};

using QPoly = Poly<Q>;

// ---------------------------------------------------------------------------
// Univariate polynomials as dense coefficient vectors, low degree first.

template <class K>
using UPoly = std::vector<K>;

template <class K>
void trim(UPoly<K>& p) {
    while (!p.empty() && p.back() == K(0)) p.pop_back();
}

template <class K>
int degree(const UPoly<K>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class K>
UPoly<K> to_univariate(const Poly<K>& p, std::size_t v) {
    UPoly<K> r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != v && m[i] != 0) throw std::invalid_argument("to_univariate: other variables present");
        if (static_cast<int>(r.size()) <= m[v]) r.resize(m[v] + 1, K(0));
        r[m[v]] += c;
    }
    trim(r);
    return r;
}

template <class K>
void divmod(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& quo, UPoly<K>& rem) {
    if (b.empty()) throw std::domain_error("divmod: zero divisor");
    rem = a;
    trim(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, K(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        std::size_t shift = rem.size() - b.size();
        K f = rem.back() / b.back();
        quo[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= f * b[i];
        trim(rem);
    }
}

template <class K>
UPoly<K> monic(UPoly<K> p) {
    trim(p);
    if (p.empty()) return p;
    K lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly<K> q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class K>
UPoly<K> derivative(const UPoly<K>& p) {
    UPoly<K> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(K(static_cast<int>(i)) * p[i]);
    trim(d);
    return d;
}

/// p / gcd(p, p'), monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    UPoly<K> g = gcd(p, derivative(p));
    UPoly<K> q, r;
    divmod(p, g, q, r);
    return monic(q);
}

template <class K>
K uevaluate(const UPoly<K>& p, const K& x) {
    K s(0);
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

/// Distinct rational roots of a nonzero polynomial over Q, ascending.
inline std::vector<Q> rational_roots(UPoly<Q> p) {
    trim(p);
    std::vector<Q> roots;
    if (p.size() <= 1) return roots;
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) roots.push_back(Q(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (p.size() <= 1) return roots;
    Z l = 1;
    for (const auto& c : p) l = boost::multiprecision::lcm(l, denom(c));
    std::vector<Z> ip;
    for (const auto& c : p) ip.push_back(numer(c * Q(l)));
    auto divisors = [](Z n) {
        if (n < 0) n = -n;
        std::vector<Z> ds;
        for (Z d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    for (const Z& a : divisors(ip.front()))
        for (const Z& b : divisors(ip.back()))
            for (int sgn : {1, -1}) {
                Q x = Q(a * sgn, b);
                if (uevaluate(p, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hess
