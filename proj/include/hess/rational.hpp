#pragma once
// Exact rationals and the quadratic extension Q(sqrt d).

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace hess {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

inline std::string to_string(const Q& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline bool is_integer(const Q& q) { return boost::multiprecision::denominator(q) == 1; }

inline Z numer(const Q& q) { return boost::multiprecision::numerator(q); }
inline Z denom(const Q& q) { return boost::multiprecision::denominator(q); }

/// Integer square root test; returns true and sets r when n is a perfect square.
inline bool exact_sqrt(const Z& n, Z& r) {
    if (n < 0) return false;
    r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

inline bool is_rational_square(const Q& q, Q& root) {
    Z a, b;
    if (!exact_sqrt(numer(q), a) || !exact_sqrt(denom(q), b)) return false;
    root = Q(a, b);
    return true;
}

/**
 * @brief Element a + b*sqrt(d) of Q(sqrt d).
 *
 * d is carried by each element; elements with b == 0 are plain rationals and
 * mix freely with any radicand.
 */
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(int v) : a_(v) {}
    QuadNumber(const Q& v) : a_(v) {}
    QuadNumber(const Q& a, const Q& b, const Q& d) : a_(a), b_(b), d_(d) { normalize(); }

    const Q& a() const { return a_; }
    const Q& b() const { return b_; }
    const Q& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
        return QuadNumber(x.a_ + y.a_, x.b_ + y.b_, radicand(x, y));
    }
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
        return QuadNumber(x.a_ - y.a_, x.b_ - y.b_, radicand(x, y));
    }
    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
        Q d = radicand(x, y);
        return QuadNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
        Q d = radicand(x, y);
        Q n = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (n == 0) throw std::domain_error("QuadNumber: division by zero");
        QuadNumber conj(y.a_ / n, -y.b_ / n, d);
        return x * conj;
    }
    QuadNumber operator-() const { return QuadNumber(-a_, -b_, d_); }
    QuadNumber& operator+=(const QuadNumber& y) { return *this = *this + y; }
    QuadNumber& operator-=(const QuadNumber& y) { return *this = *this - y; }
    QuadNumber& operator*=(const QuadNumber& y) { return *this = *this * y; }
    QuadNumber& operator/=(const QuadNumber& y) { return *this = *this / y; }
    friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadNumber& x, const QuadNumber& y) { return !(x == y); }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s;
        if (a_ != 0) s = to_string(a_) + (b_ > 0 ? "+" : "-");
        else if (b_ < 0) s = "-";
        Q ab = b_ < 0 ? Q(-b_) : b_;
        if (ab != 1) s += to_string(ab) + "*";
        return s + "sqrt(" + to_string(d_) + ")";
    }

private:
    static Q radicand(const QuadNumber& x, const QuadNumber& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_)
            throw std::domain_error("QuadNumber: mixed radicands");
        return x.b_ != 0 ? x.d_ : y.d_;
    }
    void normalize() {
        if (b_ == 0) d_ = 0;
    }

    Q a_{0}, b_{0}, d_{0};
};

}  // namespace hess
