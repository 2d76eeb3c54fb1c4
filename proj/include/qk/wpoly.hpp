#ifndef QK_WPOLY_HPP
#define QK_WPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "rat.hpp"

namespace qk
{

/// Dense univariate polynomial sum_j c_j w^j over a coefficient ring C.
///
/// C must be constructible from Rat and provide +, -, *, unary minus and
/// is_zero(). Coefficients are kept trimmed, so the zero polynomial is empty.
template <typename C>
class WPoly
{
public:
    WPoly() = default;
    WPoly(const C &c0) : c_{c0} { trim(); }
    WPoly(std::initializer_list<C> init) : c_(init) { trim(); }
    explicit WPoly(std::vector<C> c) : c_(std::move(c)) { trim(); }

    /// a + b w.
    static WPoly linear(const C &a, const C &b) { return WPoly({a, b}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    C coeff(int j) const
    {
        if (j < 0 || j > degree()) {
            return C(Rat(0));
        }
        return c_[static_cast<std::size_t>(j)];
    }

    const std::vector<C> &coeffs() const { return c_; }

    friend WPoly operator+(const WPoly &a, const WPoly &b)
    {
        std::vector<C> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), C(Rat(0)));
        for (int j = 0; j <= a.degree(); ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)] + a.c_[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j <= b.degree(); ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)] + b.c_[static_cast<std::size_t>(j)];
        }
        return WPoly(std::move(c));
    }

    WPoly operator-() const
    {
        std::vector<C> c;
        c.reserve(c_.size());
        for (const auto &v : c_) {
            c.push_back(-v);
        }
        return WPoly(std::move(c));
    }

    friend WPoly operator-(const WPoly &a, const WPoly &b) { return a + (-b); }

    friend WPoly operator*(const WPoly &a, const WPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return WPoly();
        }
        std::vector<C> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), C(Rat(0)));
        for (int i = 0; i <= a.degree(); ++i) {
            for (int j = 0; j <= b.degree(); ++j) {
                auto &slot = c[static_cast<std::size_t>(i + j)];
                slot = slot + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return WPoly(std::move(c));
    }

    friend WPoly operator*(const C &s, const WPoly &a)
    {
        std::vector<C> c;
        c.reserve(a.c_.size());
        for (const auto &v : a.c_) {
            c.push_back(s * v);
        }
        return WPoly(std::move(c));
    }

    WPoly &operator+=(const WPoly &o) { return *this = *this + o; }
    WPoly &operator-=(const WPoly &o) { return *this = *this - o; }
    WPoly &operator*=(const WPoly &o) { return *this = *this * o; }

    friend bool operator==(const WPoly &a, const WPoly &b) { return a.c_ == b.c_; }

    WPoly pow(int e) const
    {
        WPoly out(C(Rat(1)));
        for (int i = 0; i < e; ++i) {
            out *= *this;
        }
        return out;
    }

    /// p(a + b w), by Horner.
    WPoly compose_affine(const C &a, const C &b) const
    {
        WPoly out;
        const WPoly lin = linear(a, b);
        for (int j = degree(); j >= 0; --j) {
            out = out * lin + WPoly(c_[static_cast<std::size_t>(j)]);
        }
        return out;
    }

    C eval(const C &w) const
    {
        C out(Rat(0));
        for (int j = degree(); j >= 0; --j) {
            out = out * w + c_[static_cast<std::size_t>(j)];
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const WPoly &p)
    {
        if (p.is_zero()) {
            return os << '0';
        }
        for (int j = 0; j <= p.degree(); ++j) {
            os << (j ? " + " : "") << '(' << p.c_[static_cast<std::size_t>(j)] << ")w^" << j;
        }
        return os;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<C> c_;
};

using RatWPoly = WPoly<Rat>;

/// Rewrites p(w) in the variable z = 1 + d w, i.e. substitutes w = (z-1)/d.
inline RatWPoly to_z_basis(const RatWPoly &p, int d)
{
    return p.compose_affine(Rat(-1, d), Rat(1, d));
}

} // namespace qk

#endif
