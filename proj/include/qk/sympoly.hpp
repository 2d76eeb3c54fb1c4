#ifndef QK_SYMPOLY_HPP
#define QK_SYMPOLY_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace qk
{

/// Formal symbol L_m^{d} at a fixed ambient (N, k); ordered by (d, m).
struct Sym {
    int d = 0;
    int m = 0;
    friend auto operator<=>(const Sym &, const Sym &) = default;
};

/// Sparse polynomial with Rat coefficients in commuting symbols L_m^{d}.
class SymPoly
{
public:
    using Monomial = std::vector<Sym>; // sorted multiset

    SymPoly() = default;
    SymPoly(const Rat &c)
    {
        if (!c.is_zero()) {
            t_[{}] = c;
        }
    }
    SymPoly(int c) : SymPoly(Rat(c)) {}

    static SymPoly symbol(int d, int m) { return from(Monomial{Sym{d, m}}, Rat(1)); }

    static SymPoly from(Monomial mono, const Rat &c)
    {
        SymPoly p;
        std::sort(mono.begin(), mono.end());
        if (!c.is_zero()) {
            p.t_[std::move(mono)] = c;
        }
        return p;
    }

    const std::map<Monomial, Rat> &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    friend SymPoly operator+(SymPoly a, const SymPoly &b)
    {
        for (const auto &[m, c] : b.t_) {
            a.add(m, c);
        }
        return a;
    }

    SymPoly operator-() const
    {
        SymPoly p;
        for (const auto &[m, c] : t_) {
            p.t_[m] = -c;
        }
        return p;
    }

    friend SymPoly operator-(const SymPoly &a, const SymPoly &b) { return a + (-b); }

    friend SymPoly operator*(const SymPoly &a, const SymPoly &b)
    {
        SymPoly p;
        for (const auto &[ma, ca] : a.t_) {
            for (const auto &[mb, cb] : b.t_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                p.add(m, ca * cb);
            }
        }
        return p;
    }

    friend bool operator==(const SymPoly &a, const SymPoly &b) { return a.t_ == b.t_; }

    /// Ring homomorphism defined on symbols.
    template <typename F>
    SymPoly substitute(F &&image) const
    {
        SymPoly out;
        for (const auto &[m, c] : t_) {
            SymPoly term(c);
            for (const auto &s : m) {
                term = term * image(s);
                if (term.is_zero()) {
                    break;
                }
            }
            out = out + term;
        }
        return out;
    }

    /// Evaluation with a numeric assignment of symbols.
    template <typename F>
    Rat eval(F &&value) const
    {
        Rat out;
        for (const auto &[m, c] : t_) {
            Rat term = c;
            for (const auto &s : m) {
                term *= value(s);
            }
            out += term;
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const SymPoly &p)
    {
        if (p.t_.empty()) {
            return os << '0';
        }
        bool first = true;
        for (const auto &[m, c] : p.t_) {
            os << (first ? "" : " + ") << c;
            for (const auto &s : m) {
                os << "*L[" << s.d << ',' << s.m << ']';
            }
            first = false;
        }
        return os;
    }

private:
    void add(const Monomial &m, const Rat &c)
    {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!c.is_zero()) {
                t_.emplace(m, c);
            }
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            t_.erase(it);
        }
    }

    std::map<Monomial, Rat> t_;
};

} // namespace qk

#endif
