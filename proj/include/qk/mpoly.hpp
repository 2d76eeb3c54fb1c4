#ifndef QK_MPOLY_HPP
#define QK_MPOLY_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace qk
{

/// Sparse multivariate Laurent polynomial over Rat in a fixed number of variables.
///
/// Exponents may be negative; most callers only build ordinary polynomials.
class MPoly
{
public:
    using Exps = std::vector<int>;

    explicit MPoly(int nvars = 0) : n_(nvars) {}

    static MPoly constant(int nvars, const Rat &c)
    {
        MPoly p(nvars);
        p.add(Exps(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static MPoly var(int nvars, int i, int power = 1, const Rat &c = Rat(1))
    {
        MPoly p(nvars);
        Exps e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = power;
        p.add(e, c);
        return p;
    }

    static MPoly monomial(Exps e, const Rat &c)
    {
        MPoly p(static_cast<int>(e.size()));
        p.add(e, c);
        return p;
    }

    /// sum_i c_i x_i.
    static MPoly linear(const std::vector<Rat> &c)
    {
        MPoly p(static_cast<int>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_zero()) {
                p += var(static_cast<int>(c.size()), static_cast<int>(i), 1, c[i]);
            }
        }
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exps, Rat> &terms() const { return t_; }

    Rat coeff(const Exps &e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add(const Exps &e, const Rat &c)
    {
        if (static_cast<int>(e.size()) != n_) {
            throw std::invalid_argument("MPoly: exponent arity mismatch");
        }
        if (c.is_zero()) {
            return;
        }
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            t_.erase(it);
        }
    }

    MPoly &operator+=(const MPoly &o)
    {
        check(o);
        for (const auto &[e, c] : o.t_) {
            add(e, c);
        }
        return *this;
    }

    MPoly &operator-=(const MPoly &o)
    {
        check(o);
        for (const auto &[e, c] : o.t_) {
            add(e, -c);
        }
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }

    MPoly operator-() const
    {
        MPoly p(n_);
        for (const auto &[e, c] : t_) {
            p.t_.emplace(e, -c);
        }
        return p;
    }

    friend MPoly operator*(const MPoly &a, const MPoly &b)
    {
        a.check(b);
        MPoly p(a.n_);
        Exps e(static_cast<std::size_t>(a.n_));
        for (const auto &[ea, ca] : a.t_) {
            for (const auto &[eb, cb] : b.t_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                p.add(e, ca * cb);
            }
        }
        return p;
    }

    friend MPoly operator*(const Rat &r, const MPoly &a)
    {
        MPoly p(a.n_);
        if (r.is_zero()) {
            return p;
        }
        for (const auto &[e, c] : a.t_) {
            p.t_.emplace(e, r * c);
        }
        return p;
    }

    MPoly &operator*=(const MPoly &o) { return *this = *this * o; }

    friend bool operator==(const MPoly &a, const MPoly &b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    MPoly pow(int e) const
    {
        MPoly out = constant(n_, Rat(1));
        for (int i = 0; i < e; ++i) {
            out *= *this;
        }
        return out;
    }

    int max_degree(int var) const
    {
        int m = 0;
        bool first = true;
        for (const auto &[e, c] : t_) {
            const int v = e[static_cast<std::size_t>(var)];
            if (first || v > m) {
                m = v;
                first = false;
            }
        }
        return m;
    }

    int total_degree_max() const
    {
        int m = 0;
        bool first = true;
        for (const auto &[e, c] : t_) {
            int s = 0;
            for (int v : e) {
                s += v;
            }
            if (first || s > m) {
                m = s;
                first = false;
            }
        }
        return m;
    }

    bool homogeneous(int deg) const
    {
        for (const auto &[e, c] : t_) {
            int s = 0;
            for (int v : e) {
                s += v;
            }
            if (s != deg) {
                return false;
            }
        }
        return true;
    }

    /// Splits by the power of one variable; the variable's exponent is zeroed in each part.
    std::map<int, MPoly> by_power(int var) const
    {
        std::map<int, MPoly> out;
        for (const auto &[e, c] : t_) {
            Exps f = e;
            const int p = f[static_cast<std::size_t>(var)];
            f[static_cast<std::size_t>(var)] = 0;
            out.try_emplace(p, n_).first->second.add(f, c);
        }
        return out;
    }

    /// Replaces variable var by a polynomial (not containing var), nonnegative powers only.
    MPoly substitute(int var, const MPoly &val) const
    {
        check(val);
        MPoly out(n_);
        std::vector<MPoly> powers{constant(n_, Rat(1))};
        for (const auto &[p, part] : by_power(var)) {
            if (p < 0) {
                throw std::domain_error("MPoly: substitution into negative power");
            }
            while (static_cast<int>(powers.size()) <= p) {
                powers.push_back(powers.back() * val);
            }
            out += part * powers[static_cast<std::size_t>(p)];
        }
        return out;
    }

    /// Keeps monomials with the given variable's exponent satisfying pred.
    template <typename Pred>
    MPoly filter(int var, Pred pred) const
    {
        MPoly out(n_);
        for (const auto &[e, c] : t_) {
            if (pred(e[static_cast<std::size_t>(var)])) {
                out.t_.emplace(e, c);
            }
        }
        return out;
    }

    /// Moves to a new variable set: variable i goes to slot map[i].
    MPoly remap(int nvars, const std::vector<int> &map) const
    {
        MPoly out(nvars);
        for (const auto &[e, c] : t_) {
            Exps f(static_cast<std::size_t>(nvars), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) {
                    f.at(static_cast<std::size_t>(map.at(i))) += e[i];
                }
            }
            out.add(f, c);
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const MPoly &p)
    {
        if (p.t_.empty()) {
            return os << '0';
        }
        bool first = true;
        for (const auto &[e, c] : p.t_) {
            os << (first ? "" : " + ") << c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) {
                    os << "*v" << i << '^' << e[i];
                }
            }
            first = false;
        }
        return os;
    }

private:
    void check(const MPoly &o) const
    {
        if (o.n_ != n_) {
            throw std::invalid_argument("MPoly: variable count mismatch");
        }
    }

    int n_;
    std::map<Exps, Rat> t_;
};

} // namespace qk

#endif
