#ifndef QK_RESIDUE_HPP
#define QK_RESIDUE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "rat.hpp"
#include "wpoly.hpp"

namespace qk
{

// ---------------------------------------------------------------------------
// Ordered partitions

/// Parts d_1..d_l of d with breakpoints 0 = i_0 < ... < i_l = d.
struct OrderedPartition {
    std::vector<int> parts;

    static OrderedPartition from_breaks(const std::vector<int> &breaks)
    {
        OrderedPartition p;
        for (std::size_t j = 1; j < breaks.size(); ++j) {
            if (breaks[j] <= breaks[j - 1]) {
                throw std::invalid_argument("OrderedPartition: breakpoints must increase");
            }
            p.parts.push_back(breaks[j] - breaks[j - 1]);
        }
        return p;
    }

    std::vector<int> breaks() const
    {
        std::vector<int> b{0};
        for (int d : parts) {
            if (d < 1) {
                throw std::invalid_argument("OrderedPartition: parts must be positive");
            }
            b.push_back(b.back() + d);
        }
        return b;
    }

    int total() const
    {
        int s = 0;
        for (int d : parts) {
            s += d;
        }
        return s;
    }

    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const OrderedPartition &, const OrderedPartition &) = default;
};

/// All ordered partitions of d, in lexicographic order of parts.
inline std::vector<OrderedPartition> ordered_partitions(int d)
{
    std::vector<OrderedPartition> out;
    if (d <= 0) {
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(d);
    return out;
}

// ---------------------------------------------------------------------------
// Exact residues of rational functions with homogeneous linear denominators

namespace detail
{

using LinForm = std::vector<Rat>;
using Den = std::map<LinForm, int>;

/// Scales the form so its first nonzero coefficient is 1; returns the scale.
inline Rat normalize(LinForm &f)
{
    for (const auto &c : f) {
        if (!c.is_zero()) {
            const Rat s = c;
            for (auto &x : f) {
                x /= s;
            }
            return s;
        }
    }
    throw std::domain_error("residue: zero linear form");
}

inline LinForm linform_of(const MPoly &p)
{
    LinForm f(static_cast<std::size_t>(p.nvars()));
    for (const auto &[e, c] : p.terms()) {
        int deg = 0;
        int at = -1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            deg += e[i];
            if (e[i] != 0) {
                at = static_cast<int>(i);
            }
        }
        if (deg != 1 || at < 0 || e[static_cast<std::size_t>(at)] != 1) {
            throw std::domain_error("residue: expected a homogeneous linear form");
        }
        f[static_cast<std::size_t>(at)] = c;
    }
    return f;
}

/// Sum of terms num / prod form^e with normalized forms; like denominators merged.
class RationalSum
{
public:
    explicit RationalSum(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }
    const std::map<Den, MPoly> &terms() const { return t_; }

    void add(const Den &den, const MPoly &num)
    {
        if (num.is_zero()) {
            return;
        }
        auto it = t_.find(den);
        if (it == t_.end()) {
            t_.emplace(den, num);
            return;
        }
        it->second += num;
        if (it->second.is_zero()) {
            t_.erase(it);
        }
    }

    /// Adds num / (form^e) * den, absorbing the normalization scale into num.
    static void push_factor(Den &den, MPoly &num, LinForm form, int e)
    {
        if (e == 0) {
            return;
        }
        const Rat s = normalize(form);
        num = s.pow(-e) * num;
        den[form] += e;
    }

    /// Contour integral over variable v enclosing every finite pole except the
    /// root of `excluded` (already normalized), divided by 2 pi i.
    RationalSum integrate(int v, const std::optional<LinForm> &excluded) const
    {
        RationalSum out(n_);
        for (const auto &[den, num] : t_) {
            integrate_term(out, den, num, v, excluded);
        }
        return out;
    }

    /// The sum as a polynomial; fails when denominators survive.
    MPoly polynomial() const
    {
        MPoly p(n_);
        for (const auto &[den, num] : t_) {
            if (!den.empty()) {
                throw std::logic_error("residue: non-polynomial result");
            }
            p += num;
        }
        return p;
    }

private:
    struct Factor {
        Rat a;    // coefficient of v
        MPoly b;  // remaining part
        int e;
        LinForm form;
    };

    static void compositions(int total, std::size_t parts, std::vector<int> &cur,
                             const std::function<void(const std::vector<int> &)> &f)
    {
        if (parts == 0) {
            if (total == 0) {
                f(cur);
            }
            return;
        }
        if (parts == 1) {
            cur.push_back(total);
            f(cur);
            cur.pop_back();
            return;
        }
        for (int n = 0; n <= total; ++n) {
            cur.push_back(n);
            compositions(total - n, parts - 1, cur, f);
            cur.pop_back();
        }
    }

    void integrate_term(RationalSum &out, const Den &den, const MPoly &num, int v,
                        const std::optional<LinForm> &excluded) const
    {
        Den indep;
        std::vector<Factor> dep;
        std::optional<Factor> skip;
        for (const auto &[form, e] : den) {
            const Rat &a = form[static_cast<std::size_t>(v)];
            if (a.is_zero()) {
                indep.emplace(form, e);
                continue;
            }
            LinForm rest = form;
            rest[static_cast<std::size_t>(v)] = Rat(0);
            Factor f{a, MPoly::linear(rest), e, form};
            if (excluded && form == *excluded) {
                skip = f;
            }
            dep.push_back(std::move(f));
        }

        // sum of all finite residues = coefficient of v^{-1} at infinity
        int E = 0;
        for (const auto &f : dep) {
            E += f.e;
        }
        const auto parts = num.by_power(v);
        int maxT = -1;
        for (const auto &[p, Np] : parts) {
            maxT = std::max(maxT, p - E + 1);
        }
        if (maxT >= 0 && !dep.empty()) {
            std::vector<std::vector<MPoly>> powb(dep.size());
            for (std::size_t i = 0; i < dep.size(); ++i) {
                const MPoly ratio = dep[i].a.inverse() * dep[i].b;
                powb[i].push_back(MPoly::constant(n_, Rat(1)));
                for (int n = 1; n <= maxT; ++n) {
                    powb[i].push_back(powb[i].back() * ratio);
                }
            }
            Rat scale(1);
            for (const auto &f : dep) {
                scale *= f.a.pow(-f.e);
            }
            std::vector<int> cur;
            for (const auto &[p, Np] : parts) {
                const int T = p - E + 1;
                if (T < 0) {
                    continue;
                }
                compositions(T, dep.size(), cur, [&](const std::vector<int> &ns) {
                    Rat c = scale;
                    MPoly acc = Np;
                    for (std::size_t i = 0; i < dep.size(); ++i) {
                        c *= gen_binomial(-dep[i].e, ns[i]);
                        if (ns[i] > 0) {
                            acc *= powb[i][static_cast<std::size_t>(ns[i])];
                        }
                    }
                    out.add(indep, c * acc);
                });
            }
        }

        if (!skip) {
            return;
        }
        // subtract the residue at the root of the excluded form
        const Factor &g = *skip;
        const MPoly root = (-g.a.inverse()) * g.b;
        const MPoly shifted = num.substitute(v, root + MPoly::var(n_, v));
        const auto sparts = shifted.by_power(v);

        struct Other {
            Rat a;
            Rat lambda;
            LinForm chat;
            int e;
        };
        std::vector<Other> others;
        for (const auto &f : dep) {
            if (f.form == g.form) {
                continue;
            }
            LinForm c = linform_of(f.a * root + f.b);
            const Rat lambda = normalize(c);
            others.push_back({f.a, lambda, c, f.e});
        }
        const int need = g.e - 1;
        const Rat ge = g.a.pow(-g.e);
        std::vector<int> cur;
        for (const auto &[t, Nt] : sparts) {
            if (t > need) {
                continue;
            }
            compositions(need - t, others.size(), cur, [&](const std::vector<int> &ns) {
                Rat c = ge;
                Den d = indep;
                for (std::size_t i = 0; i < others.size(); ++i) {
                    const auto &o = others[i];
                    c *= gen_binomial(-o.e, ns[i]) * o.a.pow(ns[i]) * o.lambda.pow(-o.e - ns[i]);
                    d[o.chat] += o.e + ns[i];
                }
                out.add(d, (-c) * Nt);
            });
        }
    }

    int n_;
    std::map<Den, MPoly> t_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Ordered products of bivariate blocks

/// Generic bivariate polynomial in (x, y) = variables 0 and 1.
using BiPoly = MPoly;

inline BiPoly bi_x() { return MPoly::var(2, 0); }
inline BiPoly bi_y() { return MPoly::var(2, 1); }

/// Coefficient of x^j y^{deg-j}.
inline Rat bi_coeff(const BiPoly &p, int j, int deg) { return p.coeff({j, deg - j}); }

/// f_{(d)}(x, y) = prod_{j=1}^{d-1} (j x + (d-j) y) / d.
inline BiPoly base_poly(int d)
{
    if (d < 1) {
        throw std::invalid_argument("base_poly: d >= 1 required");
    }
    BiPoly p = MPoly::constant(2, Rat(1));
    for (int j = 1; j < d; ++j) {
        p *= Rat(j, d) * bi_x() + Rat(d - j, d) * bi_y();
    }
    return p;
}

/// a_j(d): coefficient of x^j y^{d-1-j} in f_{(d)}.
inline Rat base_coeff(int d, int j) { return bi_coeff(base_poly(d), j, d - 1); }

/// prod_j alpha_j(u_{j-1}, u_j) * prod_{interior j} u_j^{-(e_j - 1)} in l+1 variables.
inline MPoly chain_integrand(const std::vector<BiPoly> &alphas, const std::vector<int> &exps)
{
    const int l = static_cast<int>(alphas.size());
    if (l < 1 || static_cast<int>(exps.size()) != l - 1) {
        throw std::invalid_argument("chain: need l blocks and l-1 exponents");
    }
    MPoly F = MPoly::constant(l + 1, Rat(1));
    for (int j = 1; j <= l; ++j) {
        F *= alphas[static_cast<std::size_t>(j - 1)].remap(l + 1, {j - 1, j});
    }
    for (int j = 1; j < l; ++j) {
        F *= MPoly::var(l + 1, j, 1 - exps[static_cast<std::size_t>(j - 1)]);
    }
    return F;
}

/// The circle product of a Laurent integrand F(u_{i_0}, ..., u_{i_l}).
///
/// Integrates u_{i_{l-1}} down to u_{i_1}. The contour for u_{i_j} encloses
/// every pole except the root of the previous linear factor.
inline BiPoly circ_integrand(const std::vector<int> &breaks, const MPoly &F)
{
    const int l = static_cast<int>(breaks.size()) - 1;
    if (l < 1 || F.nvars() != l + 1) {
        throw std::invalid_argument("circ: integrand arity must match breakpoints");
    }
    if (l == 1) {
        return F;
    }
    auto bi = [&](int j) { return breaks[static_cast<std::size_t>(j)]; };
    std::vector<detail::LinForm> L(static_cast<std::size_t>(l));
    for (int j = 1; j < l; ++j) {
        detail::LinForm f(static_cast<std::size_t>(l + 1));
        f[static_cast<std::size_t>(j)] = Rat(bi(j + 1) - bi(j - 1));
        f[static_cast<std::size_t>(j + 1)] = Rat(-(bi(j) - bi(j - 1)));
        f[static_cast<std::size_t>(j - 1)] = Rat(-(bi(j + 1) - bi(j)));
        L[static_cast<std::size_t>(j)] = f;
    }
    Rat pref(bi(l) - bi(0));
    for (int j = 1; j <= l - 2; ++j) {
        pref *= Rat(bi(j + 1) - bi(j));
    }

    detail::RationalSum sum(l + 1);
    for (const auto &[e, c] : F.terms()) {
        detail::Den den;
        MPoly::Exps pos = e;
        MPoly num(l + 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) {
                if (i == 0 || static_cast<int>(i) == l) {
                    throw std::invalid_argument("circ: negative power of an outer variable");
                }
                pos[i] = 0;
            }
        }
        num.add(pos, pref * c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) {
                detail::LinForm u(static_cast<std::size_t>(l + 1));
                u[i] = Rat(1);
                detail::RationalSum::push_factor(den, num, u, -e[i]);
            }
        }
        for (int j = 1; j < l; ++j) {
            detail::RationalSum::push_factor(den, num, L[static_cast<std::size_t>(j)], 1);
        }
        sum.add(den, num);
    }
    for (int j = l - 1; j >= 1; --j) {
        std::optional<detail::LinForm> ex;
        if (j >= 2) {
            detail::LinForm f = L[static_cast<std::size_t>(j - 1)];
            detail::normalize(f);
            ex = f;
        }
        sum = sum.integrate(j, ex);
    }
    std::vector<int> map(static_cast<std::size_t>(l + 1), 0);
    map[static_cast<std::size_t>(l)] = 1;
    return sum.polynomial().remap(2, map);
}

/// alpha_1 o ... o alpha_l over the given breakpoints.
inline BiPoly circ_product(const std::vector<int> &breaks, const std::vector<int> &exps,
                           const std::vector<BiPoly> &alphas)
{
    return circ_integrand(breaks, chain_integrand(alphas, exps));
}

/// Keeps nonnegative interior degrees, then puts interior points on the segment.
inline BiPoly star_integrand(const std::vector<int> &breaks, const MPoly &F)
{
    const int l = static_cast<int>(breaks.size()) - 1;
    if (l < 1 || F.nvars() != l + 1) {
        throw std::invalid_argument("star: integrand arity must match breakpoints");
    }
    MPoly G = F;
    for (int j = 1; j < l; ++j) {
        G = G.filter(j, [](int p) { return p >= 0; });
    }
    const Rat span(breaks.back() - breaks.front());
    for (int j = 1; j < l; ++j) {
        const Rat ty = Rat(breaks[static_cast<std::size_t>(j)] - breaks.front()) / span;
        const Rat tx = Rat(breaks.back() - breaks[static_cast<std::size_t>(j)]) / span;
        G = G.substitute(j, ty * MPoly::var(l + 1, l) + tx * MPoly::var(l + 1, 0));
    }
    std::vector<int> map(static_cast<std::size_t>(l + 1), 0);
    map[static_cast<std::size_t>(l)] = 1;
    return G.remap(2, map);
}

inline BiPoly star_product(const std::vector<int> &breaks, const std::vector<int> &exps,
                           const std::vector<BiPoly> &alphas)
{
    return star_integrand(breaks, chain_integrand(alphas, exps));
}

/// Coefficient polynomial of z_{i_1}^{e_1}...z_{i_{l-1}}^{e_{l-1}} in Poly_d for this partition.
inline BiPoly iterated_residue(const OrderedPartition &p, const std::vector<int> &exps)
{
    if (static_cast<int>(exps.size()) != p.length() - 1) {
        throw std::invalid_argument("iterated_residue: need one exponent per interior breakpoint");
    }
    int s = 0;
    for (int e : exps) {
        if (e < 0) {
            throw std::invalid_argument("iterated_residue: negative exponent");
        }
        s += e;
    }
    if (s > p.total() - 1) {
        throw std::invalid_argument("iterated_residue: exponents exceed d-1");
    }
    std::vector<BiPoly> alphas;
    for (int d : p.parts) {
        alphas.push_back(base_poly(d));
    }
    return circ_product(p.breaks(), exps, alphas);
}

// ---------------------------------------------------------------------------
// Identities among the products

namespace detail
{

inline std::vector<int> sub(const std::vector<int> &v, int a, int b)
{
    return std::vector<int>(v.begin() + a, v.begin() + b);
}

/// Compositions of n (ordered, positive parts) as cut lists 0 = h_0 < ... < h_s = n.
inline std::vector<std::vector<int>> cuts(int n)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> h{0};
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) {
                h.push_back(i);
            }
        }
        h.push_back(n);
        out.push_back(h);
    }
    return out;
}

/// Block [a, b) of leaves: breakpoints breaks[a..b], interior exponents exps[a..b-2].
inline std::vector<int> block_breaks(const std::vector<int> &breaks, int a, int b) { return sub(breaks, a, b + 1); }
inline std::vector<int> block_exps(const std::vector<int> &exps, int a, int b)
{
    return b - a >= 2 ? sub(exps, a, b - 1) : std::vector<int>{};
}

} // namespace detail

/// Right side of the star-expansion of the circle product (inclusion-exclusion over interior points).
inline BiPoly circ_via_star_blocks(const std::vector<int> &breaks, const std::vector<int> &exps,
                                   const std::vector<BiPoly> &alphas)
{
    const int l = static_cast<int>(alphas.size());
    if (l == 1) {
        return alphas[0];
    }
    BiPoly out(2);
    for (const auto &h : detail::cuts(l)) {
        const int s = static_cast<int>(h.size()) - 1;
        if (s == l) {
            continue;
        }
        std::vector<BiPoly> blocks;
        std::vector<int> ob, oe;
        for (int n = 0; n < s; ++n) {
            const int a = h[static_cast<std::size_t>(n)], b = h[static_cast<std::size_t>(n) + 1];
            blocks.push_back(b - a == 1 ? alphas[static_cast<std::size_t>(a)]
                                        : star_product(detail::block_breaks(breaks, a, b),
                                                       detail::block_exps(exps, a, b),
                                                       std::vector<BiPoly>(alphas.begin() + a, alphas.begin() + b)));
            ob.push_back(breaks[static_cast<std::size_t>(a)]);
            if (n > 0) {
                oe.push_back(exps[static_cast<std::size_t>(a - 1)]);
            }
        }
        ob.push_back(breaks.back());
        const BiPoly term = circ_product(ob, oe, blocks);
        if ((l - 1 - s) % 2) {
            out -= term;
        } else {
            out += term;
        }
    }
    return out;
}

/// Right side of the circle-then-star expansion: sum over s >= 2 of (-1)^s star of circle blocks.
inline BiPoly circ_via_circ_blocks(const std::vector<int> &breaks, const std::vector<int> &exps,
                                   const std::vector<BiPoly> &alphas)
{
    const int l = static_cast<int>(alphas.size());
    if (l == 1) {
        return alphas[0];
    }
    BiPoly out(2);
    for (const auto &h : detail::cuts(l)) {
        const int s = static_cast<int>(h.size()) - 1;
        if (s < 2) {
            continue;
        }
        std::vector<BiPoly> blocks;
        std::vector<int> ob, oe;
        for (int n = 0; n < s; ++n) {
            const int a = h[static_cast<std::size_t>(n)], b = h[static_cast<std::size_t>(n) + 1];
            blocks.push_back(b - a == 1 ? alphas[static_cast<std::size_t>(a)]
                                        : circ_product(detail::block_breaks(breaks, a, b),
                                                       detail::block_exps(exps, a, b),
                                                       std::vector<BiPoly>(alphas.begin() + a, alphas.begin() + b)));
            ob.push_back(breaks[static_cast<std::size_t>(a)]);
            if (n > 0) {
                oe.push_back(exps[static_cast<std::size_t>(a - 1)]);
            }
        }
        ob.push_back(breaks.back());
        const BiPoly term = star_product(ob, oe, blocks);
        if (s % 2) {
            out -= term;
        } else {
            out += term;
        }
    }
    return out;
}

/// Signed sum of all bracketings of alpha_1 * ... * alpha_l.
///
/// A bracketing is a plane tree whose internal nodes have at least two
/// children; it contributes (-1)^{l - (internal nodes - 1)}.
inline BiPoly circ_via_bracketings(const std::vector<int> &breaks, const std::vector<int> &exps,
                                   const std::vector<BiPoly> &alphas)
{
    const int l = static_cast<int>(alphas.size());
    if (l == 1) {
        return alphas[0];
    }
    struct Val {
        BiPoly p;
        int internal;
    };
    std::function<std::vector<Val>(int, int)> trees = [&](int a, int b) -> std::vector<Val> {
        if (b - a == 1) {
            return {{alphas[static_cast<std::size_t>(a)], 0}};
        }
        std::vector<Val> out;
        for (const auto &h : detail::cuts(b - a)) {
            const int s = static_cast<int>(h.size()) - 1;
            if (s < 2) {
                continue;
            }
            // cartesian product of the children's bracketings
            std::vector<std::vector<Val>> kids;
            for (int n = 0; n < s; ++n) {
                kids.push_back(trees(a + h[static_cast<std::size_t>(n)], a + h[static_cast<std::size_t>(n) + 1]));
            }
            std::vector<int> ob, oe;
            for (int n = 0; n < s; ++n) {
                const int c = a + h[static_cast<std::size_t>(n)];
                ob.push_back(breaks[static_cast<std::size_t>(c)]);
                if (n > 0) {
                    oe.push_back(exps[static_cast<std::size_t>(c - 1)]);
                }
            }
            ob.push_back(breaks[static_cast<std::size_t>(b)]);
            std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
            while (true) {
                std::vector<BiPoly> blocks;
                int internal = 1;
                for (int n = 0; n < s; ++n) {
                    const Val &v = kids[static_cast<std::size_t>(n)][idx[static_cast<std::size_t>(n)]];
                    blocks.push_back(v.p);
                    internal += v.internal;
                }
                out.push_back({star_product(ob, oe, blocks), internal});
                int n = s - 1;
                while (n >= 0 && ++idx[static_cast<std::size_t>(n)] == kids[static_cast<std::size_t>(n)].size()) {
                    idx[static_cast<std::size_t>(n)] = 0;
                    --n;
                }
                if (n < 0) {
                    break;
                }
            }
        }
        return out;
    };
    BiPoly out(2);
    for (const auto &v : trees(0, l)) {
        if ((l - (v.internal - 1)) % 2) {
            out -= v.p;
        } else {
            out += v.p;
        }
    }
    return out;
}

/// Circle product of the part of the chain integrand with every interior degree <= -1.
inline BiPoly circ_negative_part(const std::vector<int> &breaks, const std::vector<int> &exps,
                                 const std::vector<BiPoly> &alphas)
{
    MPoly F = chain_integrand(alphas, exps);
    const int l = static_cast<int>(alphas.size());
    for (int j = 1; j < l; ++j) {
        F = F.filter(j, [](int p) { return p <= -1; });
    }
    return circ_integrand(breaks, F);
}

/// Left side of the block-coefficient identity whose right side is prod_{j=1}^{d-1}(1 + j w).
inline RatWPoly wow_lhs(const OrderedPartition &p)
{
    const auto br = p.breaks();
    const int l = p.length();
    const int d = p.total();
    auto ib = [&](int j) { return j < 0 ? 0 : br[static_cast<std::size_t>(j)]; };
    RatWPoly out;
    std::vector<int> c(static_cast<std::size_t>(l), 0);
    while (true) {
        RatWPoly term(Rat(1));
        int prev = 0;
        for (int j = 1; j <= l; ++j) {
            const int cj = c[static_cast<std::size_t>(j - 1)];
            term = base_coeff(p.parts[static_cast<std::size_t>(j - 1)], cj) * term;
            const int e = cj - prev + ib(j - 1) - ib(j - 2);
            if (e < 0) {
                throw std::logic_error("wow: negative exponent");
            }
            term *= RatWPoly::linear(Rat(1), Rat(d - ib(j - 1))).pow(e);
            prev = cj;
        }
        out += term;
        int j = l - 1;
        while (j >= 0 && ++c[static_cast<std::size_t>(j)] >= p.parts[static_cast<std::size_t>(j)]) {
            c[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) {
            break;
        }
    }
    return out;
}

/// prod_{j=1}^{n} (1 + j w).
inline RatWPoly rising_w(int n)
{
    RatWPoly p(Rat(1));
    for (int j = 1; j <= n; ++j) {
        p *= RatWPoly::linear(Rat(1), Rat(j));
    }
    return p;
}

} // namespace qk

#endif
