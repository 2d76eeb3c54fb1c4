#ifndef QK_RECURSION_HPP
#define QK_RECURSION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "rat.hpp"
#include "residue.hpp"
#include "table.hpp"
#include "wpoly.hpp"

namespace qk
{

/// Poly_d in variables x = 0, z_1..z_{d-1} = 1..d-1, y = d.
///
/// Assembled from the iterated residues of every ordered partition, z_{i_j}
/// appearing with positive exponent exactly at the breakpoints.
inline MPoly poly_d_uncached(int d)
{
    if (d < 1) {
        throw std::invalid_argument("poly_d: d >= 1 required");
    }
    MPoly P(d + 1);
    for (const auto &part : ordered_partitions(d)) {
        const auto br = part.breaks();
        const int l = part.length();
        std::vector<int> exps(static_cast<std::size_t>(l - 1), 1);
        while (true) {
            int s = 0;
            for (int e : exps) {
                s += e;
            }
            if (s <= d - 1) {
                const BiPoly f = iterated_residue(part, exps);
                MPoly z = MPoly::constant(d + 1, Rat(1));
                for (int j = 1; j < l; ++j) {
                    z *= MPoly::var(d + 1, br[static_cast<std::size_t>(j)], exps[static_cast<std::size_t>(j - 1)]);
                }
                P += f.remap(d + 1, {0, d}) * z;
            }
            // next exponent vector with entries in 1..d-1
            int j = l - 2;
            while (j >= 0 && ++exps[static_cast<std::size_t>(j)] > d - 1) {
                exps[static_cast<std::size_t>(j)] = 1;
                --j;
            }
            if (j < 0) {
                break;
            }
        }
    }
    return P;
}

/// Poly_d through the all-unit-blocks integral: the coefficient of prod z_j^{e_j}
/// is the circle product over breakpoints 0,1,...,d with unit blocks.
inline MPoly poly_d_direct(int d)
{
    if (d < 1) {
        throw std::invalid_argument("poly_d: d >= 1 required");
    }
    MPoly P(d + 1);
    std::vector<int> br(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        br[static_cast<std::size_t>(i)] = i;
    }
    const std::vector<BiPoly> ones(static_cast<std::size_t>(d), MPoly::constant(2, Rat(1)));
    std::vector<int> exps(static_cast<std::size_t>(d - 1), 0);
    while (true) {
        int s = 0;
        for (int e : exps) {
            s += e;
        }
        if (s <= d - 1) {
            const BiPoly f = circ_product(br, exps, ones);
            MPoly z = MPoly::constant(d + 1, Rat(1));
            for (int j = 1; j < d; ++j) {
                z *= MPoly::var(d + 1, j, exps[static_cast<std::size_t>(j - 1)]);
            }
            P += f.remap(d + 1, {0, d}) * z;
        }
        int j = d - 2;
        while (j >= 0 && ++exps[static_cast<std::size_t>(j)] > d - 1) {
            exps[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) {
            break;
        }
    }
    return P;
}

/// Cached Poly_d; safe to call from several threads.
inline const MPoly &poly_d(int d)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<MPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[d];
    if (!slot) {
        slot = std::make_unique<MPoly>(poly_d_uncached(d));
    }
    return *slot;
}

/// Breakpoints of a Poly_d monomial: 0, the z-indices present, d.
inline std::vector<int> monomial_breaks(const MPoly::Exps &e)
{
    const int d = static_cast<int>(e.size()) - 1;
    std::vector<int> br{0};
    for (int j = 1; j < d; ++j) {
        if (e[static_cast<std::size_t>(j)] > 0) {
            br.push_back(j);
        }
    }
    br.push_back(d);
    return br;
}

/// Index shifts for the monomial x^{e_0} z_{i_1}^{e_{i_1}} ... y^{e_d}, N the target dimension.
inline std::vector<int> delta_shift(const MPoly::Exps &e, int N, int k)
{
    const int d = static_cast<int>(e.size()) - 1;
    int total = 0;
    for (int v : e) {
        if (v < 0) {
            throw std::invalid_argument("delta_shift: negative exponent");
        }
        total += v;
    }
    if (d < 1 || total != d - 1) {
        throw std::invalid_argument("delta_shift: monomial must have degree d-1");
    }
    const auto br = monomial_breaks(e);
    const int l = static_cast<int>(br.size()) - 1;
    const int yexp = e[static_cast<std::size_t>(d)];
    std::vector<int> delta(static_cast<std::size_t>(l));
    for (int h = 1; h <= l; ++h) {
        const int prev = br[static_cast<std::size_t>(h - 1)];
        int v = (l - d) + (h == 1 ? 0 : prev - (h - 1)) + (h == 1 ? 0 : prev * (N - k)) + yexp;
        for (int j = h; j <= l - 1; ++j) {
            v += e[static_cast<std::size_t>(br[static_cast<std::size_t>(j)])] - 1;
        }
        delta[static_cast<std::size_t>(h - 1)] = v;
    }
    return delta;
}

/// One monomial of Poly_d, prepared for the recursion: coefficient and (degree, shift) per factor.
struct RecursionTerm {
    Rat coeff;
    std::vector<std::pair<int, int>> factors;
};

inline std::vector<RecursionTerm> recursion_terms(int d, int N, int k)
{
    std::vector<RecursionTerm> out;
    for (const auto &[e, c] : poly_d(d).terms()) {
        const auto br = monomial_breaks(e);
        const auto delta = delta_shift(e, N, k);
        RecursionTerm t{c, {}};
        for (std::size_t h = 1; h < br.size(); ++h) {
            t.factors.emplace_back(br[h] - br[h - 1], delta[h - 1]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// Table at (N, k) from the table at (N+1, k).
inline ConstantTable recursion_step(const ConstantTable &src, int N)
{
    if (src.N() != N + 1) {
        throw std::invalid_argument("recursion_step: source must sit at N+1");
    }
    const int k = src.k();
    ConstantTable out(N, k, src.dmax(), Flavor::virtual_);
    for (int d = 1; d <= src.dmax(); ++d) {
        const auto terms = recursion_terms(d, N, k);
        for (int m = out.m_lo(d); m <= out.m_hi(d); ++m) {
            Rat v;
            for (const auto &t : terms) {
                Rat prod = t.coeff;
                for (const auto &[dd, sh] : t.factors) {
                    prod *= src.at(dd, m + sh);
                    if (prod.is_zero()) {
                        break;
                    }
                }
                v += prod;
            }
            out.set(d, m, v);
        }
    }
    return out;
}

/// k prod_{j=1}^{k-1} (j w + (k - j)); its w^m coefficient is the degree-1 constant L_m.
inline RatWPoly degree_one_generator(int k)
{
    RatWPoly p{Rat(k)};
    for (int j = 1; j < k; ++j) {
        p *= RatWPoly::linear(Rat(k - j), Rat(j));
    }
    return p;
}

/// Virtual structure constants: recursion down from N0 = max(N, 2k).
inline ConstantTable virtual_table(int N, int k, int dmax)
{
    if (N < 1 || k < 1 || dmax < 0) {
        throw std::invalid_argument("virtual_table: N, k >= 1 and dmax >= 0 required");
    }
    const int N0 = std::max(N, 2 * k);
    ConstantTable t(N0, k, dmax, Flavor::virtual_);
    if (dmax >= 1) {
        const RatWPoly g = degree_one_generator(k);
        for (int m = t.m_lo(1); m <= t.m_hi(1); ++m) {
            t.set(1, m, g.coeff(m));
        }
    }
    for (int n = N0 - 1; n >= N; --n) {
        t = recursion_step(t, n);
    }
    return t;
}

} // namespace qk

#endif
