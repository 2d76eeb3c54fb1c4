#ifndef QK_GAUSS_MANIN_HPP
#define QK_GAUSS_MANIN_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"
#include "recursion.hpp"
#include "residue.hpp"
#include "sympoly.hpp"
#include "table.hpp"
#include "wpoly.hpp"

namespace qk
{

/// Top index N-1-(N-k)d of the degree-d constants.
inline int top_index(int N, int k, int d) { return N - 1 - (N - k) * d; }

/// Closed-form gamma_m^{N,k,d}(w) over ordered partitions of d.
///
/// `L(d', j)` supplies the constants; it may return zero outside the table.
template <typename C, typename Lookup>
WPoly<C> gamma_closed_form(int N, int k, int d, int m, Lookup &&L)
{
    const int M = top_index(N, k, d);
    WPoly<C> out;
    if (m > M) {
        return out;
    }
    for (const auto &part : ordered_partitions(d)) {
        const int l = part.length();
        std::vector<int> tail(static_cast<std::size_t>(l) + 1, 0); // tail[i] = sum_{n >= i} d_n, 0-based
        for (int i = l - 1; i >= 0; --i) {
            tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] + part.parts[static_cast<std::size_t>(i)];
        }
        WPoly<C> acc;
        // factor i uses j_i in [j_{i-1}, M]
        std::function<void(int, int, int, const WPoly<C> &)> rec = [&](int i, int jprev, int head,
                                                                       const WPoly<C> &cur) {
            if (i == l) {
                acc += cur;
                return;
            }
            const int di = part.parts[static_cast<std::size_t>(i)];
            const WPoly<C> base = WPoly<C>::linear(C(Rat(1)), C(Rat(tail[static_cast<std::size_t>(i)])));
            WPoly<C> pw(C(Rat(1)));
            for (int j = jprev; j <= M; ++j) {
                const C lv = L(di, j + (N - k) * head);
                if (!lv.is_zero()) {
                    rec(i + 1, j, head + di, lv * (pw * cur));
                }
                pw *= base;
            }
        };
        rec(0, m, 0, WPoly<C>(C(Rat(1))));
        if (l % 2 == 0) {
            out -= acc;
        } else {
            out += acc;
        }
    }
    return out;
}

/// gamma_m^{N,k,d}(w) for 1 <= d <= dmax, 0 <= m <= N-1-(N-k)d.
class GammaFamily
{
public:
    GammaFamily(int N, int k, int dmax) : N_(N), k_(k), dmax_(dmax) {}

    int N() const { return N_; }
    int k() const { return k_; }
    int dmax() const { return dmax_; }

    RatWPoly at(int m, int d) const
    {
        auto it = g_.find({m, d});
        return it == g_.end() ? RatWPoly() : it->second;
    }

    void set(int m, int d, RatWPoly p) { g_[{m, d}] = std::move(p); }

    const std::map<std::pair<int, int>, RatWPoly> &values() const { return g_; }

    friend bool operator==(const GammaFamily &a, const GammaFamily &b)
    {
        return a.N_ == b.N_ && a.k_ == b.k_ && a.dmax_ == b.dmax_ && a.g_ == b.g_;
    }

private:
    int N_, k_, dmax_;
    std::map<std::pair<int, int>, RatWPoly> g_;
};

/// Downward recursion in m from the vanishing boundary, degree by degree.
inline GammaFamily gamma_recursive(const ConstantTable &t)
{
    const int N = t.N(), k = t.k();
    GammaFamily G(N, k, t.dmax());
    for (int d = 1; d <= t.dmax(); ++d) {
        const int M = top_index(N, k, d);
        RatWPoly next; // gamma_{m+1}
        for (int m = M; m >= 0; --m) {
            RatWPoly g = RatWPoly::linear(Rat(1), Rat(d)) * next + RatWPoly(t.at(d, m));
            for (int f = 1; f < d; ++f) {
                const Rat lf = t.at(f, m);
                if (!lf.is_zero()) {
                    g -= lf * G.at(m + (N - k) * f, d - f);
                }
            }
            G.set(m, d, g);
            next = g;
        }
    }
    return G;
}

inline GammaFamily gamma_closed(const ConstantTable &t)
{
    const int N = t.N(), k = t.k();
    GammaFamily G(N, k, t.dmax());
    auto L = [&](int d, int m) { return t.at(d, m); };
    for (int d = 1; d <= t.dmax(); ++d) {
        for (int m = top_index(N, k, d); m >= 0; --m) {
            G.set(m, d, gamma_closed_form<Rat>(N, k, d, m, L));
        }
    }
    return G;
}

/// Both routes; throws if they disagree.
inline GammaFamily gamma_from_table(const ConstantTable &t)
{
    GammaFamily a = gamma_recursive(t);
    if (!(a == gamma_closed(t))) {
        throw std::logic_error("gamma_from_table: closed form and recursion disagree");
    }
    return a;
}

/// Fano structure constants from the Givental ODE, degree by degree.
inline ConstantTable solve_constants(int N, int k, int dmax)
{
    if (N - k < 2) {
        throw std::invalid_argument("solve_constants: requires N - k >= 2");
    }
    if (k < 1 || dmax < 0) {
        throw std::invalid_argument("solve_constants: k >= 1 and dmax >= 0 required");
    }
    ConstantTable t(N, k, dmax, Flavor::real);
    if (dmax >= 1) {
        const RatWPoly g = degree_one_generator(k);
        for (int m = 0; m <= t.m_hi(1); ++m) {
            t.set(1, m, g.coeff(m));
        }
        if (g.degree() > t.m_hi(1)) {
            throw std::logic_error("solve_constants: degree-1 generator exceeds range");
        }
    }
    for (int d = 2; d <= dmax; ++d) {
        // gamma_0^d = 0: the l = 1 sum equals minus the l >= 2 terms
        auto lower = [&](int dd, int m) { return dd == d ? Rat(0) : t.at(dd, m); };
        const RatWPoly rhs = -gamma_closed_form<Rat>(N, k, d, 0, lower);
        const RatWPoly z = to_z_basis(rhs, d);
        const int M = top_index(N, k, d);
        for (int j = 0; j <= z.degree(); ++j) {
            if (j > M || j < t.m_lo(d)) {
                if (!z.coeff(j).is_zero()) {
                    throw std::logic_error("solve_constants: consistency violation at d=" + std::to_string(d));
                }
                continue;
            }
            t.set(d, j, z.coeff(j));
        }
    }
    return t;
}

/// Polynomial in the derivative symbol, coefficient of D^j at index j.
using DPoly = std::vector<Rat>;

inline DPoly dpoly_trim(DPoly p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
    return p;
}

/// Scalar ODE D^{N-1} - sum_{d >= 1} e^{dt} P_d(D), e^{dt} to the left.
struct ScalarODE {
    int order = 0;
    std::vector<DPoly> levels; // levels[0] = D^order, levels[d] = P_d

    friend bool operator==(const ScalarODE &a, const ScalarODE &b)
    {
        if (a.order != b.order || a.levels.size() != b.levels.size()) {
            return false;
        }
        for (std::size_t d = 0; d < a.levels.size(); ++d) {
            if (dpoly_trim(a.levels[d]) != dpoly_trim(b.levels[d])) {
                return false;
            }
        }
        return true;
    }
};

/// The Gauss-Manin system of a table.
struct GMSystem {
    int N;
    int k;
    int dmax;
    ConstantTable table;

    explicit GMSystem(ConstantTable t) : N(t.N()), k(t.k()), dmax(t.dmax()), table(std::move(t)) {}
};

inline ScalarODE reduce_to_ode(const GMSystem &sys)
{
    const GammaFamily G = gamma_from_table(sys.table);
    ScalarODE ode;
    ode.order = sys.N - 1;
    ode.levels.resize(static_cast<std::size_t>(sys.dmax) + 1);
    ode.levels[0] = DPoly(static_cast<std::size_t>(ode.order) + 1);
    ode.levels[0].back() = Rat(1);
    for (int d = 1; d <= sys.dmax; ++d) {
        const int M = top_index(sys.N, sys.k, d);
        DPoly p(static_cast<std::size_t>(std::max(M, -1) + 1));
        const RatWPoly g = G.at(0, d);
        for (int j = 0; j <= g.degree(); ++j) {
            if (M - j < 0) {
                throw std::logic_error("reduce_to_ode: gamma degree exceeds bound");
            }
            p[static_cast<std::size_t>(M - j)] = g.coeff(j);
        }
        ode.levels[static_cast<std::size_t>(d)] = dpoly_trim(p);
    }
    return ode;
}

/// k prod_{m=1}^{k-1} (k D + m).
inline DPoly givental_level_one(int k)
{
    RatWPoly p{Rat(k)};
    for (int m = 1; m < k; ++m) {
        p *= RatWPoly::linear(Rat(m), Rat(k));
    }
    return p.coeffs();
}

/// D^{N-1} - k e^t prod_{m=1}^{k-1}(k D + m), truncated at dmax.
inline ScalarODE givental_ode(int N, int k, int dmax)
{
    ScalarODE ode;
    ode.order = N - 1;
    ode.levels.resize(static_cast<std::size_t>(dmax) + 1);
    ode.levels[0] = DPoly(static_cast<std::size_t>(N), Rat(0));
    ode.levels[0].back() = Rat(1);
    if (dmax >= 1) {
        ode.levels[1] = givental_level_one(k);
    }
    return ode;
}

/// Result of a polynomial identity check with a readable diff on failure.
struct CheckResult {
    bool ok = true;
    std::string report;
    explicit operator bool() const { return ok; }
};

/// Image of L^{N,k,d}_m under the recursion, as a polynomial in the (N+1) symbols.
inline SymPoly phi_symbol(int N, int k, int d, int m)
{
    SymPoly out;
    for (const auto &t : recursion_terms(d, N, k)) {
        SymPoly term(t.coeff);
        for (const auto &[dd, sh] : t.factors) {
            const int mm = m + sh;
            if (mm < 0 || mm > top_index(N + 1, k, dd)) {
                term = SymPoly();
                break;
            }
            term = term * SymPoly::symbol(dd, mm);
        }
        out = out + term;
    }
    return out;
}

/// Symbolic gamma_0^{N,k,d}(w) with free symbols L_m^{d'} on the virtual index range.
inline WPoly<SymPoly> gamma0_symbolic(int N, int k, int d)
{
    auto L = [&](int dd, int m) {
        if (m < 0 || m > top_index(N, k, dd)) {
            return SymPoly();
        }
        return SymPoly::symbol(dd, m);
    };
    return gamma_closed_form<SymPoly>(N, k, d, 0, L);
}

/// phi(gamma_0^{N,k,d}) == prod_{j=1}^{d-1}(1 + j w) gamma_0^{N+1,k,d}, as polynomials in the (N+1) symbols.
inline CheckResult theorem4_check(int N, int k, int d)
{
    const WPoly<SymPoly> lhs_raw = gamma0_symbolic(N, k, d);
    std::map<Sym, SymPoly> memo;
    auto phi = [&](const Sym &s) -> SymPoly {
        auto it = memo.find(s);
        if (it == memo.end()) {
            it = memo.emplace(s, phi_symbol(N, k, s.d, s.m)).first;
        }
        return it->second;
    };
    std::vector<SymPoly> lc;
    for (const auto &c : lhs_raw.coeffs()) {
        lc.push_back(c.substitute(phi));
    }
    const WPoly<SymPoly> lhs(lc);
    WPoly<SymPoly> pref(SymPoly(1));
    for (int j = 1; j < d; ++j) {
        pref *= WPoly<SymPoly>::linear(SymPoly(1), SymPoly(j));
    }
    const WPoly<SymPoly> rhs = pref * gamma0_symbolic(N + 1, k, d);
    CheckResult r;
    r.ok = lhs == rhs;
    if (!r.ok) {
        std::ostringstream os;
        os << "gamma scaling(" << N << ',' << k << ',' << d << "): difference " << (lhs - rhs);
        r.report = os.str();
    }
    return r;
}

/// Same identity on numbers: phi evaluated with the (N+1) table.
inline CheckResult theorem4_check_numeric(const ConstantTable &upper, int d)
{
    const int N = upper.N() - 1, k = upper.k();
    const ConstantTable lower = recursion_step(upper, N);
    auto Lu = [&](int dd, int m) { return upper.at(dd, m); };
    auto Ll = [&](int dd, int m) { return lower.at(dd, m); };
    const RatWPoly lhs = gamma_closed_form<Rat>(N, k, d, 0, Ll);
    const RatWPoly rhs = rising_w(d - 1) * gamma_closed_form<Rat>(N + 1, k, d, 0, Lu);
    CheckResult r;
    r.ok = lhs == rhs;
    if (!r.ok) {
        std::ostringstream os;
        os << "gamma scaling numeric(" << N << ',' << k << ',' << d << "): " << lhs << " vs " << rhs;
        r.report = os.str();
    }
    return r;
}

/// gamma_0^{N,k,d} = (prod_{j<d}(1 + j w))^{2k-N} gamma_0^{2k,k,d} for k+2 <= N <= 2k.
inline bool gamma_scaling_check(int N, int k, int dmax)
{
    const GammaFamily a = gamma_from_table(solve_constants(N, k, dmax));
    const GammaFamily b = gamma_from_table(solve_constants(2 * k, k, dmax));
    for (int d = 1; d <= dmax; ++d) {
        if (!(a.at(0, d) == rising_w(d - 1).pow(2 * k - N) * b.at(0, d))) {
            return false;
        }
    }
    return true;
}

} // namespace qk

#endif
