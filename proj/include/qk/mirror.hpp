#ifndef QK_MIRROR_HPP
#define QK_MIRROR_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "givental.hpp"
#include "rat.hpp"
#include "recursion.hpp"
#include "series.hpp"
#include "table.hpp"

namespace qk
{

/// Virtual Calabi-Yau series 1 + sum_d L~_n^{k,k,d} q^d for n = 0..k-1.
struct CYSeriesFamily {
    int k = 0;
    int D = 0;
    std::vector<QSeries> L;

    static CYSeriesFamily from_table(const ConstantTable &t)
    {
        if (t.N() != t.k()) {
            throw std::invalid_argument("CYSeriesFamily: table must have N = k");
        }
        CYSeriesFamily f;
        f.k = t.k();
        f.D = t.dmax();
        for (int n = 0; n < f.k; ++n) {
            QSeries s = QSeries::constant(f.D, Rat(1));
            for (int d = 1; d <= f.D; ++d) {
                s[d] = t.at(d, n);
            }
            f.L.push_back(s);
        }
        return f;
    }

    const QSeries &operator[](int n) const { return L.at(static_cast<std::size_t>(n)); }
};

inline CYSeriesFamily cy_family(int k, int D)
{
    if (k < 3) {
        throw std::invalid_argument("cy_family: k >= 3 required");
    }
    return CYSeriesFamily::from_table(virtual_table(k, k, D));
}

struct MirrorMap {
    LogSeries forward; // t(x)
    LogSeries inverse; // x(t)
};

/// t = x + sum_d (L~_1^d / d) e^{dx} and its inverse.
inline MirrorMap mirror_map(const CYSeriesFamily &f)
{
    LogSeries t(f.D, 1);
    t[1] = QSeries::constant(f.D, Rat(1));
    for (int d = 1; d <= f.D; ++d) {
        t[0][d] = f[1][d] / Rat(d);
    }
    return {t, exp_reversion(t)};
}

/// L_n(e^t) = L~_n(e^{x(t)}) / L~_1(e^{x(t)}) for every n = 0..k-1.
///
/// Only n = 2..k-3 are structure constants; the rest are diagnostic ratios.
inline std::vector<QSeries> mirror_transform_all(const CYSeriesFamily &f)
{
    const QSeries e = mirror_map(f).inverse[0];
    const QSeries denom = compose_exp(f[1], e);
    std::vector<QSeries> out;
    for (int n = 0; n < f.k; ++n) {
        out.push_back(compose_exp(f[n], e) / denom);
    }
    return out;
}

/// Structure constants L_m^{k,k}(q), m = 2..k-3.
inline std::map<int, QSeries> mirror_transform(int k, int D)
{
    if (k < 5) {
        throw std::invalid_argument("mirror_transform: k >= 5 required");
    }
    const auto all = mirror_transform_all(cy_family(k, D));
    std::map<int, QSeries> out;
    for (int m = 2; m <= k - 3; ++m) {
        out.emplace(m, all[static_cast<std::size_t>(m)]);
    }
    return out;
}

/// Coefficient form: L_n^d = sum_{m<d} [z^m] exp(-d sum_j L~_1^j z^j / j) (L~_n^{d-m} - L~_1^{d-m}).
///
/// Returned series carry constant term 1, like the ratio form.
inline std::vector<QSeries> schur_transform_all(const CYSeriesFamily &f)
{
    const int D = f.D;
    QSeries h(D);
    for (int j = 1; j <= D; ++j) {
        h[j] = f[1][j] / Rat(j);
    }
    std::vector<QSeries> ex(static_cast<std::size_t>(D) + 1);
    for (int d = 1; d <= D; ++d) {
        ex[static_cast<std::size_t>(d)] = (Rat(-d) * h).exp();
    }
    std::vector<QSeries> out;
    for (int n = 0; n < f.k; ++n) {
        QSeries s = QSeries::constant(D, Rat(1));
        for (int d = 1; d <= D; ++d) {
            Rat v;
            for (int m = 0; m < d; ++m) {
                v += ex[static_cast<std::size_t>(d)][m] * (f[n][d - m] - f[1][d - m]);
            }
            s[d] = v;
        }
        out.push_back(s);
    }
    return out;
}

inline std::map<int, QSeries> schur_transform(int k, int D)
{
    if (k < 5) {
        throw std::invalid_argument("schur_transform: k >= 5 required");
    }
    const auto all = schur_transform_all(cy_family(k, D));
    std::map<int, QSeries> out;
    for (int m = 2; m <= k - 3; ++m) {
        out.emplace(m, all[static_cast<std::size_t>(m)]);
    }
    return out;
}

/// (1/L~_0) d (1/L~_1) d ... d (1/L~_{k-1}) f.
inline LogSeries cy_chain_operator(const CYSeriesFamily &f, const LogSeries &w)
{
    std::vector<LogSeries> inv;
    for (int n = 0; n < f.k; ++n) {
        inv.emplace_back(f[n].inverse());
    }
    LogSeries g = inv[static_cast<std::size_t>(f.k - 1)] * w.truncate(f.D);
    for (int n = f.k - 2; n >= 0; --n) {
        g = inv[static_cast<std::size_t>(n)] * g.deriv();
    }
    return g.trimmed();
}

/// Chain form against the hypergeometric operator on every x^i q^d with i, d <= D.
inline bool factorization_check(int k, int D)
{
    const CYSeriesFamily f = cy_family(k, D);
    for (int i = 0; i <= D; ++i) {
        for (int d = 0; d <= D; ++d) {
            const LogSeries w = LogSeries::monomial(D, i, d);
            if (!(cy_chain_operator(f, w) == ode_residual(w, k, k))) {
                return false;
            }
        }
    }
    return true;
}

/// 1 + theta(w_1/w_0).
inline QSeries closed_form_L1(int k, int D)
{
    const QSeries w0 = w_series(k, k, 0, D);
    return QSeries::constant(D, Rat(1)) + (w_series(k, k, 1, D) / w0).theta();
}

/// 1 + theta[(2 w_1 w_0 + w_2' w_0 - w_2 w_0') / (2 (w_0^2 + w_1' w_0 - w_1 w_0'))].
inline QSeries closed_form_L2(int k, int D)
{
    const QSeries w0 = w_series(k, k, 0, D);
    const QSeries w1 = w_series(k, k, 1, D);
    const QSeries w2 = w_series(k, k, 2, D);
    const QSeries num = Rat(2) * w1 * w0 + w2.theta() * w0 - w2 * w0.theta();
    const QSeries den = Rat(2) * (w0 * w0 + w1.theta() * w0 - w1 * w0.theta());
    return QSeries::constant(D, Rat(1)) + (num / den).theta();
}

/// u_j against the nested integrals of L~_0..L~_j, both directions.
inline bool nested_integral_check(int k, int j, int D)
{
    if (j < 0 || j > k - 2) {
        throw std::invalid_argument("nested_integral_check: 0 <= j <= k-2 required");
    }
    const CYSeriesFamily f = cy_family(k, D);
    const LogSeries u = u_series(k, k, j, D);

    // differential chain
    LogSeries g = u;
    for (int i = 0; i < j; ++i) {
        g = (g * LogSeries(f[i].inverse())).deriv();
    }
    if (!(g.trimmed() == LogSeries(f[j]))) {
        return false;
    }
    if (!((g * LogSeries(f[j].inverse())).deriv().trimmed().is_zero())) {
        return false;
    }

    // forward integrals with zero constants
    LogSeries acc(f[j]);
    for (int i = j - 1; i >= 0; --i) {
        acc = LogSeries(f[i]) * acc.integrate();
    }
    return acc.trimmed() == u.trimmed();
}

} // namespace qk

#endif
