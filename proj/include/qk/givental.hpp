#ifndef QK_GIVENTAL_HPP
#define QK_GIVENTAL_HPP

#include <stdexcept>
#include <vector>

#include "rat.hpp"
#include "series.hpp"

namespace qk
{

/// Taylor coefficients in z of phi_d^{N,k}(z) = (kd)!/(d!)^N prod_{j<=kd}(1+kz/j) prod_{j<=d}(1+z/j)^{-N}.
struct ZTaylor {
    int N;
    int k;
    int d;
    QSeries coeffs; // in z, to order J
};

inline ZTaylor phi_d(int N, int k, int d, int J)
{
    if (d < 0 || J < 0) {
        throw std::invalid_argument("phi_d: d, J >= 0 required");
    }
    // log phi_d - log phi_d(0) = sum_n (-1)^{n+1}/n (sum_j (k/j)^n - N sum_j j^{-n}) z^n
    QSeries lg(J);
    for (int n = 1; n <= J; ++n) {
        Rat s;
        for (int j = 1; j <= k * d; ++j) {
            s += Rat(k, j).pow(n);
        }
        Rat h;
        for (int j = 1; j <= d; ++j) {
            h += Rat(1, j).pow(n);
        }
        s -= Rat(N) * h;
        lg[n] = (n % 2 ? s : -s) / Rat(n);
    }
    const Rat c0 = factorial(static_cast<long>(k) * d) / factorial(d).pow(N);
    return {N, k, d, c0 * lg.exp()};
}

/// w_j^{N,k}: the q^d coefficient is the j-th z-derivative of phi_d at z = 0.
inline QSeries w_series(int N, int k, int j, int D)
{
    if (j < 0) {
        throw std::invalid_argument("w_series: j >= 0 required");
    }
    QSeries w(D);
    const Rat jf = factorial(j);
    for (int d = 0; d <= D; ++d) {
        w[d] = jf * phi_d(N, k, d, j).coeffs[j];
    }
    return w;
}

/// z^j coefficient of e^{zx} phi(x, z), i.e. sum_i x^i/i! w_{j-i}/(j-i)!. Any j >= 0.
inline LogSeries phi_z_coeff(int N, int k, int j, int D)
{
    LogSeries u(D, j);
    for (int i = 0; i <= j; ++i) {
        u[i] = (factorial(i) * factorial(j - i)).inverse() * w_series(N, k, j - i, D);
    }
    return u;
}

/// u_j^{N,k} for 0 <= j <= N-2.
inline LogSeries u_series(int N, int k, int j, int D)
{
    if (j < 0 || j > N - 2) {
        throw std::invalid_argument("u_series: 0 <= j <= N-2 required");
    }
    return phi_z_coeff(N, k, j, D);
}

/// prod_{m=1}^{k-1} (k D + m) applied to f.
inline LogSeries apply_givental_product(const LogSeries &f, int k)
{
    LogSeries g = f;
    for (int m = 1; m < k; ++m) {
        g = Rat(k) * g.deriv() + Rat(m) * g;
    }
    return g;
}

/// (D^{N-1} - k e^x prod_{m=1}^{k-1}(k D + m)) f.
inline LogSeries ode_residual(const LogSeries &f, int N, int k)
{
    LogSeries a = f;
    for (int i = 0; i < N - 1; ++i) {
        a = a.deriv();
    }
    return (a - Rat(k) * apply_givental_product(f, k).shift(1)).trimmed();
}

/// The residual of the z^j coefficient must be x^{j-N+1}/(j-N+1)! (zero below j = N-1).
inline bool bivariate_residual_check(int N, int k, int J, int D)
{
    for (int j = 0; j <= J; ++j) {
        const LogSeries r = ode_residual(phi_z_coeff(N, k, j, D), N, k);
        LogSeries expect(D, 0);
        if (j >= N - 1) {
            expect = LogSeries::monomial(D, j - N + 1, 0, factorial(j - N + 1).inverse());
        }
        if (!(r.trimmed() == expect.trimmed())) {
            return false;
        }
    }
    return true;
}

/// Inverse mirror map from the periods: t = x + w_1/w_0, returns e with x(t) = t + e(Q).
inline QSeries period_mirror_inverse(int k, int D)
{
    const QSeries w0 = w_series(k, k, 0, D);
    const QSeries w1 = w_series(k, k, 1, D);
    LogSeries t(D, 1);
    t[0] = w1 / w0;
    t[1] = QSeries::constant(D, Rat(1));
    return exp_reversion(t)[0];
}

/// k d_t^2 (u_2/w_0) as a series in Q = e^t, from the periods alone.
inline QSeries yukawa_from_periods(int k, int D)
{
    const QSeries w0 = w_series(k, k, 0, D);
    const LogSeries R = phi_z_coeff(k, k, 2, D) * LogSeries(w0.inverse());
    const QSeries tp = QSeries::constant(D, Rat(1)) + (w_series(k, k, 1, D) / w0).theta();
    const LogSeries inv(tp.inverse());
    const LogSeries Y = ((R.deriv() * inv).deriv() * inv).trimmed();
    if (Y.maxlog() != 0) {
        throw std::logic_error("yukawa_from_periods: logarithms did not cancel");
    }
    return Rat(k) * compose_exp(Y[0], period_mirror_inverse(k, D));
}

/// k / ((1 - k^k e^x) w_0^2 (dt/dx)^3), substituted into x(t).
inline QSeries yukawa_classical(int k, int D)
{
    const QSeries w0 = w_series(k, k, 0, D);
    const QSeries tp = QSeries::constant(D, Rat(1)) + (w_series(k, k, 1, D) / w0).theta();
    QSeries disc = QSeries::constant(D, Rat(1));
    if (D >= 1) {
        disc[1] = -Rat(k).pow(k);
    }
    const QSeries y = Rat(k) * (disc * w0 * w0 * tp.pow(3)).inverse();
    return compose_exp(y, period_mirror_inverse(k, D));
}

} // namespace qk

#endif
