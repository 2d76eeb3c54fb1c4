#ifndef QK_SERIES_HPP
#define QK_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "rat.hpp"

namespace qk
{

/// Truncated power series c_0 + c_1 q + ... + c_D q^D.
///
/// Binary operations produce order min(D_a, D_b). The variable is q = e^x, so
/// theta() (q d/dq) is the x-derivative.
class QSeries
{
public:
    explicit QSeries(int order = 0) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}

    QSeries(int order, std::initializer_list<Rat> init) : QSeries(order)
    {
        std::size_t i = 0;
        for (const auto &r : init) {
            if (i < c_.size()) {
                c_[i] = r;
            }
            ++i;
        }
    }

    QSeries(int order, const std::vector<Rat> &init) : QSeries(order)
    {
        for (std::size_t i = 0; i < init.size() && i < c_.size(); ++i) {
            c_[i] = init[i];
        }
    }

    static QSeries constant(int order, const Rat &v)
    {
        QSeries s(order);
        s.c_[0] = v;
        return s;
    }

    static QSeries monomial(int order, int deg, const Rat &v = Rat(1))
    {
        QSeries s(order);
        if (deg >= 0 && deg <= order) {
            s.c_[static_cast<std::size_t>(deg)] = v;
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rat &operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    Rat &operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

    /// Coefficient lookup that reads 0 past the truncation order.
    Rat coeff(int n) const
    {
        if (n < 0 || n > order()) {
            return Rat(0);
        }
        return c_[static_cast<std::size_t>(n)];
    }

    const std::vector<Rat> &coeffs() const { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rat &r) { return r.is_zero(); });
    }

    QSeries truncate(int order) const
    {
        QSeries s(std::min(order, this->order()));
        for (int i = 0; i <= s.order(); ++i) {
            s[i] = (*this)[i];
        }
        return s;
    }

    QSeries operator-() const
    {
        QSeries s(order());
        for (int i = 0; i <= order(); ++i) {
            s[i] = -(*this)[i];
        }
        return s;
    }

    friend QSeries operator+(const QSeries &a, const QSeries &b)
    {
        QSeries s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            s[i] = a[i] + b[i];
        }
        return s;
    }

    friend QSeries operator-(const QSeries &a, const QSeries &b) { return a + (-b); }

    friend QSeries operator*(const QSeries &a, const QSeries &b)
    {
        QSeries s(std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (int j = 0; i + j <= s.order(); ++j) {
                s[i + j] += a[i] * b[j];
            }
        }
        return s;
    }

    friend QSeries operator*(const Rat &r, const QSeries &a)
    {
        QSeries s(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            s[i] = r * a[i];
        }
        return s;
    }

    friend QSeries operator/(const QSeries &a, const QSeries &b) { return a * b.inverse(); }

    QSeries &operator+=(const QSeries &o) { return *this = *this + o; }
    QSeries &operator-=(const QSeries &o) { return *this = *this - o; }
    QSeries &operator*=(const QSeries &o) { return *this = *this * o; }

    friend bool operator==(const QSeries &a, const QSeries &b)
    {
        return a.order() == b.order() && a.c_ == b.c_;
    }

    QSeries inverse() const
    {
        if (c_[0].is_zero()) {
            throw std::domain_error("QSeries: inverse of series with zero constant term");
        }
        QSeries s(order());
        const Rat inv0 = c_[0].inverse();
        s[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            Rat acc;
            for (int j = 1; j <= n; ++j) {
                acc += (*this)[j] * s[n - j];
            }
            s[n] = -acc * inv0;
        }
        return s;
    }

    /// q d/dq.
    QSeries theta() const
    {
        QSeries s(order());
        for (int n = 1; n <= order(); ++n) {
            s[n] = Rat(n) * (*this)[n];
        }
        return s;
    }

    /// Multiplication by q^d, dropping terms past the order.
    QSeries shift(int d) const
    {
        QSeries s(order());
        for (int n = 0; n + d <= order(); ++n) {
            if (n + d >= 0) {
                s[n + d] = (*this)[n];
            }
        }
        return s;
    }

    QSeries exp() const
    {
        if (!c_[0].is_zero()) {
            throw std::domain_error("QSeries: exp needs zero constant term");
        }
        // n e_n = sum_j j a_j e_{n-j}
        QSeries e(order());
        e[0] = Rat(1);
        for (int n = 1; n <= order(); ++n) {
            Rat acc;
            for (int j = 1; j <= n; ++j) {
                acc += Rat(j) * (*this)[j] * e[n - j];
            }
            e[n] = acc / Rat(n);
        }
        return e;
    }

    QSeries log() const
    {
        if (!c_[0].is_one()) {
            throw std::domain_error("QSeries: log needs constant term 1");
        }
        const QSeries lt = theta() / *this;
        QSeries s(order());
        for (int n = 1; n <= order(); ++n) {
            s[n] = lt[n] / Rat(n);
        }
        return s;
    }

    QSeries pow(long e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        QSeries out = constant(order(), Rat(1));
        QSeries base = *this;
        while (e > 0) {
            if (e & 1) {
                out *= base;
            }
            e >>= 1;
            if (e > 0) {
                base *= base;
            }
        }
        return out;
    }

    /// Rational power; requires constant term 1.
    QSeries pow(const Rat &e) const { return (e * log()).exp(); }

    friend std::ostream &operator<<(std::ostream &os, const QSeries &s)
    {
        os << '[';
        for (int i = 0; i <= s.order(); ++i) {
            os << (i ? ", " : "") << s[i];
        }
        return os << ']';
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("QSeries: negative truncation order");
        }
        return order;
    }

    std::vector<Rat> c_;
};

/// Sum_i x^i p_i(q) with q = e^x, every p_i truncated at the same order.
class LogSeries
{
public:
    explicit LogSeries(int order = 0, int maxlog = 0)
        : order_(order), p_(static_cast<std::size_t>(std::max(maxlog, 0)) + 1, QSeries(order))
    {
    }

    explicit LogSeries(const QSeries &p0) : order_(p0.order()), p_{p0} {}

    /// x^i q^d.
    static LogSeries monomial(int order, int i, int d, const Rat &c = Rat(1))
    {
        LogSeries s(order, i);
        s.p_[static_cast<std::size_t>(i)] = QSeries::monomial(order, d, c);
        return s;
    }

    int order() const { return order_; }
    int maxlog() const { return static_cast<int>(p_.size()) - 1; }

    const QSeries &operator[](int i) const { return p_.at(static_cast<std::size_t>(i)); }
    QSeries &operator[](int i) { return p_.at(static_cast<std::size_t>(i)); }

    QSeries part(int i) const
    {
        if (i < 0 || i > maxlog()) {
            return QSeries(order_);
        }
        return p_[static_cast<std::size_t>(i)];
    }

    Rat coeff(int i, int d) const { return part(i).coeff(d); }

    bool is_zero() const
    {
        return std::all_of(p_.begin(), p_.end(), [](const QSeries &s) { return s.is_zero(); });
    }

    /// Drops vanishing top log-parts.
    LogSeries trimmed() const
    {
        LogSeries s = *this;
        while (s.p_.size() > 1 && s.p_.back().is_zero()) {
            s.p_.pop_back();
        }
        return s;
    }

    LogSeries truncate(int order) const
    {
        const int o = std::min(order, order_);
        LogSeries s(o, maxlog());
        for (int i = 0; i <= maxlog(); ++i) {
            s.p_[static_cast<std::size_t>(i)] = p_[static_cast<std::size_t>(i)].truncate(o);
        }
        return s;
    }

    friend LogSeries operator+(const LogSeries &a, const LogSeries &b)
    {
        const int o = std::min(a.order_, b.order_);
        LogSeries s(o, std::max(a.maxlog(), b.maxlog()));
        for (int i = 0; i <= s.maxlog(); ++i) {
            s[i] = a.part(i).truncate(o) + b.part(i).truncate(o);
        }
        return s;
    }

    LogSeries operator-() const
    {
        LogSeries s = *this;
        for (auto &p : s.p_) {
            p = -p;
        }
        return s;
    }

    friend LogSeries operator-(const LogSeries &a, const LogSeries &b) { return a + (-b); }

    friend LogSeries operator*(const LogSeries &a, const LogSeries &b)
    {
        const int o = std::min(a.order_, b.order_);
        LogSeries s(o, a.maxlog() + b.maxlog());
        for (int i = 0; i <= a.maxlog(); ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (int j = 0; j <= b.maxlog(); ++j) {
                s[i + j] += a[i].truncate(o) * b[j].truncate(o);
            }
        }
        return s;
    }

    friend LogSeries operator*(const QSeries &a, const LogSeries &b) { return LogSeries(a) * b; }

    friend LogSeries operator*(const Rat &r, const LogSeries &b)
    {
        LogSeries s = b;
        for (auto &p : s.p_) {
            p = r * p;
        }
        return s;
    }

    friend bool operator==(const LogSeries &a, const LogSeries &b)
    {
        if (a.order_ != b.order_) {
            return false;
        }
        const int J = std::max(a.maxlog(), b.maxlog());
        for (int i = 0; i <= J; ++i) {
            if (!(a.part(i) == b.part(i))) {
                return false;
            }
        }
        return true;
    }

    /// d/dx, with x^i q^d -> i x^{i-1} q^d + d x^i q^d.
    LogSeries deriv() const
    {
        LogSeries s(order_, maxlog());
        for (int i = 0; i <= maxlog(); ++i) {
            s[i] += p_[static_cast<std::size_t>(i)].theta();
            if (i > 0) {
                s[i - 1] += Rat(i) * p_[static_cast<std::size_t>(i)];
            }
        }
        return s;
    }

    /// Multiplication by e^{dx}.
    LogSeries shift(int d) const
    {
        LogSeries s = *this;
        for (auto &p : s.p_) {
            p = p.shift(d);
        }
        return s;
    }

    /// Antiderivative in x with the q^0 x^0 constant set to zero.
    LogSeries integrate() const
    {
        LogSeries s(order_, maxlog() + 1);
        for (int i = 0; i <= maxlog(); ++i) {
            const QSeries &p = p_[static_cast<std::size_t>(i)];
            s[i + 1][0] += p[0] / Rat(i + 1);
            for (int d = 1; d <= order_; ++d) {
                if (p[d].is_zero()) {
                    continue;
                }
                // int x^i e^{dx} = e^{dx} sum_m (-1)^m i!/(i-m)! x^{i-m} / d^{m+1}
                Rat fall(1);
                for (int m = 0; m <= i; ++m) {
                    Rat term = p[d] * fall / Rat(d).pow(m + 1);
                    if (m % 2) {
                        term = -term;
                    }
                    s[i - m][d] += term;
                    fall *= Rat(i - m);
                }
            }
        }
        return s.trimmed();
    }

    friend std::ostream &operator<<(std::ostream &os, const LogSeries &s)
    {
        for (int i = 0; i <= s.maxlog(); ++i) {
            os << (i ? " + " : "") << "x^" << i << '*' << s[i];
        }
        return os;
    }

private:
    int order_;
    std::vector<QSeries> p_;
};

/// F(e^{x(t)}) for x(t) = t + e(Q), as a series in Q = e^t.
inline QSeries compose_exp(const QSeries &F, const QSeries &e)
{
    const int D = std::min(F.order(), e.order());
    QSeries out = QSeries::constant(D, F[0]);
    const QSeries ee = e.truncate(D).exp();
    QSeries pw = QSeries::constant(D, Rat(1));
    for (int d = 1; d <= D; ++d) {
        pw *= ee;
        if (!F[d].is_zero()) {
            out += (F[d] * pw).shift(d);
        }
    }
    return out;
}

/// Inverts t = x + c(e^x), c(0) = 0. Returns x(t) = t + e(e^t) in the same shape.
inline LogSeries exp_reversion(const LogSeries &t)
{
    const LogSeries tt = t.trimmed();
    const int D = tt.order();
    if (tt.maxlog() != 1 || !(tt[1] == QSeries::constant(D, Rat(1)))) {
        throw std::invalid_argument("exp_reversion: input must be x + c(e^x)");
    }
    const QSeries &c = tt[0];
    if (!c[0].is_zero()) {
        throw std::invalid_argument("exp_reversion: c must have zero constant term");
    }
    // e = -sum_d c_d Q^d exp(d e); each pass fixes one more order
    QSeries e(D);
    for (int it = 0; it < D; ++it) {
        e = -compose_exp(c, e);
    }
    LogSeries out(D, 1);
    out[0] = e;
    out[1] = QSeries::constant(D, Rat(1));
    return out;
}

} // namespace qk

#endif
