#ifndef QK_PDO_HPP
#define QK_PDO_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gauss_manin.hpp"
#include "rat.hpp"
#include "recursion.hpp"
#include "table.hpp"
#include "wpoly.hpp"

namespace qk
{

/// Univariate polynomial in the symbol D over Rat.
using DPolyR = RatWPoly;

namespace detail
{

/// Quotient and remainder; b nonzero.
inline std::pair<DPolyR, DPolyR> divmod(const DPolyR &a, const DPolyR &b)
{
    if (b.is_zero()) {
        throw std::domain_error("divmod: division by zero polynomial");
    }
    std::vector<Rat> r = a.coeffs();
    std::vector<Rat> q(static_cast<std::size_t>(std::max(a.degree() - b.degree() + 1, 0)));
    const Rat lead = b.coeffs().back();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const Rat c = r[static_cast<std::size_t>(i + b.degree())] / lead;
        q[static_cast<std::size_t>(i)] = c;
        if (c.is_zero()) {
            continue;
        }
        for (int j = 0; j <= b.degree(); ++j) {
            r[static_cast<std::size_t>(i + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {DPolyR(q), DPolyR(r)};
}

inline DPolyR monic(const DPolyR &p)
{
    if (p.is_zero()) {
        return p;
    }
    return p.coeffs().back().inverse() * p;
}

inline DPolyR gcd(DPolyR a, DPolyR b)
{
    while (!b.is_zero()) {
        DPolyR r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

} // namespace detail

/// Reduced fraction num/den of polynomials in D, den monic.
class RatFunc
{
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat &c) : num_(c), den_(Rat(1)) {}
    RatFunc(DPolyR num) : num_(std::move(num)), den_(Rat(1)) {}

    RatFunc(DPolyR num, DPolyR den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    /// D + c.
    static RatFunc shifted_d(const Rat &c) { return RatFunc(DPolyR::linear(c, Rat(1))); }

    const DPolyR &num() const { return num_; }
    const DPolyR &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
    {
        if (a.den_ == b.den_) {
            return RatFunc(a.num_ + b.num_, a.den_);
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc &a, const RatFunc &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return RatFunc();
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    RatFunc inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("RatFunc: inverse of zero");
        }
        return RatFunc(den_, num_);
    }

    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }

    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }

    /// R(D + b).
    RatFunc shift(const Rat &b) const
    {
        if (b.is_zero()) {
            return *this;
        }
        return RatFunc(num_.compose_affine(b, Rat(1)), den_.compose_affine(b, Rat(1)));
    }

    RatFunc pow(int e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        RatFunc out(Rat(1));
        for (int i = 0; i < e; ++i) {
            out *= *this;
        }
        return out;
    }

    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    friend std::ostream &operator<<(std::ostream &os, const RatFunc &r)
    {
        return os << '(' << r.num_ << ")/(" << r.den_ << ')';
    }

private:
    void reduce()
    {
        if (den_.is_zero()) {
            throw std::domain_error("RatFunc: zero denominator");
        }
        if (num_.is_zero()) {
            den_ = DPolyR(Rat(1));
            return;
        }
        const DPolyR g = detail::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = detail::divmod(num_, g).first;
            den_ = detail::divmod(den_, g).first;
        }
        const Rat lead = den_.coeffs().back();
        if (!lead.is_one()) {
            num_ = lead.inverse() * num_;
            den_ = lead.inverse() * den_;
        }
    }

    DPolyR num_;
    DPolyR den_;
};

/// sum_{d=0}^{D} e^{dx} R_d(D), truncated at grade D.
class PDO
{
public:
    explicit PDO(int D = 0) : g_(static_cast<std::size_t>(D) + 1) {}

    static PDO scalar(int D, const RatFunc &r)
    {
        PDO p(D);
        p.g_[0] = r;
        return p;
    }

    static PDO one(int D) { return scalar(D, RatFunc(Rat(1))); }

    /// D^n, n of any sign.
    static PDO d_pow(int D, int n) { return scalar(D, RatFunc::shifted_d(Rat(0)).pow(n)); }

    static PDO graded(int D, int d, const RatFunc &r)
    {
        PDO p(D);
        if (d <= D) {
            p.g_.at(static_cast<std::size_t>(d)) = r;
        }
        return p;
    }

    int order() const { return static_cast<int>(g_.size()) - 1; }

    const RatFunc &operator[](int d) const { return g_.at(static_cast<std::size_t>(d)); }
    RatFunc &operator[](int d) { return g_.at(static_cast<std::size_t>(d)); }

    friend PDO operator+(const PDO &a, const PDO &b)
    {
        a.check(b);
        PDO p(a.order());
        for (int d = 0; d <= a.order(); ++d) {
            p[d] = a[d] + b[d];
        }
        return p;
    }

    PDO operator-() const
    {
        PDO p(order());
        for (int d = 0; d <= order(); ++d) {
            p[d] = -(*this)[d];
        }
        return p;
    }

    friend PDO operator-(const PDO &a, const PDO &b) { return a + (-b); }

    /// (e^{ax} R)(e^{bx} S) = e^{(a+b)x} R(D + b) S(D).
    friend PDO operator*(const PDO &a, const PDO &b)
    {
        a.check(b);
        PDO p(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b[j].is_zero()) {
                    continue;
                }
                p[i + j] += a[i].shift(Rat(j)) * b[j];
            }
        }
        return p;
    }

    PDO &operator+=(const PDO &o) { return *this = *this + o; }
    PDO &operator*=(const PDO &o) { return *this = *this * o; }

    friend bool operator==(const PDO &a, const PDO &b) { return a.g_ == b.g_; }

    /// Two-sided inverse in the graded algebra; grade 0 must be nonzero.
    PDO inverse() const
    {
        const int D = order();
        PDO B(D);
        B[0] = (*this)[0].inverse();
        for (int n = 1; n <= D; ++n) {
            RatFunc acc;
            for (int a = 1; a <= n; ++a) {
                if (!(*this)[a].is_zero()) {
                    acc += (*this)[a].shift(Rat(n - a)) * B[n - a];
                }
            }
            B[n] = -((*this)[0].shift(Rat(n)).inverse() * acc);
        }
        return B;
    }

    friend std::ostream &operator<<(std::ostream &os, const PDO &p)
    {
        for (int d = 0; d <= p.order(); ++d) {
            os << (d ? " + " : "") << "e^" << d << "x*" << p[d];
        }
        return os;
    }

private:
    void check(const PDO &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("PDO: grade truncation mismatch");
        }
    }

    std::vector<RatFunc> g_;
};

inline PDO pdo_mul(const PDO &a, const PDO &b) { return a * b; }

/// k prod_{m=1}^{k-1}(k D + m) as a polynomial in D.
inline RatFunc givental_product(int k)
{
    DPolyR p{Rat(k)};
    for (int m = 1; m < k; ++m) {
        p *= DPolyR::linear(Rat(m), Rat(k));
    }
    return RatFunc(p);
}

/// A = k e^x prod_{m=1}^{k-1}(k D + m) D^{-(N-1)}.
inline PDO geometric_generator(int N, int k, int D)
{
    return PDO::graded(D, 1, givental_product(k) * RatFunc::shifted_d(Rat(0)).pow(-(N - 1)));
}

/// 1 + sum_d e^{dx} prod_{m=0}^{kd-1}(k D + m) prod_{j=0}^{d-1} (D + j)^{-N}.
inline PDO closed_form_inverse(int N, int k, int D)
{
    PDO p = PDO::one(D);
    if (k == 0) {
        return p;
    }
    for (int d = 1; d <= D; ++d) {
        DPolyR num(Rat(1));
        for (int m = 0; m < k * d; ++m) {
            num *= DPolyR::linear(Rat(m), Rat(k));
        }
        RatFunc r(num);
        for (int j = 0; j < d; ++j) {
            r *= RatFunc::shifted_d(Rat(j)).pow(-N);
        }
        p[d] = r;
    }
    return p;
}

struct GeometricInverse {
    PDO series;      // sum_n A^n
    PDO closed_form; // product formula
};

inline GeometricInverse geometric_inverse(int N, int k, int D)
{
    const PDO A = geometric_generator(N, k, D);
    PDO sum = PDO::one(D);
    PDO pw = PDO::one(D);
    for (int n = 1; n <= D; ++n) {
        pw *= A;
        sum += pw;
    }
    return {sum, closed_form_inverse(N, k, D)};
}

/// F_0..F_J from the general-type Gauss-Manin system, N < k.
inline std::vector<PDO> build_F(const ConstantTable &vt, int J)
{
    const int N = vt.N(), k = vt.k(), D = vt.dmax();
    if (N >= k) {
        throw std::invalid_argument("build_F: requires N < k");
    }
    if (vt.flavor() != Flavor::virtual_) {
        throw std::invalid_argument("build_F: needs the virtual table");
    }
    std::map<int, PDO> G;
    auto get = [&](int a) -> const PDO & {
        auto it = G.find(a);
        if (it != G.end()) {
            return it->second;
        }
        if (a < N - 1) {
            throw std::logic_error("build_F: G requested out of order");
        }
        return G.emplace(a, PDO::d_pow(D, a - N + 1)).first->second;
    };
    const PDO dinv = PDO::d_pow(D, -1);
    for (int a = N - 2; a >= -J; --a) {
        PDO rhs = get(a + 1);
        for (int d = 1; d <= D; ++d) {
            const Rat c = vt.at(d, N - 2 - a);
            if (c.is_zero()) {
                continue;
            }
            rhs += PDO::graded(D, d, RatFunc(c)) * get(a + 1 + (k - N) * d);
        }
        G.emplace(a, dinv * rhs);
    }
    std::vector<PDO> F;
    for (int j = 0; j <= J; ++j) {
        F.push_back(PDO::d_pow(D, N - 1 + j) * get(-j));
    }
    return F;
}

struct Stabilization {
    std::vector<int> j0;  // per grade, first index after which F_j stays fixed
    PDO limit;
};

/// Grade-wise stabilization of F_j. Throws if some grade d has not settled by 2(k-N)d.
inline Stabilization stabilize_F(int N, int k, int D)
{
    const int bound_top = 2 * (k - N) * std::max(D, 1);
    const int J = bound_top + 2;
    const auto F = build_F(virtual_table(N, k, D), J);
    Stabilization s{std::vector<int>(static_cast<std::size_t>(D) + 1, 0), PDO(D)};
    for (int d = 0; d <= D; ++d) {
        int j0 = J;
        while (j0 > 0 && F[static_cast<std::size_t>(j0 - 1)][d] == F[static_cast<std::size_t>(J)][d]) {
            --j0;
        }
        if (j0 > 2 * (k - N) * d) {
            throw std::runtime_error("build_F: grade " + std::to_string(d) + " did not stabilize within bound");
        }
        s.j0[static_cast<std::size_t>(d)] = j0;
        s.limit[d] = F[static_cast<std::size_t>(J)][d];
    }
    return s;
}

/// D^{N-1} - k e^x prod_{m=1}^{k-1}(k D + m), the rank k-1 operator of the general-type case.
inline PDO general_type_operator(int N, int k, int D)
{
    return PDO::d_pow(D, N - 1) - PDO::graded(D, 1, givental_product(k));
}

/// (1/F_inf) D^{N-1} reproduces the general-type operator grade by grade.
inline bool neg_consistency_check(int N, int k, int D)
{
    const Stabilization s = stabilize_F(N, k, D);
    return s.limit.inverse() * PDO::d_pow(D, N - 1) == general_type_operator(N, k, D);
}

/// Scalar ODE as an operator: grade 0 is D^{order}, grade d is -P_d.
inline PDO ode_operator(const ScalarODE &ode, int D)
{
    PDO p = PDO::d_pow(D, ode.order);
    for (int d = 1; d <= D && d < static_cast<int>(ode.levels.size()); ++d) {
        p[d] = -RatFunc(DPolyR(ode.levels[static_cast<std::size_t>(d)]));
    }
    return p;
}

/// Substitutes D -> D + c e^x in every grade (e^{dx} kept to the left).
inline PDO shift_by_exponential(const PDO &op, const Rat &c)
{
    const int D = op.order();
    PDO X = PDO::d_pow(D, 1);
    if (D >= 1) {
        X[1] = RatFunc(c);
    }
    PDO out(D);
    for (int d = 0; d <= D; ++d) {
        const RatFunc &r = op[d];
        if (r.is_zero()) {
            continue;
        }
        if (r.den().degree() != 0) {
            throw std::invalid_argument("shift_by_exponential: differential operators only");
        }
        PDO acc(D);
        const auto &co = r.num().coeffs();
        for (int i = static_cast<int>(co.size()) - 1; i >= 0; --i) {
            acc = acc * X + PDO::scalar(D, RatFunc(co[static_cast<std::size_t>(i)] / r.den().coeffs()[0]));
        }
        out += PDO::graded(D, d, RatFunc(Rat(1))) * acc;
    }
    return out;
}

struct TwistReport {
    bool ok = false;
    ConstantTable virtual_table;
    ConstantTable real_table;
    std::vector<Rat> shifted_degree_one; // L~_m^{k+1,k,1} - k! for m = 0..k-1
    PDO conjugated;
    PDO givental;
};

/// N = k+1: real table from the virtual one, reduce, conjugate by exp(k! e^t), compare.
inline TwistReport twist_check(int k, int dmax)
{
    if (k < 2 || dmax < 1) {
        throw std::invalid_argument("twist_check: k >= 2, dmax >= 1 required");
    }
    const int N = k + 1;
    TwistReport r;
    r.virtual_table = virtual_table(N, k, dmax);
    r.real_table = ConstantTable(N, k, dmax, Flavor::real);
    const Rat kf = factorial(k);
    for (int m = 0; m <= k - 1; ++m) {
        r.shifted_degree_one.push_back(r.virtual_table.at(1, m) - kf);
    }
    for (int d = 1; d <= dmax; ++d) {
        for (int m = r.real_table.m_lo(d); m <= r.real_table.m_hi(d); ++m) {
            r.real_table.set(d, m, d == 1 ? r.virtual_table.at(1, m) - kf : r.virtual_table.at(d, m));
        }
    }
    const ScalarODE ode = reduce_to_ode(GMSystem(r.real_table));
    r.conjugated = shift_by_exponential(ode_operator(ode, dmax), -kf);
    r.givental = ode_operator(givental_ode(N, k, dmax), dmax);
    r.ok = r.conjugated == r.givental;
    return r;
}

} // namespace qk

#endif
