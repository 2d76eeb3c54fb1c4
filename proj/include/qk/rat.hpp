#ifndef QK_RAT_HPP
#define QK_RAT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qk
{

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// and GMP keeps results of arithmetic canonical, so two equal rationals always
/// have identical numerator/denominator strings.
class Rat
{
public:
    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(std::to_string(v)) {}
    Rat(unsigned long v) : v_(v) {}

    Rat(long num, long den)
    {
        if (den == 0) {
            throw std::domain_error("Rat: zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rat(const mpz_class &z) : v_(z) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Rat(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw std::domain_error("Rat: zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q" with decimal integers.
    static Rat parse(std::string_view s)
    {
        const auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rat(mpz_class(std::string(s), 10));
            }
            return Rat(mpz_class(std::string(s.substr(0, slash)), 10),
                       mpz_class(std::string(s.substr(slash + 1)), 10));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'");
        }
    }

    const mpq_class &raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat &operator+=(const Rat &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rat &operator-=(const Rat &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rat &operator*=(const Rat &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rat &operator/=(const Rat &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rat: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

    friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

    Rat inverse() const { return Rat(1) / *this; }

    Rat pow(long e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        Rat out(1);
        Rat base = *this;
        while (e > 0) {
            if (e & 1) {
                out *= base;
            }
            base *= base;
            e >>= 1;
        }
        return out;
    }

private:
    mpq_class v_;
};

inline Rat factorial(long n)
{
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

inline Rat binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rat(0);
    }
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(z);
}

/// Generalized binomial C(a, n) for integer a (possibly negative) and n >= 0.
inline Rat gen_binomial(long a, long n)
{
    Rat out(1);
    for (long i = 0; i < n; ++i) {
        out *= Rat(a - i);
        out /= Rat(i + 1);
    }
    return out;
}

} // namespace qk

template <>
struct std::hash<qk::Rat> {
    std::size_t operator()(const qk::Rat &r) const { return std::hash<std::string>{}(r.str()); }
};

#endif
