#ifndef QK_TABLE_HPP
#define QK_TABLE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace qk
{

enum class Flavor { real, virtual_ };

inline const char *flavor_name(Flavor f) { return f == Flavor::real ? "real" : "virtual"; }

/// First valid m at degree d, or a value above the last when the row is empty.
inline int table_m_lo(int N, int k, int d, Flavor f)
{
    if (f == Flavor::virtual_) {
        return 0;
    }
    return std::max(0, 2 - (N - k) * d);
}

inline int table_m_hi(int N, int k, int d, Flavor f)
{
    const int top = N - 1 - (N - k) * d;
    if (f == Flavor::virtual_) {
        return top;
    }
    return std::min(N - 3, top);
}

/// L_m^{N,k,d} (or its virtual counterpart) for 1 <= d <= dmax.
///
/// Every (d, m) inside the validity range is stored, zero or not. Lookups
/// outside the range read as 0.
class ConstantTable
{
public:
    ConstantTable() = default;

    ConstantTable(int N, int k, int dmax, Flavor flavor) : N_(N), k_(k), dmax_(dmax), flavor_(flavor)
    {
        if (N < 1 || k < 0 || dmax < 0) {
            throw std::invalid_argument("ConstantTable: bad parameters");
        }
        for (int d = 1; d <= dmax; ++d) {
            for (int m = m_lo(d); m <= m_hi(d); ++m) {
                v_[{d, m}] = Rat(0);
            }
        }
    }

    int N() const { return N_; }
    int k() const { return k_; }
    int dmax() const { return dmax_; }
    Flavor flavor() const { return flavor_; }

    int m_lo(int d) const { return table_m_lo(N_, k_, d, flavor_); }
    int m_hi(int d) const { return table_m_hi(N_, k_, d, flavor_); }

    bool valid(int d, int m) const { return d >= 1 && d <= dmax_ && m >= m_lo(d) && m <= m_hi(d); }

    Rat at(int d, int m) const
    {
        auto it = v_.find({d, m});
        return it == v_.end() ? Rat(0) : it->second;
    }

    void set(int d, int m, const Rat &v)
    {
        if (!valid(d, m)) {
            throw std::out_of_range("ConstantTable: (d=" + std::to_string(d) + ", m=" + std::to_string(m) +
                                    ") outside validity range");
        }
        v_[{d, m}] = v;
    }

    /// Row d as a list over m_lo..m_hi.
    std::vector<Rat> row(int d) const
    {
        std::vector<Rat> r;
        for (int m = m_lo(d); m <= m_hi(d); ++m) {
            r.push_back(at(d, m));
        }
        return r;
    }

    const std::map<std::pair<int, int>, Rat> &values() const { return v_; }

    /// Same values, relabelled with another flavor; entries outside the new range must be zero.
    ConstantTable reflavored(Flavor f) const
    {
        ConstantTable t(N_, k_, dmax_, f);
        for (const auto &[key, val] : v_) {
            if (t.valid(key.first, key.second)) {
                t.v_[key] = val;
            } else if (!val.is_zero()) {
                throw std::logic_error("ConstantTable: nonzero entry outside target range");
            }
        }
        return t;
    }

    friend bool operator==(const ConstantTable &a, const ConstantTable &b)
    {
        return a.N_ == b.N_ && a.k_ == b.k_ && a.dmax_ == b.dmax_ && a.flavor_ == b.flavor_ && a.v_ == b.v_;
    }

private:
    int N_ = 1;
    int k_ = 1;
    int dmax_ = 0;
    Flavor flavor_ = Flavor::virtual_;
    std::map<std::pair<int, int>, Rat> v_;
};

/// L_m = L_{N-1-(N-k)d-m} for every stored entry whose mirror index is also stored.
inline bool symmetry_check(const ConstantTable &t)
{
    for (const auto &[key, val] : t.values()) {
        const auto [d, m] = key;
        const int mm = t.N() - 1 - (t.N() - t.k()) * d - m;
        if (!t.valid(d, mm) || !(t.at(d, mm) == val)) {
            return false;
        }
    }
    return true;
}

} // namespace qk

#endif
