#ifndef QK_VERIFY_HPP
#define QK_VERIFY_HPP

#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gauss_manin.hpp"
#include "givental.hpp"
#include "mirror.hpp"
#include "pdo.hpp"
#include "recursion.hpp"
#include "residue.hpp"
#include "serialize.hpp"

namespace qk
{

struct VerifyCheck {
    std::string suite;
    std::string check;
    bool ok = false;
    std::string detail; // exact diff or exception text on failure
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool ok() const
    {
        for (const auto &c : checks) {
            if (!c.ok) {
                return false;
            }
        }
        return true;
    }

    Json to_json() const
    {
        Json a = Json::array();
        for (const auto &c : checks) {
            Json e{{"suite", c.suite}, {"check", c.check}, {"ok", c.ok}};
            if (!c.ok) {
                e["detail"] = c.detail;
            }
            a.push_back(e);
        }
        return Json{{"ok", ok()}, {"checks", a}};
    }
};

inline const std::vector<std::string> &verify_suites()
{
    static const std::vector<std::string> s{"core", "residue", "gaussmanin", "givental", "mirror", "pdo"};
    return s;
}

namespace detail
{

/// Body returns an empty string on success, otherwise the diff.
using CheckFn = std::function<std::string()>;

class Runner
{
public:
    Runner(std::string suite, VerifyReport &rep) : suite_(std::move(suite)), rep_(rep) {}

    void operator()(const std::string &name, const CheckFn &fn)
    {
        VerifyCheck c{suite_, name, false, {}};
        try {
            c.detail = fn();
            c.ok = c.detail.empty();
        } catch (const std::exception &e) {
            c.detail = std::string("exception: ") + e.what();
        }
        rep_.checks.push_back(std::move(c));
    }

private:
    std::string suite_;
    VerifyReport &rep_;
};

template <typename A, typename B>
std::string diff(const A &got, const B &want)
{
    if (got == want) {
        return {};
    }
    std::ostringstream os;
    os << "got " << got << " expected " << want;
    return os.str();
}

inline std::string table_diff(const ConstantTable &got, const ConstantTable &want)
{
    if (got == want) {
        return {};
    }
    return "got " + qk::to_json(got).dump() + " expected " + qk::to_json(want).dump();
}

inline std::string fail_if(bool bad, const std::string &what) { return bad ? what : std::string(); }

inline std::string rows_diff(const ConstantTable &t, const std::vector<std::vector<long>> &rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rat> want(rows[i].begin(), rows[i].end());
        const auto got = t.row(static_cast<int>(i) + 1);
        if (got != want) {
            return "row d=" + std::to_string(i + 1) + " mismatch: got " + qk::to_json(got).dump();
        }
    }
    return {};
}

inline void suite_core(VerifyReport &rep)
{
    Runner run("core", rep);
    run("rat_canonical", [] {
        return diff(Rat::parse("-6/4").str(), std::string("-3/2")) + diff(Rat(6, 4) + Rat(1, 2), Rat(2));
    });
    run("series_exp_log", [] {
        const QSeries s(8, {Rat(1), Rat(1), Rat(2), Rat(-3, 5), Rat(7)});
        return diff(s.log().exp(), s);
    });
    run("series_inverse", [] {
        const QSeries s(8, {Rat(2), Rat(1), Rat(-1, 3)});
        return diff(s * s.inverse(), QSeries::constant(8, Rat(1)));
    });
    run("exp_reversion_lambert", [] {
        // x = t - W(c e^t), W(z) = sum (-n)^{n-1} z^n / n!
        const Rat c(3, 7);
        LogSeries t(6, 1);
        t[1] = QSeries::constant(6, Rat(1));
        t[0][1] = c;
        const QSeries e = exp_reversion(t)[0];
        QSeries want(6);
        for (int n = 1; n <= 6; ++n) {
            want[n] = -Rat(-n).pow(n - 1) / factorial(n) * c.pow(n);
        }
        return diff(e, want);
    });
    run("exp_reversion_two_sided", [] {
        QSeries c(6, {Rat(0), Rat(2), Rat(-5, 3), Rat(1, 7)});
        LogSeries t(6, 1);
        t[0] = c;
        t[1] = QSeries::constant(6, Rat(1));
        const QSeries e = exp_reversion(t)[0];
        return diff(c + compose_exp(e, c), QSeries(6));
    });
    run("table_json_roundtrip", [] {
        ConstantTable t(9, 5, 2, Flavor::real);
        t.set(1, 0, Rat(-7, 3));
        t.set(1, 2, Rat(123456789, 1000));
        t.set(2, 0, Rat(5));
        const ConstantTable v = virtual_table(7, 5, 3);
        return table_diff(table_from_json(Json::parse(to_json(t).dump())), t) +
               table_diff(table_from_json(Json::parse(to_json(v).dump())), v);
    });
    run("sha256_vector", [] {
        return diff(sha256_hex("abc"), std::string("ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"));
    });
}

inline void suite_residue(VerifyReport &rep)
{
    Runner run("residue", rep);
    run("poly_2_explicit", [] {
        const MPoly want = Rat(1, 2) * (MPoly::var(3, 0) + MPoly::var(3, 2)) + MPoly::var(3, 1);
        return diff(poly_d(2), want);
    });
    run("poly_d_two_routes_d<=4", [] {
        for (int d = 1; d <= 4; ++d) {
            if (auto s = diff(poly_d_uncached(d), poly_d_direct(d)); !s.empty()) {
                return "d=" + std::to_string(d) + ": " + s;
            }
        }
        return std::string();
    });
    run("block_identity_d<=5", [] {
        for (int d = 1; d <= 5; ++d) {
            for (const auto &p : ordered_partitions(d)) {
                if (auto s = diff(wow_lhs(p), rising_w(d - 1)); !s.empty()) {
                    return "d=" + std::to_string(d) + ": " + s;
                }
            }
        }
        return std::string();
    });
    // every partition with l <= 4 parts, d <= 6, interior exponents 0..3
    auto each = [](const std::function<std::string(const std::vector<int> &, const std::vector<int> &,
                                                   const std::vector<BiPoly> &)> &f,
                   int lmin) {
        for (int d = 1; d <= 6; ++d) {
            for (const auto &p : ordered_partitions(d)) {
                const int l = p.length();
                if (l > 4 || l < lmin) {
                    continue;
                }
                std::vector<BiPoly> al;
                for (int x : p.parts) {
                    al.push_back(base_poly(x));
                }
                const auto br = p.breaks();
                std::vector<int> e(static_cast<std::size_t>(l - 1), 0);
                while (true) {
                    if (auto s = f(br, e, al); !s.empty()) {
                        return "d=" + std::to_string(d) + " l=" + std::to_string(l) + ": " + s;
                    }
                    int j = l - 2;
                    while (j >= 0 && ++e[static_cast<std::size_t>(j)] > 3) {
                        e[static_cast<std::size_t>(j)] = 0;
                        --j;
                    }
                    if (j < 0) {
                        break;
                    }
                }
            }
        }
        return std::string();
    };
    run("negative_part_vanishes_l<=4", [&] {
        return each([](auto &br, auto &e, auto &al) { return diff(circ_negative_part(br, e, al), BiPoly(2)); }, 2);
    });
    run("star_block_expansion_l<=4", [&] {
        return each([](auto &br, auto &e, auto &al) { return diff(circ_via_star_blocks(br, e, al), circ_product(br, e, al)); },
                    1);
    });
    run("circle_block_expansion_l<=4", [&] {
        return each([](auto &br, auto &e, auto &al) { return diff(circ_via_circ_blocks(br, e, al), circ_product(br, e, al)); },
                    1);
    });
    run("bracketing_expansion_l<=4", [&] {
        return each([](auto &br, auto &e, auto &al) { return diff(circ_via_bracketings(br, e, al), circ_product(br, e, al)); },
                    1);
    });
}

inline void suite_gaussmanin(VerifyReport &rep)
{
    Runner run("gaussmanin", rep);
    run("M75_constants", [] {
        return rows_diff(solve_constants(7, 5, 3), {{120, 770, 1345, 770, 120}, {211200, 692500, 211200}, {31320000}});
    });
    run("M75_ode", [] {
        const ScalarODE ode = reduce_to_ode(GMSystem(solve_constants(7, 5, 3)));
        ScalarODE want = givental_ode(7, 5, 3);
        want.levels[1] = {Rat(120), Rat(1250), Rat(4375), Rat(6250), Rat(3125)};
        return fail_if(!(ode == want), "reduced ODE differs from the degree-one hypergeometric operator");
    });
    run("virtual_equals_solved_k<=5_dmax4", [] {
        for (int k = 2; k <= 5; ++k) {
            for (int N = k + 2; N <= 2 * k + 1; ++N) {
                const auto s = table_diff(virtual_table(N, k, 4).reflavored(Flavor::real), solve_constants(N, k, 4));
                if (!s.empty()) {
                    return "(" + std::to_string(N) + "," + std::to_string(k) + "): " + s;
                }
            }
        }
        return std::string();
    });
    run("theorem4_check(7,5,2)", [] { return theorem4_check(7, 5, 2).report; });
    run("gamma_scaling_symbolic_k<=5_d<=3", [] {
        for (int k = 1; k <= 5; ++k) {
            for (int N = k + 2; N <= 2 * k + 1; ++N) {
                for (int d = 1; d <= 3; ++d) {
                    if (auto r = theorem4_check(N, k, d); !r) {
                        return r.report;
                    }
                }
            }
        }
        return std::string();
    });
    run("gamma_scaling_numeric", [] {
        for (const auto &[N, k] : std::vector<std::pair<int, int>>{{6, 5}, {5, 5}, {3, 5}, {4, 4}}) {
            for (int d = 1; d <= 3; ++d) {
                if (auto r = theorem4_check_numeric(virtual_table(N + 1, k, 3), d); !r) {
                    return r.report;
                }
            }
        }
        return std::string();
    });
    run("gamma_closed_vs_recursion_k<=5_d<=4", [] {
        for (int k = 1; k <= 5; ++k) {
            // N < k indexes psi over all of Z; there gamma has no meaning
            for (int N = k; N <= 2 * k + 2; ++N) {
                const ConstantTable t = virtual_table(N, k, 4);
                if (!(gamma_recursive(t) == gamma_closed(t))) {
                    return "(" + std::to_string(N) + "," + std::to_string(k) + ")";
                }
            }
        }
        return std::string();
    });
    run("gamma_scaling", [] {
        for (int k = 2; k <= 4; ++k) {
            for (int N = k + 2; N <= 2 * k; ++N) {
                if (!gamma_scaling_check(N, k, 3)) {
                    return "(" + std::to_string(N) + "," + std::to_string(k) + ")";
                }
            }
        }
        return std::string();
    });
    run("high_dimension_vanishing", [] {
        for (const auto &v : solve_constants(12, 5, 2).row(2)) {
            if (!v.is_zero()) {
                return std::string("N=12 k=5 d=2 row not zero");
            }
        }
        return std::string();
    });
    run("symmetry_all_tables", [] {
        for (int k = 1; k <= 5; ++k) {
            for (int N = 1; N <= 2 * k + 1; ++N) {
                if (!symmetry_check(virtual_table(N, k, 3))) {
                    return "virtual (" + std::to_string(N) + "," + std::to_string(k) + ")";
                }
                if (N - k >= 2 && !symmetry_check(solve_constants(N, k, 4))) {
                    return "real (" + std::to_string(N) + "," + std::to_string(k) + ")";
                }
            }
        }
        return std::string();
    });
}

inline void suite_givental(VerifyReport &rep)
{
    Runner run("givental", rep);
    run("phi_d_constant_term", [] {
        for (int d = 0; d <= 4; ++d) {
            if (auto s = diff(phi_d(7, 5, d, 2).coeffs[0], factorial(5L * d) / factorial(d).pow(7)); !s.empty()) {
                return s;
            }
        }
        return std::string();
    });
    run("L0_equals_w0_k3..6", [] {
        for (int k = 3; k <= 6; ++k) {
            if (auto s = diff(cy_family(k, 5)[0], w_series(k, k, 0, 5)); !s.empty()) {
                return "k=" + std::to_string(k) + ": " + s;
            }
        }
        return std::string();
    });
    run("L1_closed_form_k3..6", [] {
        for (int k = 3; k <= 6; ++k) {
            if (auto s = diff(cy_family(k, 5)[1], closed_form_L1(k, 5)); !s.empty()) {
                return "k=" + std::to_string(k) + ": " + s;
            }
        }
        return std::string();
    });
    run("L2_closed_form_k5..6", [] {
        for (int k = 5; k <= 6; ++k) {
            if (auto s = diff(cy_family(k, 4)[2], closed_form_L2(k, 4)); !s.empty()) {
                return "k=" + std::to_string(k) + ": " + s;
            }
        }
        return std::string();
    });
    run("ode_residuals", [] {
        for (const auto &[N, k] : std::vector<std::pair<int, int>>{{6, 4}, {7, 5}, {5, 5}}) {
            for (int j = 0; j <= N - 2; ++j) {
                const LogSeries r = ode_residual(u_series(N, k, j, 5), N, k);
                if (!r.is_zero()) {
                    std::ostringstream os;
                    os << "(" << N << "," << k << ") j=" << j << ": residual " << r;
                    return os.str();
                }
            }
        }
        return std::string();
    });
    run("bivariate_residual", [] {
        for (const auto &[N, k] : std::vector<std::pair<int, int>>{{6, 4}, {7, 5}, {5, 5}}) {
            if (!bivariate_residual_check(N, k, N + 2, 5)) {
                return "(" + std::to_string(N) + "," + std::to_string(k) + ")";
            }
        }
        return std::string();
    });
}

inline void suite_mirror(VerifyReport &rep)
{
    Runner run("mirror", rep);
    run("mt_schur_agree_d<=5", [] {
        for (int k = 5; k <= 7; ++k) {
            const int D = k == 5 ? 5 : 3;
            const auto a = mirror_transform(k, D);
            const auto b = schur_transform(k, D);
            for (const auto &[m, s] : a) {
                if (auto d = diff(s, b.at(m)); !d.empty()) {
                    return "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " + d;
                }
            }
        }
        return std::string();
    });
    run("quintic_2875_4876875", [] {
        const QSeries L = mirror_transform(5, 2).at(2);
        return diff(Rat(5) * L[1], Rat(2875)) + diff(Rat(5) * L[2], Rat(4876875));
    });
    run("yukawa_from_periods", [] {
        return diff(yukawa_from_periods(5, 5), Rat(5) * mirror_transform(5, 5).at(2));
    });
    run("yukawa_classical", [] { return diff(yukawa_classical(5, 5), yukawa_from_periods(5, 5)); });
    run("factorization_k3..6", [] {
        for (int k = 3; k <= 6; ++k) {
            if (!factorization_check(k, 3)) {
                return "k=" + std::to_string(k);
            }
        }
        return std::string();
    });
    run("nested_integrals_k3..6", [] {
        for (int k = 3; k <= 6; ++k) {
            for (int j = 0; j <= k - 2; ++j) {
                if (!nested_integral_check(k, j, 4)) {
                    return "k=" + std::to_string(k) + " j=" + std::to_string(j);
                }
            }
        }
        return std::string();
    });
}

inline void suite_pdo(VerifyReport &rep)
{
    Runner run("pdo", rep);
    const std::vector<std::pair<int, int>> general{{2, 3}, {3, 5}, {4, 6}};
    run("inverse_two_sided", [] {
        PDO a(3);
        a[0] = RatFunc(DPolyR::linear(Rat(2), Rat(1)), DPolyR::linear(Rat(1), Rat(3)));
        a[1] = RatFunc(DPolyR{Rat(1), Rat(0), Rat(-4)});
        a[3] = RatFunc(Rat(5), DPolyR::linear(Rat(-1, 2), Rat(1)));
        const PDO b = a.inverse();
        return diff(a * b, PDO::one(3)) + diff(b * a, PDO::one(3));
    });
    run("geometric_series_closed_form", [&] {
        for (const auto &[N, k] : general) {
            const auto g = geometric_inverse(N, k, 3);
            if (auto s = diff(g.series, g.closed_form); !s.empty()) {
                return "(" + std::to_string(N) + "," + std::to_string(k) + "): " + s;
            }
        }
        const auto z = geometric_inverse(3, 0, 3);
        return diff(z.series, z.closed_form);
    });
    run("build_F_stabilizes_to_closed_form", [&] {
        for (const auto &[N, k] : general) {
            const Stabilization s = stabilize_F(N, k, 3);
            if (auto d = diff(s.limit, closed_form_inverse(N, k, 3)); !d.empty()) {
                return "(" + std::to_string(N) + "," + std::to_string(k) + "): " + d;
            }
        }
        return std::string();
    });
    run("limit_inverse_gives_general_type_operator", [&] {
        for (const auto &[N, k] : general) {
            if (!neg_consistency_check(N, k, 3)) {
                return "(" + std::to_string(N) + "," + std::to_string(k) + ")";
            }
        }
        return std::string();
    });
    run("twist_k2..4", [] {
        for (int k = 2; k <= 4; ++k) {
            const TwistReport r = twist_check(k, 3);
            if (!r.ok) {
                std::ostringstream os;
                os << "k=" << k << ": " << r.conjugated << " vs " << r.givental;
                return os.str();
            }
        }
        return std::string();
    });
    run("L_3_2_1_vanishes", [] {
        for (const auto &v : twist_check(2, 3).shifted_degree_one) {
            if (!v.is_zero()) {
                return std::string("nonzero shifted degree-one constant");
            }
        }
        return std::string();
    });
}

} // namespace detail

/// Runs one suite, or every suite for "all". Unknown names throw std::invalid_argument.
inline VerifyReport run_verify(const std::string &suite)
{
    VerifyReport rep;
    const bool all = suite == "all";
    bool known = all;
    auto want = [&](const char *name) {
        if (all || suite == name) {
            known = true;
            return true;
        }
        return false;
    };
    if (want("core")) {
        detail::suite_core(rep);
    }
    if (want("residue")) {
        detail::suite_residue(rep);
    }
    if (want("gaussmanin")) {
        detail::suite_gaussmanin(rep);
    }
    if (want("givental")) {
        detail::suite_givental(rep);
    }
    if (want("mirror")) {
        detail::suite_mirror(rep);
    }
    if (want("pdo")) {
        detail::suite_pdo(rep);
    }
    if (!known) {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

} // namespace qk

#endif
