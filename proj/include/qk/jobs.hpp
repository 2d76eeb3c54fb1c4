#ifndef QK_JOBS_HPP
#define QK_JOBS_HPP

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "cache.hpp"
#include "gauss_manin.hpp"
#include "mirror.hpp"
#include "pdo.hpp"
#include "recursion.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace qk
{

/// Raised for requests outside the supported (N, k, dmax) domain; the CLI maps it to exit code 2.
class InvalidSpec : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct JobSpec {
    std::string command; // table | mirror | ode | verify
    int N = 0;
    int k = 0;
    int dmax = 3;
    int D = -1; // mirror series order, defaults to dmax
    Flavor flavor = Flavor::real;
    std::string suite = "all";
};

struct JobResult {
    Json document;
    bool ok = true; // false: verification failure
};

inline JobKey job_key(const JobSpec &s)
{
    std::string cmd = s.command;
    if (s.command == "verify") {
        cmd += ":" + s.suite;
    }
    return {cmd, s.N, s.k, s.dmax, s.D, flavor_name(s.flavor)};
}

namespace detail
{

inline void require(bool cond, const std::string &msg)
{
    if (!cond) {
        throw InvalidSpec(msg);
    }
}

inline Json nk_truncation(const JobSpec &s) { return Json{{"N", s.N}, {"k", s.k}, {"dmax", s.dmax}}; }

/// Real table routed by N - k; method names the path taken.
inline std::pair<ConstantTable, std::string> real_table(int N, int k, int dmax, bool &ok)
{
    require(N >= k, "real flavor needs N >= k (general type has no quantum Kaehler table; use --virtual)");
    if (N - k >= 2) {
        return {solve_constants(N, k, dmax), "gauss-manin determination from the Givental ODE"};
    }
    if (N - k == 1) {
        require(k >= 2, "N - k = 1 needs k >= 2");
        TwistReport r = twist_check(k, dmax);
        ok = ok && r.ok;
        return {r.real_table, "virtual recursion with degree-one shift by k!, checked against the Givental ODE"};
    }
    ConstantTable t(N, k, dmax, Flavor::real);
    if (k >= 5) {
        const auto mt = mirror_transform(k, dmax);
        for (int d = 1; d <= dmax; ++d) {
            for (int m = t.m_lo(d); m <= t.m_hi(d); ++m) {
                t.set(d, m, mt.at(m)[d]);
            }
        }
    }
    return {t, "mirror transformation of the virtual Calabi-Yau constants"};
}

} // namespace detail

inline void validate(const JobSpec &s)
{
    using detail::require;
    if (s.command == "verify") {
        bool known = s.suite == "all";
        for (const auto &n : verify_suites()) {
            known = known || n == s.suite;
        }
        require(known, "unknown suite '" + s.suite + "'");
        return;
    }
    require(s.command == "table" || s.command == "mirror" || s.command == "ode", "unknown command '" + s.command + "'");
    require(s.k >= 1, "k must be >= 1");
    if (s.command == "mirror") {
        require(s.N == s.k, "mirror needs N = k");
        require(s.k >= 5, "mirror needs k >= 5");
        require(s.dmax >= 0, "dmax must be >= 0");
        require(s.D >= s.dmax, "D must be >= dmax");
        return;
    }
    require(s.N >= 1, "N must be >= 1");
    require(s.dmax >= 1, "dmax must be >= 1");
}

inline JobResult run_table(const JobSpec &s)
{
    bool ok = true;
    ConstantTable t;
    std::string method;
    if (s.flavor == Flavor::virtual_) {
        t = virtual_table(s.N, s.k, s.dmax);
        method = "virtual recursion from the degree-one generator";
    } else {
        std::tie(t, method) = detail::real_table(s.N, s.k, s.dmax, ok);
    }
    const bool sym = symmetry_check(t);
    Json res{{"table", to_json(t)}, {"symmetric", sym}};
    return {make_document("table", method, detail::nk_truncation(s), res), ok && sym};
}

inline JobResult run_mirror(const JobSpec &s)
{
    const int k = s.k;
    Json constants = Json::array();
    bool agree = true;
    bool yukawa = true;
    if (s.dmax >= 1) {
        const auto mt = mirror_transform(k, s.D);
        const auto sc = schur_transform(k, s.D);
        for (const auto &[m, L] : mt) {
            agree = agree && L == sc.at(m);
            const QSeries Lt = L.truncate(s.dmax);
            constants.push_back(Json{{"m", m}, {"L", to_json(Lt)}, {"kL", to_json(Rat(k) * Lt)}});
        }
        yukawa = (Rat(k) * mt.at(2)) == yukawa_from_periods(k, s.D);
    }
    Json res{{"k", k}, {"dmax", s.dmax}, {"D", s.D}, {"paths_agree", agree}, {"yukawa_agree", yukawa},
             {"constants", constants}};
    Json trunc{{"k", k}, {"dmax", s.dmax}, {"D", s.D}};
    return {make_document("mirror", "ratio transform and coefficient form from the virtual Calabi-Yau constants", trunc,
                          res),
            agree && yukawa};
}

inline JobResult run_ode(const JobSpec &s)
{
    bool ok = true;
    ConstantTable t;
    std::string method;
    if (s.flavor == Flavor::virtual_) {
        detail::require(s.N >= s.k, "ode needs N >= k");
        t = virtual_table(s.N, s.k, s.dmax);
        method = "reduction of the Gauss-Manin system of the virtual table";
    } else {
        detail::require(s.N - s.k >= 1, "real ode needs N - k >= 1");
        std::tie(t, method) = detail::real_table(s.N, s.k, s.dmax, ok);
        method = "reduction of the Gauss-Manin system; table by " + method;
    }
    const ScalarODE ode = reduce_to_ode(GMSystem(t));
    Json res{{"N", s.N}, {"k", s.k}, {"dmax", s.dmax}, {"flavor", flavor_name(s.flavor)}, {"ode", to_json(ode)}};
    const bool matches = ode == givental_ode(s.N, s.k, s.dmax);
    res["matches_givental"] = matches;
    if (s.flavor == Flavor::real && s.N - s.k >= 2) {
        ok = ok && matches;
    }
    return {make_document("ode", method, detail::nk_truncation(s), res), ok};
}

inline JobResult run_verify_job(const JobSpec &s)
{
    const VerifyReport rep = run_verify(s.suite);
    Json res = rep.to_json();
    res["suite"] = s.suite;
    return {make_document("verify", "exact identity checks", Json{{"suite", s.suite}}, res), rep.ok()};
}

/// Fills mirror defaults: N = k, D = dmax.
inline void normalize(JobSpec &s)
{
    if (s.command == "mirror") {
        if (s.N == 0) {
            s.N = s.k;
        }
        if (s.D < 0) {
            s.D = s.dmax;
        }
    }
}

/// Validates and dispatches; throws InvalidSpec for unsupported requests.
inline JobResult run_job(JobSpec s)
{
    normalize(s);
    validate(s);
    if (s.command == "table") {
        return run_table(s);
    }
    if (s.command == "mirror") {
        return run_mirror(s);
    }
    if (s.command == "ode") {
        return run_ode(s);
    }
    return run_verify_job(s);
}

} // namespace qk

#endif
