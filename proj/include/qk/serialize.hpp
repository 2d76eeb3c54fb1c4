#ifndef QK_SERIALIZE_HPP
#define QK_SERIALIZE_HPP

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"

#include "gauss_manin.hpp"
#include "rat.hpp"
#include "series.hpp"
#include "table.hpp"

namespace qk
{

inline constexpr const char *engine_version = "1.0.0";

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat &r) { return Json{{"n", r.num_str()}, {"d", r.den_str()}}; }

inline Rat rat_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j["n"].is_string() || !j["d"].is_string()) {
        throw std::invalid_argument("rational must be {\"n\": string, \"d\": string}");
    }
    return Rat::parse(j["n"].get<std::string>() + "/" + j["d"].get<std::string>());
}

inline Json to_json(const std::vector<Rat> &v)
{
    Json a = Json::array();
    for (const auto &r : v) {
        a.push_back(to_json(r));
    }
    return a;
}

inline Json to_json(const QSeries &s)
{
    std::vector<Rat> v;
    for (int d = 0; d <= s.order(); ++d) {
        v.push_back(s[d]);
    }
    return to_json(v);
}

inline Json to_json(const ConstantTable &t)
{
    Json rows = Json::array();
    for (int d = 1; d <= t.dmax(); ++d) {
        rows.push_back(Json{{"d", d}, {"m_lo", t.m_lo(d)}, {"values", to_json(t.row(d))}});
    }
    return Json{{"N", t.N()}, {"k", t.k()}, {"dmax", t.dmax()}, {"flavor", flavor_name(t.flavor())}, {"rows", rows}};
}

inline ConstantTable table_from_json(const Json &j)
{
    const std::string fl = j.at("flavor").get<std::string>();
    if (fl != "real" && fl != "virtual") {
        throw std::invalid_argument("unknown flavor " + fl);
    }
    ConstantTable t(j.at("N").get<int>(), j.at("k").get<int>(), j.at("dmax").get<int>(),
                    fl == "real" ? Flavor::real : Flavor::virtual_);
    for (const auto &row : j.at("rows")) {
        const int d = row.at("d").get<int>();
        int m = row.at("m_lo").get<int>();
        for (const auto &v : row.at("values")) {
            t.set(d, m++, rat_from_json(v));
        }
    }
    return t;
}

/// Levels of a scalar ODE, coefficients ascending in the derivative power.
inline Json to_json(const ScalarODE &ode)
{
    Json levels = Json::array();
    for (std::size_t d = 0; d < ode.levels.size(); ++d) {
        levels.push_back(Json{{"d", d}, {"coeffs", to_json(dpoly_trim(ode.levels[d]))}});
    }
    return Json{{"order", ode.order}, {"levels", levels}};
}

inline std::string sha256_hex(const std::string &data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) {
        os << std::setw(2) << static_cast<int>(md[i]);
    }
    return os.str();
}

inline std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

/// Wraps a result with its provenance; the hash covers the compact dump of the result.
inline Json make_document(const std::string &command, const std::string &method, const Json &truncation,
                          const Json &result)
{
    Json meta{{"method", method},
              {"truncation", truncation},
              {"engine_version", engine_version},
              {"timestamp", utc_timestamp()},
              {"content_hash", sha256_hex(result.dump())}};
    return Json{{"command", command}, {"metadata", meta}, {"result", result}};
}

namespace detail
{

inline std::string csv_rat(const Json &j)
{
    const Rat r = rat_from_json(j);
    return r.num_str() + "/" + r.den_str();
}

inline void csv_meta(std::ostringstream &os, const Json &doc)
{
    const Json &m = doc.at("metadata");
    os << "# command: " << doc.at("command").get<std::string>() << '\n';
    os << "# method: " << m.at("method").get<std::string>() << '\n';
    os << "# truncation: " << m.at("truncation").dump() << '\n';
    os << "# engine_version: " << m.at("engine_version").get<std::string>() << '\n';
    os << "# timestamp: " << m.at("timestamp").get<std::string>() << '\n';
    os << "# content_hash: " << m.at("content_hash").get<std::string>() << '\n';
}

inline void csv_table(std::ostringstream &os, const Json &t)
{
    os << "d,m,value\n";
    for (const auto &row : t.at("rows")) {
        int m = row.at("m_lo").get<int>();
        for (const auto &v : row.at("values")) {
            os << row.at("d").get<int>() << ',' << m++ << ',' << csv_rat(v) << '\n';
        }
    }
}

} // namespace detail

/// CSV view of a document; metadata goes into leading comment lines.
inline std::string to_csv(const Json &doc)
{
    std::ostringstream os;
    detail::csv_meta(os, doc);
    const std::string cmd = doc.at("command").get<std::string>();
    const Json &r = doc.at("result");
    if (cmd == "table") {
        detail::csv_table(os, r.at("table"));
    } else if (cmd == "mirror") {
        os << "m,d,L,kL\n";
        for (const auto &e : r.at("constants")) {
            const auto &L = e.at("L");
            const auto &kL = e.at("kL");
            for (std::size_t d = 1; d < L.size(); ++d) {
                os << e.at("m").get<int>() << ',' << d << ',' << detail::csv_rat(L[d]) << ','
                   << detail::csv_rat(kL[d]) << '\n';
            }
        }
    } else if (cmd == "ode") {
        os << "d,power,coeff\n";
        for (const auto &lv : r.at("ode").at("levels")) {
            int p = 0;
            for (const auto &c : lv.at("coeffs")) {
                os << lv.at("d").get<int>() << ',' << p++ << ',' << detail::csv_rat(c) << '\n';
            }
        }
    } else if (cmd == "verify") {
        os << "suite,check,status\n";
        for (const auto &c : r.at("checks")) {
            os << c.at("suite").get<std::string>() << ',' << c.at("check").get<std::string>() << ','
               << (c.at("ok").get<bool>() ? "pass" : "fail") << '\n';
        }
    } else {
        throw std::invalid_argument("to_csv: unknown command " + cmd);
    }
    return os.str();
}

} // namespace qk

#endif
