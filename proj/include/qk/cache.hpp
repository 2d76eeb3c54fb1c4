#ifndef QK_CACHE_HPP
#define QK_CACHE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "serialize.hpp"

namespace qk
{

/// Identity of a cached job.
struct JobKey {
    std::string command;
    int N = 0;
    int k = 0;
    int dmax = 0;
    int D = 0;
    std::string flavor;

    std::string digest() const
    {
        std::ostringstream os;
        os << command << '\n' << N << '\n' << k << '\n' << dmax << '\n' << D << '\n' << flavor << '\n' << engine_version;
        return sha256_hex(os.str());
    }
};

/// QK_CACHE_DIR, else $XDG_CACHE_HOME/qk, else $HOME/.cache/qk; empty if none is set.
inline std::filesystem::path default_cache_dir()
{
    if (const char *p = std::getenv("QK_CACHE_DIR"); p && *p) {
        return p;
    }
    if (const char *p = std::getenv("XDG_CACHE_HOME"); p && *p) {
        return std::filesystem::path(p) / "qk";
    }
    if (const char *p = std::getenv("HOME"); p && *p) {
        return std::filesystem::path(p) / ".cache" / "qk";
    }
    return {};
}

/// Directory of JSON documents keyed by job digest. Advisory: any failure reads as a miss.
class ResultCache
{
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path &dir() const { return dir_; }

    std::filesystem::path path_for(const JobKey &key) const { return dir_ / (key.digest() + ".json"); }

    std::optional<std::string> load(const JobKey &key) const
    {
        if (dir_.empty()) {
            return std::nullopt;
        }
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) {
            return std::nullopt;
        }
        std::ostringstream os;
        os << in.rdbuf();
        std::string s = os.str();
        // reject truncated or foreign files
        if (!Json::accept(s)) {
            return std::nullopt;
        }
        return s;
    }

    /// Write-temp-then-rename; returns false when the cache is unusable.
    bool store(const JobKey &key, const std::string &content) const
    {
        if (dir_.empty()) {
            return false;
        }
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) {
            return false;
        }
        const auto target = path_for(key);
        std::random_device rd;
        const auto tmp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                return false;
            }
            out << content;
            if (!out.flush()) {
                std::filesystem::remove(tmp, ec);
                return false;
            }
        }
        std::filesystem::rename(tmp, target, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            return false;
        }
        return true;
    }

private:
    std::filesystem::path dir_;
};

} // namespace qk

#endif
