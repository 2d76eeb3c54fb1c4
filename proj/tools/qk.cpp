// qk: structure constants, mirror series, reduced ODEs and identity checks from the command line.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qk/jobs.hpp"

namespace
{

enum Exit { ok = 0, verification_failed = 1, invalid_spec = 2 };

bool write_out(const std::string &path, const std::string &text)
{
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout.flush());
    }
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!(out << text) || !out.flush()) {
            return false;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    return !ec;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"quantum Kaehler sub-ring structure constants"};
    app.require_subcommand(1);

    qk::JobSpec spec;
    bool is_virtual = false;
    bool no_cache = false;
    std::string format = "json";
    std::string out_path;

    auto common = [&](CLI::App *sub, bool needs_n) {
        if (needs_n) {
            sub->add_option("--N", spec.N, "ambient projective space is P^{N-1}")->required();
        } else {
            sub->add_option("--N", spec.N, "must equal k when given");
        }
        sub->add_option("--k", spec.k, "hypersurface degree")->required();
        sub->add_option("--dmax", spec.dmax, "highest degree d")->capture_default_str();
        sub->add_option("--D", spec.D, "series truncation order");
        sub->add_flag("--virtual", is_virtual, "virtual structure constants");
    };
    CLI::App *table = app.add_subcommand("table", "structure constants L_m^{N,k,d}");
    common(table, true);
    CLI::App *mirror = app.add_subcommand("mirror", "Calabi-Yau constants through the mirror transformation");
    common(mirror, false);
    CLI::App *ode = app.add_subcommand("ode", "scalar ODE reduced from the Gauss-Manin system");
    common(ode, true);
    CLI::App *verify = app.add_subcommand("verify", "exact identity checks");
    verify->add_option("suite", spec.suite, "core|residue|gaussmanin|givental|mirror|pdo|all")->capture_default_str();

    for (CLI::App *sub : {table, mirror, ode, verify}) {
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--out", out_path, "write to this file instead of stdout");
        sub->add_flag("--no-cache", no_cache, "recompute and do not touch the cache");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return invalid_spec;
    }

    spec.command = app.get_subcommands().front()->get_name();
    spec.flavor = is_virtual ? qk::Flavor::virtual_ : qk::Flavor::real;
    try {
        qk::normalize(spec);
        qk::validate(spec);
    } catch (const qk::InvalidSpec &e) {
        std::cerr << "qk: invalid spec: " << e.what() << '\n';
        return invalid_spec;
    }

    const qk::ResultCache cache(no_cache ? std::filesystem::path() : qk::default_cache_dir());
    const qk::JobKey key = qk::job_key(spec);
    std::string doc_text;
    bool passed = true;
    if (auto hit = cache.load(key)) {
        doc_text = *hit;
    } else {
        try {
            const qk::JobResult r = qk::run_job(spec);
            doc_text = r.document.dump(2) + "\n";
            passed = r.ok;
        } catch (const qk::InvalidSpec &e) {
            std::cerr << "qk: invalid spec: " << e.what() << '\n';
            return invalid_spec;
        } catch (const std::exception &e) {
            std::cerr << "qk: " << e.what() << '\n';
            return verification_failed;
        }
        // only passing results are cached, so a hit never hides a failure
        if (passed) {
            cache.store(key, doc_text);
        }
    }

    const std::string text = format == "csv" ? qk::to_csv(qk::Json::parse(doc_text)) : doc_text;
    if (!write_out(out_path, text)) {
        std::cerr << "qk: cannot write " << (out_path.empty() ? "stdout" : out_path) << '\n';
        return verification_failed;
    }
    if (!passed) {
        std::cerr << "qk: verification failed\n";
        return verification_failed;
    }
    return ok;
}
