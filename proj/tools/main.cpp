#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "job.hpp"
#include "run.hpp"

using namespace brauer;

namespace {

enum Exit { Ok = 0, Internal = 1, Parse = 2, Validation = 3, Cap = 4 };

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ParseError: return Parse;
    case ErrorKind::CapExceeded: return Cap;
    default: return Validation;
    }
}

const char* error_class(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    default: return "ValidationError";
    }
}

int run_file(const std::string& path, const Caps& caps)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return Internal;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream report;
    try {
        cli::Job job = cli::parse_job(ss.str(), caps);
        report << "input: " << cli::canonical(job).dump() << "\n";
        cli::run_job(job, report);
    } catch (const Error& e) {
        std::cout << report.str();
        std::string cls = error_class(e.kind()), kind = kind_name(e.kind());
        std::cerr << "error: " << cls << (cls == kind ? "" : " (" + kind + ")") << ": " << e.what();
        if (!e.witness().empty())
            std::cerr << " [" << e.witness() << "]";
        std::cerr << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cout << report.str();
        std::cerr << "error: internal: " << e.what() << "\n";
        return Internal;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.str();
    std::cout << "== timing ==\nelapsed_ms " << ms << "\n== end timing ==\n";
    return Ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unramified Brauer groups of SL_n/G and local evaluation"};
    app.require_subcommand(1);
    int threads = 1;
    std::vector<std::string> caps_in;
    app.add_option("--threads", threads, "worker threads (the runner is deterministic for any value)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap", caps_in, "override a size cap, name=value; repeatable");

    std::string file;
    auto* run = app.add_subcommand("run", "run one job file");
    run->add_option("file", file, "job file (JSON)")->required();
    auto* self = app.add_subcommand("selftest", "run the bundled oracle checks");
    auto* caps_cmd = app.add_subcommand("caps", "list caps and their defaults");

    CLI11_PARSE(app, argc, argv);

    Caps caps;
    caps.threads = threads;
    for (const auto& c : caps_in) {
        auto eq = c.find('=');
        i64 v = 0;
        bool ok = eq != std::string::npos;
        if (ok) {
            try {
                std::size_t used = 0;
                v = std::stoll(c.substr(eq + 1), &used);
                ok = used == c.size() - eq - 1;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || !caps.set(c.substr(0, eq), v)) {
            std::cerr << "error: ValidationError: bad --cap '" << c << "'\n";
            return Validation;
        }
    }

    if (*caps_cmd) {
        for (const auto& [name, value] : caps.list())
            std::cout << name << " " << value << "\n";
        return Ok;
    }
    if (*self)
        return cli::selftest(std::cout) ? Internal : Ok;
    return run_file(file, caps);
}
