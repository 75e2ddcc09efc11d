// fiblie: batch verification front end for the Fibonacci Lie algebra engine.
//
// Subcommands: dims, homology, verify, hopf, cache.  Exit codes: 0 success,
// 1 failed checks or corrupt data, 2 usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fiblie/checks.hpp"
#include "fiblie/core.hpp"
#include "fiblie/free_lie.hpp"
#include "fiblie/homology.hpp"
#include "fiblie/parallel.hpp"
#include "fiblie/report.hpp"
#include "fiblie/subquotients.hpp"

#ifndef FIBLIE_DEFAULT_GOLDEN_DIR
#define FIBLIE_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace {

using fiblie::AlgebraId;
using fiblie::Json;
using fiblie::Report;
using fiblie::ReportRow;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int cmd_dims(const std::string& algebra, int max_degree, const std::string& format,
             const std::string& out_path) {
    AlgebraId a = fiblie::parse_algebra(algebra);
    Report rep;
    rep.max_degree = max_degree;
    rep.algebra = a.name();
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
    fiblie::for_each_degree(1, max_degree, [&](std::int64_t d) {
        dims[static_cast<std::size_t>(d)] = member_basis(a, d).size();
    });
    for (int d = 1; d <= max_degree; ++d)
        rep.rows.push_back(ReportRow{d, dims[static_cast<std::size_t>(d)], std::nullopt, {}});
    emit(format == "csv" ? rep.to_csv() : rep.to_json_string(), out_path);
    return 0;
}

int cmd_homology(int n, const std::string& algebra, int max_degree, const std::string& format,
                 const std::string& out_path) {
    AlgebraId a = fiblie::parse_algebra(algebra);
    Report rep;
    rep.max_degree = max_degree;
    rep.algebra = a.name();
    std::vector<fiblie::HomologySpace> spaces(static_cast<std::size_t>(max_degree) + 1);
    fiblie::for_each_degree(1, max_degree, [&](std::int64_t d) {
        spaces[static_cast<std::size_t>(d)] = fiblie::homology(a, n, d);
    });
    std::size_t running = 0;
    for (int d = 1; d <= max_degree; ++d) {
        const fiblie::HomologySpace& h = spaces[static_cast<std::size_t>(d)];
        running += h.dim;
        ReportRow row{d, h.dim, running, {}};
        if (n == 2)
            for (const fiblie::Chain& c : h.representatives)
                row.cycles.push_back(fiblie::encode(c));
        rep.rows.push_back(std::move(row));
    }
    emit(format == "csv" ? rep.to_csv() : rep.to_json_string(), out_path);
    return 0;
}

int cmd_verify(const std::string& suite, int max_degree, const std::string& report_path,
               const std::string& golden_dir) {
    if (!fiblie::known_suite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    fiblie::CheckOptions opts{golden_dir};
    std::vector<fiblie::CheckResult> results = fiblie::run_suite(suite, max_degree, opts);
    bool all_pass = true;
    for (const fiblie::CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [1.." << r.degree_hi << "] "
                  << r.details << "\n";
    }
    if (!report_path.empty()) {
        Report rep;
        rep.max_degree = max_degree;
        rep.algebra = "L";
        for (int d = 1; d <= max_degree; ++d)
            rep.rows.push_back(
                ReportRow{d, fiblie::enumerate_basis(d).size(), std::nullopt, {}});
        rep.checks = results;
        std::ofstream out(report_path);
        if (!out)
            throw std::runtime_error("cannot write " + report_path);
        out << rep.to_json_string();
    }
    return all_pass ? 0 : 1;
}

int cmd_hopf(int max_degree, const std::string& out_path) {
    fiblie::HopfOracle oracle(max_degree);
    Json rows = Json::array();
    bool all_agree = true;
    for (int d = 1; d <= max_degree; ++d) {
        Json row;
        row["degree"] = d;
        row["witt"] = fiblie::witt_dim(d);
        row["dim_l"] = fiblie::enumerate_basis(d).size();
        if (d >= 2) {
            std::size_t hopf = oracle.h2(d);
            std::size_t ce = fiblie::homology(AlgebraId::full(), 2, d).dim;
            row["h2_hopf"] = hopf;
            row["h2_ce"] = ce;
            row["agree"] = hopf == ce;
            all_agree = all_agree && hopf == ce;
        }
        rows.push_back(std::move(row));
    }
    Json j;
    j["tool_version"] = fiblie::kToolVersion;
    j["max_degree"] = max_degree;
    j["algebra"] = "L";
    j["rows"] = std::move(rows);
    emit(j.dump(2) + "\n", out_path);
    return all_agree ? 0 : 1;
}

int cmd_cache(const std::string& write_path, const std::string& read_path,
              const std::string& algebra, int max_degree) {
    if (write_path.empty() == read_path.empty()) {
        std::cerr << "cache: exactly one of --write or --read is required\n";
        return 2;
    }
    if (!write_path.empty()) {
        AlgebraId a = fiblie::parse_algebra(algebra);
        fiblie::write_cache(fiblie::build_cache(a, max_degree), write_path);
        std::cout << "wrote " << a.name() << " bases for degrees 1.." << max_degree << "\n";
        return 0;
    }
    fiblie::CacheFile cache = fiblie::read_cache(read_path);
    for (const auto& [key, names] : cache.entries) {
        std::size_t colon = key.find(':');
        AlgebraId a = fiblie::parse_algebra(key.substr(0, colon));
        std::int64_t d = std::stoll(key.substr(colon + 1));
        std::vector<std::string> expect;
        for (const fiblie::BasisMonomial& m : member_basis(a, d))
            expect.push_back(fiblie::encode(m));
        if (names != expect)
            throw fiblie::CorruptCache("cache entry " + key + " does not reproduce the basis");
    }
    std::cout << "cache ok: " << cache.entries.size() << " entries verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the Fibonacci Lie algebra and its graded homology"};
    app.require_subcommand(1);

    std::string algebra = "L";
    int max_degree = 0;
    std::string format = "json";
    std::string out_path;
    int homology_n = 1;
    std::string suite = "all";
    std::string report_path;
    std::string golden_dir = FIBLIE_DEFAULT_GOLDEN_DIR;
    std::string cache_write, cache_read;

    CLI::App* dims = app.add_subcommand("dims", "per-degree dimensions of a named algebra");
    dims->add_option("--algebra", algebra, "L, Ltilde, A1, L1, L2, M1, M2, Q1, Q2")
        ->default_val("L");
    dims->add_option("--max-degree", max_degree)->default_val(20)->check(CLI::PositiveNumber);
    dims->add_option("--format", format)->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    dims->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* hom = app.add_subcommand("homology", "graded Chevalley-Eilenberg homology");
    hom->add_option("--n", homology_n, "homological degree")->required()
        ->check(CLI::IsMember({1, 2}));
    hom->add_option("--algebra", algebra)->default_val("L");
    hom->add_option("--max-degree", max_degree)->default_val(14)->check(CLI::PositiveNumber);
    hom->add_option("--format", format)->default_val("json")
        ->check(CLI::IsMember({"csv", "json"}));
    hom->add_option("--out", out_path);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite)->default_val("all")
        ->check(CLI::IsMember({"core", "structure", "homology", "all"}));
    verify->add_option("--max-degree", max_degree)->default_val(14)->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_option("--golden-dir", golden_dir, "directory with h2 growth golden files");

    CLI::App* hopf = app.add_subcommand("hopf", "Hopf formula vs Chevalley-Eilenberg H2");
    hopf->add_option("--max-degree", max_degree)->default_val(10)
        ->check(CLI::Range(1, fiblie::kHopfDegreeGuard));
    hopf->add_option("--out", out_path);

    CLI::App* cache = app.add_subcommand("cache", "write or validate a basis cache");
    cache->add_option("--write", cache_write, "write a cache file");
    cache->add_option("--read", cache_read, "read and validate a cache file");
    cache->add_option("--algebra", algebra)->default_val("L");
    cache->add_option("--max-degree", max_degree)->default_val(20)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (dims->parsed())
            return cmd_dims(algebra, max_degree, format, out_path);
        if (hom->parsed())
            return cmd_homology(homology_n, algebra, max_degree, format, out_path);
        if (verify->parsed())
            return cmd_verify(suite, max_degree, report_path, golden_dir);
        if (hopf->parsed())
            return cmd_hopf(max_degree, out_path);
        if (cache->parsed())
            return cmd_cache(cache_write, cache_read, algebra, max_degree);
    } catch (const fiblie::UnknownAlgebra& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const fiblie::DegreeTooLarge& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const fiblie::CorruptCache& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
