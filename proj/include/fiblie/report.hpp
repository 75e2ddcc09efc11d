#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fiblie/core.hpp"
#include "fiblie/errors.hpp"
#include "fiblie/subquotients.hpp"

namespace fiblie {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCacheFormatVersion = 1;

using Json = nlohmann::ordered_json;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::int64_t degree_lo = 1;
    std::int64_t degree_hi = 1;
    std::string details;
};

struct ReportRow {
    std::int64_t degree = 0;
    std::size_t dim = 0;
    std::optional<std::size_t> partial_sum;
    std::vector<std::string> cycles;
};

/// Serializable run summary: {tool_version, max_degree, algebra, rows, checks}.
/// Key order is fixed; no timestamps, so equal flags give equal bytes.
struct Report {
    std::string tool_version = kToolVersion;
    int max_degree = 0;
    std::string algebra;
    std::vector<ReportRow> rows;
    std::vector<CheckResult> checks;

    Json to_json() const {
        Json j;
        j["tool_version"] = tool_version;
        j["max_degree"] = max_degree;
        j["algebra"] = algebra;
        Json jrows = Json::array();
        for (const ReportRow& r : rows) {
            Json row;
            row["degree"] = r.degree;
            row["dim"] = r.dim;
            if (r.partial_sum)
                row["partial_sum"] = *r.partial_sum;
            if (!r.cycles.empty())
                row["cycles"] = r.cycles;
            jrows.push_back(std::move(row));
        }
        j["rows"] = std::move(jrows);
        Json jchecks = Json::array();
        for (const CheckResult& c : checks) {
            Json jc;
            jc["name"] = c.name;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["degree_range"] = Json::array({c.degree_lo, c.degree_hi});
            jc["details"] = c.details;
            jchecks.push_back(std::move(jc));
        }
        j["checks"] = std::move(jchecks);
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    /// Rows only; includes the partial-sum column when any row carries one.
    std::string to_csv() const {
        bool partial = false;
        for (const ReportRow& r : rows)
            partial = partial || r.partial_sum.has_value();
        std::ostringstream out;
        out << (partial ? "degree,dim,partial_sum\n" : "degree,dim\n");
        for (const ReportRow& r : rows) {
            out << r.degree << ',' << r.dim;
            if (partial)
                out << ',' << r.partial_sum.value_or(0);
            out << '\n';
        }
        return out.str();
    }
};

/// Persisted graded bases, keyed "ALGEBRA:DEGREE" -> canonical monomial strings.
struct CacheFile {
    int format_version = kCacheFormatVersion;
    std::vector<std::pair<std::string, std::vector<std::string>>> entries;

    static std::string key(const AlgebraId& a, std::int64_t d) {
        return a.name() + ":" + std::to_string(d);
    }
};

inline CacheFile build_cache(const AlgebraId& a, int max_degree) {
    CacheFile cache;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::string> names;
        for (const BasisMonomial& m : member_basis(a, d))
            names.push_back(encode(m));
        cache.entries.emplace_back(CacheFile::key(a, d), std::move(names));
    }
    return cache;
}

inline void write_cache(const CacheFile& cache, const std::string& path) {
    Json j;
    j["format_version"] = cache.format_version;
    Json entries;
    for (const auto& [key, names] : cache.entries)
        entries[key] = names;
    j["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write cache file: " + path);
    out << j.dump(2) << "\n";
}

/// Loads and fully validates a cache: version, key syntax, monomial encoding,
/// monomial validity.  Any defect raises CorruptCache.
inline CacheFile read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CorruptCache("cannot open cache file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw CorruptCache(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!j.contains("format_version") || !j["format_version"].is_number_integer())
        throw CorruptCache("cache has no format_version");
    if (j["format_version"].get<int>() != kCacheFormatVersion)
        throw CorruptCache("unsupported cache format_version " +
                           std::to_string(j["format_version"].get<int>()));
    if (!j.contains("entries") || !j["entries"].is_object())
        throw CorruptCache("cache has no entries object");
    CacheFile cache;
    for (const auto& [key, value] : j["entries"].items()) {
        std::size_t colon = key.find(':');
        if (colon == std::string::npos)
            throw CorruptCache("bad cache key: " + key);
        try {
            parse_algebra(key.substr(0, colon));
            if (std::stoll(key.substr(colon + 1)) < 1)
                throw CorruptCache("bad cache key degree: " + key);
        } catch (const CorruptCache&) {
            throw;
        } catch (const std::exception&) {
            throw CorruptCache("bad cache key: " + key);
        }
        if (!value.is_array())
            throw CorruptCache("cache entry is not an array: " + key);
        std::vector<std::string> names;
        for (const auto& item : value) {
            if (!item.is_string())
                throw CorruptCache("cache entry item is not a string: " + key);
            std::string s = item.get<std::string>();
            try {
                parse_monomial(s);
            } catch (const std::exception&) {
                throw CorruptCache("unparsable monomial in cache: " + s);
            }
            names.push_back(std::move(s));
        }
        cache.entries.emplace_back(key, std::move(names));
    }
    return cache;
}

}  // namespace fiblie
