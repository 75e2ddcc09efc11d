#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fiblie/report.hpp"

using namespace fiblie;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("report serialization is stable") {
    Report rep;
    rep.max_degree = 3;
    rep.algebra = "L";
    rep.rows = {{1, 2, std::nullopt, {}}, {2, 1, std::nullopt, {}}, {3, 2, std::nullopt, {}}};
    rep.checks = {{"jacobi", true, 1, 3, "ok"}};

    std::string json = rep.to_json_string();
    CHECK(json == rep.to_json_string());
    CHECK(json.find("\"tool_version\"") < json.find("\"max_degree\""));
    CHECK(json.find("\"max_degree\"") < json.find("\"rows\""));
    CHECK(rep.to_csv() == "degree,dim\n1,2\n2,1\n3,2\n");

    Json parsed = Json::parse(json);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(parsed["rows"][i]["degree"] == rep.rows[i].degree);
        CHECK(parsed["rows"][i]["dim"] == rep.rows[i].dim);
    }
}

TEST_CASE("csv includes partial sums when present") {
    Report rep;
    rep.max_degree = 2;
    rep.algebra = "L";
    rep.rows = {{1, 0, 0, {}}, {2, 1, 1, {}}};
    CHECK(rep.to_csv() == "degree,dim,partial_sum\n1,0,0\n2,1,1\n");
}

TEST_CASE("cache round trip") {
    TempFile tmp("fiblie_cache_test.json");
    CacheFile cache = build_cache(AlgebraId::full(), 10);
    write_cache(cache, tmp.path.string());
    CacheFile loaded = read_cache(tmp.path.string());
    CHECK(loaded.format_version == kCacheFormatVersion);
    CHECK(loaded.entries == cache.entries);
}

TEST_CASE("cache rejects bad content") {
    TempFile tmp("fiblie_cache_bad.json");

    auto write_text = [&](const std::string& text) {
        std::ofstream out(tmp.path);
        out << text;
    };

    write_text("not json");
    CHECK_THROWS_AS(read_cache(tmp.path.string()), CorruptCache);

    write_text(R"({"format_version": 99, "entries": {}})");
    CHECK_THROWS_AS(read_cache(tmp.path.string()), CorruptCache);

    write_text(R"({"format_version": 1, "entries": {"L:1": ["t2.v5"]}})");
    CHECK_THROWS_AS(read_cache(tmp.path.string()), CorruptCache);

    write_text(R"({"format_version": 1, "entries": {"X:1": ["v1"]}})");
    CHECK_THROWS_AS(read_cache(tmp.path.string()), CorruptCache);

    CHECK_THROWS_AS(read_cache("/nonexistent/fiblie.json"), CorruptCache);
}
