#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "helpers.hpp"
#include "higgs/cache.hpp"
#include "higgs/json_io.hpp"
#include "higgs/mozgovoy.hpp"

using namespace higgs;
using namespace higgs::test;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag) {
    fs::path d = fs::temp_directory_path() /
                 (std::string("higgs-test-") + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HIGGS_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = ::pclose(p);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("polynomial json round trip") {
    VarSet vs = VarSet::standard(2);
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        LaurentPoly p = random_poly(vs, rng, 6, 3);
        nlohmann::json j = poly_to_json(p);
        CHECK(poly_from_json(j, vs) == p);
        // canonical: dumping twice gives identical bytes
        CHECK(j.dump() == poly_to_json(poly_from_json(j, vs)).dump());
    }
}

TEST_CASE("rational function json round trip") {
    VarSet vs = VarSet::standard(1);
    std::mt19937 rng(13);
    for (int i = 0; i < 15; ++i) {
        FactoredRat r(random_nonzero_poly(vs, rng));
        for (int k = 0; k < 2; ++k) {
            LaurentPoly d = random_nonzero_poly(vs, rng, 3, 1);
            if (!d.is_monomial()) r.push_den(d);
        }
        nlohmann::json j = rf_to_json(r);
        FactoredRat back = rf_from_json(j, vs);
        CHECK(rf_equal(back, r));
        CHECK(rf_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("series json round trip") {
    HiggsContext ctx(1, 3);
    TSeries h = h_series(ctx);
    nlohmann::json j = series_to_json(h);
    TSeries back = series_from_json(j, ctx.vs);
    CHECK(back.equals(h));
    CHECK(series_to_json(back).dump() == j.dump());
}

TEST_CASE("cache round trip and version invalidation") {
    fs::path d = fresh_dir("cache");
    SeriesCache cache(d);
    HiggsContext ctx(1, 3);
    TSeries h = h_series(ctx);
    CacheKey key{"mozgovoy", 1, 3};

    CHECK(!cache.get(key, ctx.vs).has_value());
    cache.put(key, h);
    auto got = cache.get(key, ctx.vs);
    REQUIRE(got.has_value());
    CHECK(got->equals(h));
    CHECK(series_to_json(*got).dump() == series_to_json(h).dump());

    CacheKey bumped = key;
    bumped.version = "higgs-9.9.9";
    CHECK(!cache.get(bumped, ctx.vs).has_value());
    fs::remove_all(d);
}

TEST_CASE("corrupt cache entry is ignored") {
    fs::path d = fresh_dir("corrupt");
    SeriesCache cache(d);
    CacheKey key{"mozgovoy", 0, 2};
    {
        std::ofstream f(d / key.filename());
        f << "{ not json";
    }
    VarSet vs = VarSet::standard(0);
    CHECK(!cache.get(key, vs).has_value());
    fs::remove_all(d);
}

TEST_CASE("cache directory resolution") {
    fs::path d = fresh_dir("resolve");
    CHECK(SeriesCache::resolve_dir(d.string()) == d);

    ::setenv("HIGGS_CACHE_DIR", d.string().c_str(), 1);
    CHECK(SeriesCache::resolve_dir("") == d);
    ::unsetenv("HIGGS_CACHE_DIR");
    CHECK(SeriesCache::resolve_dir(d.string()) == d);
    fs::remove_all(d);
}

TEST_CASE("cli compute smoke") {
    fs::path d = fresh_dir("cli");
    std::string cachearg = " --cache-dir " + d.string();
    RunResult r = run_cli("compute -g 1 -r 1 --specialize poincare" + cachearg);
    CHECK(r.exit_code == 0);
    // s^2 (1-s)^2 = s^2 - 2 s^3 + s^4
    CHECK(r.out.find("s^2") != std::string::npos);
    CHECK(r.out.find("-2 * s^3") != std::string::npos);
    CHECK(r.out.find("s^4") != std::string::npos);

    // second run hits the cache and prints the same result
    RunResult r2 = run_cli("compute -g 1 -r 1 --specialize poincare" + cachearg);
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == r.out);
    fs::remove_all(d);
}

TEST_CASE("cli rejects bad flags") {
    CHECK(run_cli("compute --no-such-flag").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("compute -g -3 -r 1").exit_code == 1);
}

TEST_CASE("cli verify smoke") {
    RunResult r = run_cli("verify --suite identities --max-size 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("passed") != std::string::npos);
}
