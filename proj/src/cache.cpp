#include "higgs/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "higgs/json_io.hpp"

namespace higgs {

namespace fs = std::filesystem;
using nlohmann::json;

std::string CacheKey::filename() const {
    return pipeline + "-g" + std::to_string(genus) + "-R" + std::to_string(order) +
           "-" + version + ".json";
}

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

fs::path SeriesCache::resolve_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("HIGGS_CACHE_DIR"); env && *env) return env;
    if (!flag_value.empty()) return flag_value;
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "higgs";
    return fs::temp_directory_path() / "higgs-cache";
}

std::optional<TSeries> SeriesCache::get(const CacheKey& key, const VarSet& vs) const {
    fs::path file = dir_ / key.filename();
    if (!fs::exists(file)) return std::nullopt;
    try {
        std::ifstream in(file);
        json j = json::parse(in);
        if (j.at("version").get<std::string>() != key.version ||
            j.at("pipeline").get<std::string>() != key.pipeline ||
            j.at("g").get<int>() != key.genus ||
            j.at("varset").get<std::vector<std::string>>() != vs.names())
            throw Error("cache header mismatch");
        return series_from_json(j.at("series"), vs);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache entry " << file << ": "
                  << e.what() << '\n';
        return std::nullopt;
    }
}

void SeriesCache::put(const CacheKey& key, const TSeries& series) const {
    json j = {{"version", key.version},
              {"pipeline", key.pipeline},
              {"g", key.genus},
              {"R", key.order},
              {"varset", varset_to_json(series.varset())},
              {"series", series_to_json(series)}};
    // write to a temp name, then rename: concurrent writers race benignly
    fs::path file = dir_ / key.filename();
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    fs::rename(tmp, file);
}

}  // namespace higgs
