#ifndef HIGGS_CACHE_HPP
#define HIGGS_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "higgs/series.hpp"

namespace higgs {

inline constexpr const char* kEngineVersion = "higgs-0.1.0";

struct CacheKey {
    std::string pipeline;  // "mozgovoy" | "schiffmann"
    int genus = 0;
    int order = 0;
    std::string version = kEngineVersion;

    std::string filename() const;
};

// On-disk series cache: one JSON file per key. Corrupt or mismatched
// entries are ignored (with a warning on stderr) and recomputed by the
// caller.
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir);

    // Resolution order: explicit dir, HIGGS_CACHE_DIR, per-user default.
    static std::filesystem::path resolve_dir(const std::string& flag_value);

    std::optional<TSeries> get(const CacheKey& key, const VarSet& vs) const;
    void put(const CacheKey& key, const TSeries& series) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace higgs

#endif
