// Content-addressed on-disk cache of JSON results.
#pragma once

#include "eisprod/serialize.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace eisprod::cli {

class ResultCache {
public:
    // An empty directory disables caching.
    explicit ResultCache(std::string dir, std::ostream* warnings = nullptr);

    bool enabled() const { return !dir_.empty(); }

    // Entry file for a key: <dir>/<fnv1a of the canonical key>.json.
    std::string path_for(const Json& key) const;

    // Returns the cached value for key, or computes, stores and returns it. Entries with a
    // different schema or key, or that fail to parse, are recomputed and overwritten.
    Json get_or_compute(const Json& key, const std::function<Json()>& compute);

private:
    std::string dir_;
    std::ostream* warnings_;
};

// Number of computations run through get_or_compute (hits excluded) in this process.
std::size_t cache_compute_count();

} // namespace eisprod::cli
