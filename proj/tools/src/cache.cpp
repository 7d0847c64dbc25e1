#include "eisprod_cli/cache.hpp"

#include "eisprod/error.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace eisprod::cli {

namespace {

std::atomic<std::size_t> g_compute_count{0};

} // namespace

std::size_t cache_compute_count()
{
    return g_compute_count.load();
}

ResultCache::ResultCache(std::string dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {}

std::string ResultCache::path_for(const Json& key) const
{
    return dir_ + "/" + fnv1a_hex(key.dump()) + ".json";
}

Json ResultCache::get_or_compute(const Json& key, const std::function<Json()>& compute)
{
    if (!enabled()) {
        ++g_compute_count;
        return compute();
    }
    const std::string path = path_for(key);
    const std::string key_text = key.dump();
    std::ifstream in(path);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        bool usable = false;
        try {
            const Json entry = Json::parse(buf.str());
            if (entry.is_object() && entry.value("schema", -1) == kSchemaVersion && entry.contains("key") &&
                entry.at("key").dump() == key_text && entry.contains("value"))
                return entry.at("value");
            usable = entry.is_object() && entry.contains("schema");
        } catch (const Json::exception&) {
        }
        if (!usable && warnings_)
            *warnings_ << "warning: corrupt cache entry " << path << " will be recomputed\n";
    }
    ++g_compute_count;
    Json value = compute();
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        fail(ErrorKind::internal, "cannot create cache directory " + dir_);
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out)
            fail(ErrorKind::internal, "cannot write cache entry " + tmp);
        out << Json{{"schema", kSchemaVersion}, {"key", key}, {"value", value}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        fail(ErrorKind::internal, "cannot move cache entry into place: " + path);
    return value;
}

} // namespace eisprod::cli
