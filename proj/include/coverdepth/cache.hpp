#ifndef COVERDEPTH_CACHE_HPP
#define COVERDEPTH_CACHE_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace coverdepth
{

/// Key of one cached computation: (canonical graph, n, field, operation).
struct CacheKey
{
    std::string graph;
    int n = 0;
    std::string field;
    std::string operation;

    std::string text() const;
    /// 64-bit FNV-1a of text(), as 16 hex digits.
    std::string digest() const;
};

/// Content-addressed store of JSON blobs, one file per key. Writes go through a
/// temporary file and a rename, so concurrent writers of the same value are safe.
class ResultCache
{
public:
    explicit ResultCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return directory_; }
    /// Empty on a miss, on an unreadable blob, or when the stored key differs.
    std::optional<nlohmann::json> load(const CacheKey& key) const;
    void store(const CacheKey& key, const nlohmann::json& value) const;

private:
    std::filesystem::path path_for(const CacheKey& key) const;
    std::filesystem::path directory_;
};

std::uint64_t fnv1a64(std::string_view text);

} // namespace coverdepth

#endif // COVERDEPTH_CACHE_HPP
