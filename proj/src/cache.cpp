#include "coverdepth/cache.hpp"

#include "coverdepth/errors.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace coverdepth
{

std::uint64_t fnv1a64(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string CacheKey::text() const
{
    return "graph=" + graph + "|n=" + std::to_string(n) + "|field=" + field + "|op=" + operation;
}

std::string CacheKey::digest() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text())));
    return buf;
}

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory))
{
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    if (ec)
        throw InputError("cannot create cache directory " + directory_.string() + ": " + ec.message());
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const { return directory_ / (key.digest() + ".json"); }

std::optional<nlohmann::json> ResultCache::load(const CacheKey& key) const
{
    std::ifstream in(path_for(key));
    if (!in)
        return std::nullopt;
    try
    {
        auto blob = nlohmann::json::parse(in);
        if (blob.value("key", std::string{}) != key.text())
            return std::nullopt;
        return blob.at("value");
    }
    catch (const nlohmann::json::exception&)
    {
        return std::nullopt;
    }
}

void ResultCache::store(const CacheKey& key, const nlohmann::json& value) const
{
    static std::atomic<unsigned> counter{0};
    const auto target = path_for(key);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
    const auto temp = target.string() + suffix.str();
    {
        std::ofstream out(temp);
        if (!out)
            return;
        out << nlohmann::json{{"key", key.text()}, {"value", value}}.dump();
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec)
        std::filesystem::remove(temp, ec);
}

} // namespace coverdepth
