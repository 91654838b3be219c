#include "coverdepth/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace coverdepth
{

int resolve_thread_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv(kThreadsEnv))
    {
        try
        {
            int n = std::stoi(env);
            if (n > 0)
                return n;
        }
        catch (const std::exception&)
        {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv(kCacheDirEnv); env && *env)
        return env;
    return ".coverdepth-cache";
}

} // namespace coverdepth
