#ifndef COVERDEPTH_RUNTIME_HPP
#define COVERDEPTH_RUNTIME_HPP

#include <filesystem>

namespace coverdepth
{

inline constexpr const char* kThreadsEnv = "COVERDEPTH_THREADS";
inline constexpr const char* kCacheDirEnv = "COVERDEPTH_CACHE_DIR";

/// `requested` if positive, else COVERDEPTH_THREADS, else the hardware count.
int resolve_thread_count(int requested = 0);

/// COVERDEPTH_CACHE_DIR, else ".coverdepth-cache" under the working directory.
std::filesystem::path default_cache_dir();

} // namespace coverdepth

#endif // COVERDEPTH_RUNTIME_HPP
