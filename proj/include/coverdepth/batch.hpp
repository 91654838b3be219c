#ifndef COVERDEPTH_BATCH_HPP
#define COVERDEPTH_BATCH_HPP

#include "coverdepth/analyzer.hpp"
#include "coverdepth/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace coverdepth
{

/// A parsed family spec. Accepted forms:
///   paths a..b | cycles a..b | fam a..b | builtin NAME[,NAME...]
///   forests [seed=k] [count=c] [maxr=r] [minr=r]
///   random  [seed=k] [count=c] [maxr=r] [minr=r] [p=x]
struct FamilySpec
{
    enum class Kind
    {
        Paths,
        Cycles,
        Family,
        Builtin,
        Forests,
        Random
    };

    Kind kind = Kind::Paths;
    int low = 0;
    int high = 0;
    std::vector<std::string> names;
    std::uint64_t seed = 1;
    int count = 10;
    int min_r = 2;
    int max_r = 8;
    double p = 0.4;
};

FamilySpec parse_family_spec(std::string_view text);

struct BatchInstance
{
    std::string id;
    Graph graph;
    std::optional<std::uint64_t> seed; ///< family seed for generated instances
    int index = 0;
};

/// Instances in a fixed order. Generated families draw instance i from a
/// generator seeded with (seed, i), so any single instance is reproducible.
std::vector<BatchInstance> expand_family(const FamilySpec& spec);

/// Seeded draws used by the batch runner and the acceptance sweeps.
Graph seeded_random_forest(std::uint64_t seed, int index, int min_r, int max_r);
Graph seeded_random_graph(std::uint64_t seed, int index, int min_r, int max_r, double p);

struct BatchOptions
{
    AnalysisOptions analysis;
    int threads = 0;
    /// Whole reports are cached here too, making reruns resumable.
    const ResultCache* cache = nullptr;
};

/// One JSON line per instance, written in instance order. Instances that fail
/// with an input or budget error produce a line with an "error" field.
/// Throws InputError if the output cannot be written.
std::size_t run_batch(const FamilySpec& spec, const std::filesystem::path& out, const BatchOptions& options);

} // namespace coverdepth

#endif // COVERDEPTH_BATCH_HPP
