#include "coverdepth/batch.hpp"

#include "coverdepth/corpus.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/runtime.hpp"

#include <atomic>
#include <charconv>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace coverdepth
{

namespace
{

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "' in family spec");
    return value;
}

std::pair<int, int> parse_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos)
    {
        int v = parse_int(text, "range");
        return {v, v};
    }
    int a = parse_int(text.substr(0, dots), "range start");
    int b = parse_int(text.substr(dots + 2), "range end");
    if (a > b)
        throw InputError("empty range '" + std::string(text) + "' in family spec");
    return {a, b};
}

std::mt19937_64 instance_rng(std::uint64_t seed, int index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

} // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string head;
    if (!(in >> head))
        throw InputError("empty family spec");
    FamilySpec spec;
    std::vector<std::string> rest;
    for (std::string w; in >> w;)
        rest.push_back(w);

    if (head == "paths" || head == "cycles" || head == "fam")
    {
        spec.kind = head == "paths" ? FamilySpec::Kind::Paths
                    : head == "cycles" ? FamilySpec::Kind::Cycles
                                       : FamilySpec::Kind::Family;
        if (rest.size() != 1)
            throw InputError("family '" + head + "' expects one range a..b");
        std::tie(spec.low, spec.high) = parse_range(rest[0]);
        const int minimum = head == "paths" ? 2 : head == "cycles" ? 3 : 1;
        if (spec.low < minimum)
            throw InputError("family '" + head + "' starts at " + std::to_string(minimum));
        return spec;
    }
    if (head == "builtin")
    {
        spec.kind = FamilySpec::Kind::Builtin;
        for (const auto& word : rest)
        {
            std::string name;
            for (char c : word + ",")
            {
                if (c != ',')
                    name.push_back(c);
                else if (!name.empty())
                {
                    builtin_graph(name); // validates
                    spec.names.push_back(name);
                    name.clear();
                }
            }
        }
        if (spec.names.empty())
            throw InputError("family 'builtin' needs at least one name");
        return spec;
    }
    if (head != "forests" && head != "random")
        throw InputError("unknown family '" + head + "'");
    spec.kind = head == "forests" ? FamilySpec::Kind::Forests : FamilySpec::Kind::Random;
    for (const auto& word : rest)
    {
        const auto eq = word.find('=');
        if (eq == std::string::npos)
            throw InputError("expected key=value in family spec, got '" + word + "'");
        const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
        if (key == "seed")
            spec.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
        else if (key == "count")
            spec.count = parse_int(value, "count");
        else if (key == "maxr")
            spec.max_r = parse_int(value, "maxr");
        else if (key == "minr")
            spec.min_r = parse_int(value, "minr");
        else if (key == "p" && spec.kind == FamilySpec::Kind::Random)
        {
            try
            {
                std::size_t used = 0;
                spec.p = std::stod(value, &used);
                if (used != value.size())
                    throw std::invalid_argument(value);
            }
            catch (const std::exception&)
            {
                throw InputError("malformed probability '" + value + "'");
            }
            if (!(spec.p > 0 && spec.p <= 1))
                throw InputError("edge probability must lie in (0, 1]");
        }
        else
            throw InputError("unknown key '" + key + "' for family '" + head + "'");
    }
    if (spec.count < 0 || spec.min_r < 2 || spec.max_r < spec.min_r || spec.max_r > kMaxVertices)
        throw InputError("family '" + head + "' needs count >= 0 and 2 <= minr <= maxr");
    return spec;
}

Graph seeded_random_forest(std::uint64_t seed, int index, int min_r, int max_r)
{
    auto rng = instance_rng(seed, index);
    const int r = std::uniform_int_distribution<int>(min_r, max_r)(rng);
    return random_forest(r, rng);
}

Graph seeded_random_graph(std::uint64_t seed, int index, int min_r, int max_r, double p)
{
    auto rng = instance_rng(seed, index);
    const int r = std::uniform_int_distribution<int>(min_r, max_r)(rng);
    return random_graph(r, p, rng);
}

std::vector<BatchInstance> expand_family(const FamilySpec& spec)
{
    std::vector<BatchInstance> out;
    switch (spec.kind)
    {
    case FamilySpec::Kind::Paths:
        for (int r = spec.low; r <= spec.high; ++r)
            out.push_back({"P" + std::to_string(r), path_graph(r), std::nullopt, r});
        break;
    case FamilySpec::Kind::Cycles:
        for (int r = spec.low; r <= spec.high; ++r)
            out.push_back({"C" + std::to_string(r), cycle_graph(r), std::nullopt, r});
        break;
    case FamilySpec::Kind::Family:
        for (int s = spec.low; s <= spec.high; ++s)
            out.push_back({"FAM(" + std::to_string(s) + ")", family_graph(s), std::nullopt, s});
        break;
    case FamilySpec::Kind::Builtin:
        for (std::size_t i = 0; i < spec.names.size(); ++i)
            out.push_back({spec.names[i], builtin_graph(spec.names[i]), std::nullopt, static_cast<int>(i)});
        break;
    case FamilySpec::Kind::Forests:
        for (int i = 0; i < spec.count; ++i)
            out.push_back({"forest-" + std::to_string(spec.seed) + "-" + std::to_string(i),
                           seeded_random_forest(spec.seed, i, spec.min_r, spec.max_r), spec.seed, i});
        break;
    case FamilySpec::Kind::Random:
        for (int i = 0; i < spec.count; ++i)
            out.push_back({"random-" + std::to_string(spec.seed) + "-" + std::to_string(i),
                           seeded_random_graph(spec.seed, i, spec.min_r, spec.max_r, spec.p), spec.seed, i});
        break;
    }
    return out;
}

std::size_t run_batch(const FamilySpec& spec, const std::filesystem::path& out, const BatchOptions& options)
{
    const auto instances = expand_family(spec);
    std::ofstream file(out);
    if (!file)
        throw InputError("cannot write batch output " + out.string());

    std::vector<std::optional<std::string>> lines(instances.size());
    std::mutex lock;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto run_one = [&](const BatchInstance& inst) -> Json {
        AnalysisOptions opts = options.analysis;
        opts.graph_id = inst.id;
        opts.seed = inst.seed;
        opts.cache = options.cache;
        const CacheKey key{canonical_key(inst.graph), 0, opts.oracle.field.name(),
                           "analyze:" + to_string(opts.mode) + ":" + inst.id};
        if (options.cache)
            if (auto hit = options.cache->load(key))
                return *hit;
        Json line;
        try
        {
            line = analysis_json(analyze(inst.graph, opts));
        }
        catch (const InputError& e)
        {
            line = {{"graph", inst.id}, {"canonical", canonical_key(inst.graph)}, {"error", e.what()}};
        }
        catch (const BudgetExceeded& e)
        {
            line = {{"graph", inst.id},
                    {"canonical", canonical_key(inst.graph)},
                    {"error", e.what()},
                    {"estimate", e.estimate()}};
        }
        catch (const std::exception& e)
        {
            line = {{"graph", inst.id}, {"canonical", canonical_key(inst.graph)}, {"internal_error", e.what()}};
        }
        if (inst.seed)
        {
            line["seed"] = *inst.seed;
            line["index"] = inst.index;
        }
        if (options.cache && !line.contains("error") && !line.contains("internal_error"))
            options.cache->store(key, line);
        return line;
    };

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
        {
            std::string text = run_one(instances[i]).dump();
            std::lock_guard guard(lock);
            lines[i] = std::move(text);
            ready.notify_all();
        }
    };

    const int threads = std::max(1, std::min<int>(resolve_thread_count(options.threads),
                                                  static_cast<int>(std::max<std::size_t>(1, instances.size()))));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    // Single writer, instance order.
    for (std::size_t i = 0; i < instances.size(); ++i)
    {
        std::unique_lock guard(lock);
        ready.wait(guard, [&] { return lines[i].has_value(); });
        file << *lines[i] << '\n';
        lines[i].reset();
    }
    for (auto& t : pool)
        t.join();
    if (!file)
        throw InputError("error while writing " + out.string());
    return instances.size();
}

} // namespace coverdepth
