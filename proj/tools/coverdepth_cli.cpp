#include "coverdepth/analyzer.hpp"
#include "coverdepth/batch.hpp"
#include "coverdepth/cache.hpp"
#include "coverdepth/corpus.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/runtime.hpp"
#include "coverdepth/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace coverdepth;

namespace
{

enum Exit : int
{
    Ok = 0,
    VerificationFailure = 1,
    InputFailure = 2,
    BudgetRefusal = 3
};

Graph load_graph(const std::string& spec, std::string& id)
{
    if (spec.rfind("builtin:", 0) == 0)
    {
        id = spec.substr(8);
        return builtin_graph(id);
    }
    std::ifstream in(spec);
    if (!in)
        throw InputError("cannot read graph file " + spec);
    std::ostringstream text;
    text << in.rdbuf();
    id = spec;
    return parse_graph(text.str());
}

void write_json(const Json& j, const std::string& path)
{
    if (path.empty() || path == "-")
    {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symbolic depth profiles of graph cover ideals"};
    app.require_subcommand(1);

    std::string graph_spec, field_text = "q", mode_text = "auto", out_path;
    double budget = OracleOptions{}.budget;
    int threads = 0;
    bool long_running = false, no_cache = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph");
    analyze_cmd->add_option("--graph", graph_spec, "Graph file or builtin:NAME")->required();
    analyze_cmd->add_option("--field", field_text, "q or gf:<p>");
    analyze_cmd->add_option("--mode", mode_text, "auto|oracle|certificate|combinatorial");
    analyze_cmd->add_option("--budget", budget, "Oracle cost budget");
    analyze_cmd->add_option("--out", out_path, "Write the JSON report here (default stdout)");
    analyze_cmd->add_option("--threads", threads, "Worker threads");
    analyze_cmd->add_flag("--long-running", long_running, "Allow algebra on graphs with 13+ vertices");
    analyze_cmd->add_flag("--no-cache", no_cache, "Bypass the result cache");

    std::string level_text = "quick";
    int only = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
    verify_cmd->add_option("--level", level_text, "quick|full");
    verify_cmd->add_option("--criterion", only, "Run a single criterion (1-14)");

    std::string family_text, batch_out;
    std::optional<std::uint64_t> seed;
    auto* batch_cmd = app.add_subcommand("batch", "Analyze a generated family into JSON lines");
    batch_cmd->add_option("--family", family_text, "Family spec, e.g. \"paths 2..8\"")->required();
    batch_cmd->add_option("--out", batch_out, "Output .jsonl path")->required();
    batch_cmd->add_option("--seed", seed, "Override the family seed");
    batch_cmd->add_option("--threads", threads, "Worker threads");
    batch_cmd->add_option("--field", field_text, "q or gf:<p>");
    batch_cmd->add_option("--mode", mode_text, "auto|oracle|certificate|combinatorial");
    batch_cmd->add_option("--budget", budget, "Oracle cost budget");
    batch_cmd->add_flag("--no-cache", no_cache, "Bypass the result cache");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? Ok : InputFailure;
    }

    try
    {
        std::optional<ResultCache> cache;
        if (!no_cache)
            cache.emplace(default_cache_dir());
        AnalysisOptions options;
        options.mode = parse_analysis_mode(mode_text);
        options.oracle.field = FieldSpec::parse(field_text);
        options.oracle.budget = budget;
        options.oracle.threads = threads;
        options.long_running = long_running;
        options.cache = cache ? &*cache : nullptr;

        if (*analyze_cmd)
        {
            std::string id;
            const Graph g = load_graph(graph_spec, id);
            options.graph_id = id;
            const auto report = analyze(g, options);
            write_json(analysis_json(report), out_path);
            return report.failed() ? VerificationFailure : Ok;
        }
        if (*verify_cmd)
        {
            const auto level = parse_verify_level(level_text);
            bool ok = true;
            auto print = [&](const CriterionResult& r) {
                std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  "
                          << r.title << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
                for (const auto& d : r.details)
                    std::cout << "      " << d << '\n';
                ok = ok && r.passed;
            };
            if (only)
                print(run_criterion(only, level));
            else
                run_all_criteria(level, {}, print);
            return ok ? Ok : VerificationFailure;
        }
        if (*batch_cmd)
        {
            auto spec = parse_family_spec(family_text);
            if (seed)
                spec.seed = *seed;
            BatchOptions bopts;
            bopts.analysis = options;
            bopts.threads = threads;
            bopts.cache = options.cache;
            const auto n = run_batch(spec, batch_out, bopts);
            std::cerr << n << " reports written to " << batch_out << '\n';
            return Ok;
        }
    }
    catch (const BudgetExceeded& e)
    {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return BudgetRefusal;
    }
    catch (const InputError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return InputFailure;
    }
    return Ok;
}
