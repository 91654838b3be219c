#include "catch_amalgamated.hpp"

#include "coverdepth/analyzer.hpp"
#include "coverdepth/batch.hpp"
#include "coverdepth/corpus.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/verification.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace coverdepth;
namespace fs = std::filesystem;

namespace
{

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("coverdepth-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> read_lines(const fs::path& p)
{
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

void check_no_failures(const AnalysisReport& rep)
{
    for (const auto& c : rep.checks)
    {
        INFO(c.name << ": " << c.detail);
        CHECK(c.status != CheckStatus::Fail);
    }
}

} // namespace

TEST_CASE("analyze known graphs")
{
    const auto c5 = analyze(cycle_graph(5));
    CHECK(c5.sdstab == 1);
    CHECK(c5.sdstab_method == "closed-form");
    CHECK(c5.reg == 3);
    CHECK(c5.depth.has_value());
    CHECK(c5.bound >= 1);
    check_no_failures(c5);

    const auto fam2 = analyze(family_graph(2));
    CHECK(fam2.sdstab == 4);
    CHECK(fam2.perfect_ordered);
    CHECK(fam2.verdict == "attained");
    check_no_failures(fam2);

    const auto p7 = analyze(path_graph(7));
    CHECK(p7.sdstab == 2);
    CHECK(p7.forest);
    CHECK(p7.nu_equals_nu0);
    CHECK(p7.check("equality-forest")->status == CheckStatus::Pass);
    check_no_failures(p7);
}

TEST_CASE("combinatorial mode skips algebra")
{
    AnalysisOptions opts;
    opts.mode = AnalysisMode::Combinatorial;
    const auto rep = analyze(fig2_graph(), opts);
    CHECK_FALSE(rep.reg.has_value());
    CHECK_FALSE(rep.depth.has_value());
    CHECK(rep.ell == 3);
    CHECK(rep.bound == 2);
    check_no_failures(rep);
    CHECK_THROWS_AS(analyze(Graph(2, {}, Edgeless::Allow)), InputError);
    CHECK_THROWS_AS(parse_analysis_mode("fast"), InputError);
}

TEST_CASE("analysis is deterministic and cacheable")
{
    const fs::path dir = scratch_dir("cache");
    const ResultCache cache(dir);
    AnalysisOptions opts;
    opts.mode = AnalysisMode::Oracle;
    const std::string plain = analysis_json(analyze(fig3_graph(), opts)).dump();
    CHECK(analysis_json(analyze(fig3_graph(), opts)).dump() == plain);
    opts.cache = &cache;
    const std::string first = analysis_json(analyze(fig3_graph(), opts)).dump();
    CHECK(!fs::is_empty(dir));
    const std::string second = analysis_json(analyze(fig3_graph(), opts)).dump();
    CHECK(first == plain);
    CHECK(second == plain);
    fs::remove_all(dir);
}

TEST_CASE("cache keys")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    const CacheKey k{"4:1-2,3-4", 3, "Q", "depth_profile"};
    CHECK(k.digest().size() == 16);
    CHECK(k.digest() == CacheKey{"4:1-2,3-4", 3, "Q", "depth_profile"}.digest());
    CHECK(k.digest() != CacheKey{"4:1-2,3-4", 3, "GF(2)", "depth_profile"}.digest());

    const fs::path dir = scratch_dir("keys");
    const ResultCache cache(dir);
    CHECK_FALSE(cache.load(k).has_value());
    cache.store(k, Json{{"x", 1}});
    CHECK(cache.load(k) == Json{{"x", 1}});
    fs::remove_all(dir);
}

TEST_CASE("batch family specs")
{
    CHECK(expand_family(parse_family_spec("paths 2..8")).size() == 7);
    CHECK(expand_family(parse_family_spec("cycles 3..8")).size() == 6);
    CHECK(expand_family(parse_family_spec("builtin FIG1,FIG3")).size() == 2);
    for (const char* bad : {"", "paths", "paths 8..2", "tori 1..2", "forests count=x", "builtin NOPE"})
    {
        INFO(bad);
        CHECK_THROWS_AS(expand_family(parse_family_spec(bad)), InputError);
    }

    const auto a = expand_family(parse_family_spec("forests seed=1 count=50 maxr=9"));
    const auto b = expand_family(parse_family_spec("forests seed=1 count=50 maxr=9"));
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        CHECK(a[i].graph == b[i].graph);
        CHECK(is_forest(a[i].graph));
        CHECK(a[i].graph.order() <= 9);
    }
    CHECK(seeded_random_forest(1, 7, 2, 9) == a[7].graph);
}

TEST_CASE("batch runs write one line per instance")
{
    const fs::path dir = scratch_dir("batch");
    BatchOptions opts;
    opts.threads = 2;
    CHECK(run_batch(parse_family_spec("paths 2..8"), dir / "p.jsonl", opts) == 7);
    const auto lines = read_lines(dir / "p.jsonl");
    REQUIRE(lines.size() == 7);
    for (std::size_t i = 0; i < lines.size(); ++i)
    {
        const Json j = Json::parse(lines[i]);
        CHECK(j.at("graph") == "P" + std::to_string(i + 2));
        CHECK_FALSE(j.contains("error"));
    }

    const auto spec = parse_family_spec("forests seed=1 count=12 maxr=7");
    run_batch(spec, dir / "f1.jsonl", opts);
    opts.threads = 1;
    run_batch(spec, dir / "f2.jsonl", opts);
    CHECK(read_lines(dir / "f1.jsonl") == read_lines(dir / "f2.jsonl"));

    CHECK_THROWS_AS(run_batch(spec, dir / "missing" / "deeper" / "x.jsonl", opts), InputError);
    fs::remove_all(dir);
}

TEST_CASE("figure self-checks flag a corrupted graph")
{
    CHECK(check_fig1(fig1_graph()).passed);
    const Graph fig1 = fig1_graph();
    std::vector<Edge> edges(fig1.edges().begin(), fig1.edges().end());
    edges.pop_back();
    const auto broken = check_fig1(Graph(fig1.order(), edges));
    CHECK_FALSE(broken.passed);
    bool has_diff = false;
    for (const auto& d : broken.details)
        has_diff = has_diff || (d.find("MISMATCH") != std::string::npos && d.find("expected") != std::string::npos);
    CHECK(has_diff);
}

TEST_CASE("JSON formats")
{
    CHECK(complex_json(SimplicialComplex::void_complex(3)).at("facets") == Json::array());
    CHECK(complex_json(SimplicialComplex::irrelevant(3)).at("facets") == Json::parse("[[]]"));
    const auto d = SimplicialComplex::from_facets(4, std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(complex_from_json(complex_json(d)) == d);
    CHECK(complex_from_json(Json::parse(R"({"m": 2, "facets": []})")).is_void());

    const auto om = *has_perfect_ordered_matching(fig3_graph());
    CHECK(ordered_matching_from_json(ordered_matching_json(om)) == om);
    const Json prof = profile_json(alt_path_profile(fig3_graph(), om, true));
    for (const char* key : {"pairs", "A", "B", "ell_v", "ell0", "ell1", "ell_formula", "ell_walk"})
        CHECK(prof.contains(key));

    const auto report = depth_profile(cycle_graph(7));
    const Json j = depth_report_json(report);
    for (const char* key : {"graph", "field", "nu0", "limit_depth", "profile", "sdstab", "method", "witnesses"})
        CHECK(j.contains(key));
    const auto back = depth_report_from_json(j);
    CHECK(back.profile == report.profile);
    CHECK(back.sdstab == report.sdstab);
    CHECK(back.field == report.field);
    CHECK(depth_report_json(back) == j);
}
