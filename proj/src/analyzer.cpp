#include "coverdepth/analyzer.hpp"

#include "coverdepth/errors.hpp"
#include "coverdepth/matching.hpp"

#include <algorithm>
#include <cctype>

namespace coverdepth
{

AnalysisMode parse_analysis_mode(std::string_view text)
{
    std::string t;
    for (char c : text)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "auto")
        return AnalysisMode::Auto;
    if (t == "oracle")
        return AnalysisMode::Oracle;
    if (t == "certificate")
        return AnalysisMode::Certificate;
    if (t == "combinatorial")
        return AnalysisMode::Combinatorial;
    throw InputError("unknown mode '" + std::string(text) + "' (expected auto, oracle, certificate, combinatorial)");
}

std::string to_string(AnalysisMode mode)
{
    switch (mode)
    {
    case AnalysisMode::Auto:
        return "auto";
    case AnalysisMode::Oracle:
        return "oracle";
    case AnalysisMode::Certificate:
        return "certificate";
    case AnalysisMode::Combinatorial:
        return "combinatorial";
    }
    return "auto";
}

std::string to_string(CheckStatus s)
{
    switch (s)
    {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::NotApplicable:
        return "n/a";
    case CheckStatus::NotComputed:
        return "not computed";
    }
    return "not computed";
}

bool AnalysisReport::failed() const
{
    return std::any_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.status == CheckStatus::Fail; });
}

const TheoremCheck* AnalysisReport::check(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace
{

class Checks
{
public:
    explicit Checks(std::vector<TheoremCheck>& out) : out_(out) {}

    void verdict(std::string name, bool ok, std::string detail)
    {
        out_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    void skip(std::string name, CheckStatus why, std::string detail = {})
    {
        out_.push_back({std::move(name), why, std::move(detail)});
    }

private:
    std::vector<TheoremCheck>& out_;
};

std::string eq(std::string_view lhs, int a, std::string_view rhs, int b)
{
    return std::string(lhs) + " = " + std::to_string(a) + ", " + std::string(rhs) + " = " + std::to_string(b);
}

DepthReport cached_profile(const Graph& g, const AnalysisOptions& options)
{
    const int nu0 = ordered_matching_number(g);
    const CacheKey key{canonical_key(g), std::max(1, 2 * nu0 - 1), options.oracle.field.name(), "depth_profile"};
    if (options.cache)
        if (auto hit = options.cache->load(key))
            return depth_report_from_json(*hit);
    auto report = depth_profile(g, options.oracle);
    if (options.cache)
        options.cache->store(key, depth_report_json(report));
    return report;
}

int cached_reg(const Graph& g, const AnalysisOptions& options)
{
    const CacheKey key{canonical_key(g), 0, options.oracle.field.name(), "reg_edge_ideal"};
    if (options.cache)
        if (auto hit = options.cache->load(key))
            return hit->get<int>();
    const int reg = reg_edge_ideal(g, options.oracle.field);
    if (options.cache)
        options.cache->store(key, reg);
    return reg;
}

} // namespace

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options)
{
    if (g.edgeless())
        throw InputError("analysis needs a graph with at least one edge");

    AnalysisReport rep;
    rep.graph_id = options.graph_id.empty() ? canonical_key(g) : options.graph_id;
    rep.canonical = canonical_key(g);
    rep.r = g.order();
    rep.m = static_cast<int>(g.size());
    rep.seed = options.seed;
    rep.field = options.oracle.field.name();
    rep.mode = to_string(options.mode);

    rep.nu = matching_number(g);
    rep.nu_induced = induced_matching_number(g);
    rep.nu0 = ordered_matching_number(g);

    const auto eg = ell_graph(g);
    rep.ell = eg.ell;
    rep.matchings_examined = eg.matchings_examined;
    rep.profile = alt_path_profile(g, eg.argmin, false);
    if (options.with_walk)
    {
        try
        {
            rep.profile->ell_walk = ell_walk(g, eg.argmin, default_walk_cutoff(eg.argmin));
        }
        catch (const WalkCutoffExceeded& e)
        {
            rep.ell_walk_note = e.what();
        }
    }
    rep.bound = (rep.ell + 1) / 2;

    rep.bipartite = is_bipartite(g);
    rep.forest = is_forest(g);
    rep.perfect_ordered = has_perfect_ordered_matching(g).has_value();
    rep.pentagon_free = !has_cycle_of_length(g, 5);
    rep.nu_equals_nu0 = rep.nu == rep.nu0;
    rep.cameron_walker = rep.nu_induced == rep.nu;

    // Algebra, subject to the mode and the size guardrails.
    const bool algebra = options.mode != AnalysisMode::Combinatorial;
    const bool large = g.order() >= 13 && !options.long_running;
    OracleOptions oracle = options.oracle;
    oracle.allow_large = oracle.allow_large || options.long_running;
    AnalysisOptions inner = options;
    inner.oracle = oracle;
    const int n_max = std::max(1, 2 * rep.nu0 - 1);

    if (algebra && !large)
        rep.reg = cached_reg(g, inner);

    if (options.mode == AnalysisMode::Oracle)
    {
        rep.depth = cached_profile(g, inner);
        rep.sdstab = rep.depth->sdstab;
        rep.sdstab_method = "oracle";
    }
    else if (options.mode == AnalysisMode::Certificate)
    {
        rep.certificate = sdstab_certificate(g);
        rep.sdstab = rep.certificate->sdstab;
        rep.sdstab_method = "certificate";
    }
    else if (options.mode == AnalysisMode::Auto)
    {
        if (auto c = closed_form_sdstab(g))
        {
            rep.sdstab = *c;
            rep.sdstab_method = "closed-form";
        }
        else if (rep.perfect_ordered)
        {
            rep.certificate = sdstab_certificate(g);
            rep.sdstab = rep.certificate->sdstab;
            rep.sdstab_method = "certificate";
        }
        const bool cheap = !large && oracle_cost_estimate(g, n_max) <= options.cross_check_budget;
        if (!rep.sdstab || cheap)
        {
            try
            {
                rep.depth = cached_profile(g, inner);
                if (!rep.sdstab)
                {
                    rep.sdstab = rep.depth->sdstab;
                    rep.sdstab_method = "oracle";
                }
            }
            catch (const BudgetExceeded&)
            {
                if (!rep.sdstab)
                    rep.sdstab_method = kNotComputedBudget;
            }
        }
    }
    if (!rep.sdstab && rep.sdstab_method.empty())
        rep.sdstab_method = algebra ? kNotComputedBudget : "not computed (combinatorial mode)";
    if (rep.depth)
        rep.depth->method = rep.sdstab_method;

    if (rep.sdstab)
        rep.verdict = *rep.sdstab == rep.bound ? "attained" : "strict";
    else
        rep.verdict = "not computed";

    // Theorem checks.
    Checks ck(rep.checks);
    ck.verdict("matching-chain", rep.nu_induced <= rep.nu0 && rep.nu0 <= rep.nu,
               "nu' = " + std::to_string(rep.nu_induced) + ", nu0 = " + std::to_string(rep.nu0) +
                   ", nu = " + std::to_string(rep.nu));
    {
        bool ok = rep.ell % 2 == 1 && rep.ell <= 4 * rep.nu0 - 3 && (!rep.bipartite || rep.ell <= 2 * rep.nu0 - 1);
        ck.verdict("ell-upper-bound", ok,
                   "ell = " + std::to_string(rep.ell) + ", nu0 = " + std::to_string(rep.nu0) +
                       (rep.bipartite ? " (bipartite)" : ""));
    }
    if (rep.forest)
        ck.verdict("forest-nu-equals-nu0", rep.nu_equals_nu0, eq("nu", rep.nu, "nu0", rep.nu0));
    else
        ck.skip("forest-nu-equals-nu0", CheckStatus::NotApplicable);
    if (rep.perfect_ordered)
        ck.verdict("unique-perfect-matching", unique_perfect_matching_check(g), "perfect ordered matching exists");
    else
        ck.skip("unique-perfect-matching", CheckStatus::NotApplicable);
    if (rep.profile && rep.profile->ell_walk)
    {
        const int w = *rep.profile->ell_walk, f = rep.profile->ell_formula;
        const bool covers = rep.profile->matching.covered() == g.vertices();
        ck.verdict("walk-vs-formula", w >= f && (!covers || w == f), eq("ell_walk", w, "ell_formula", f));
    }
    else
        ck.skip("walk-vs-formula", CheckStatus::NotComputed, rep.ell_walk_note);

    auto need_sdstab = [&](const std::string& name, bool applies, auto&& test, const std::string& detail) {
        if (!applies)
            ck.skip(name, CheckStatus::NotApplicable);
        else if (!rep.sdstab)
            ck.skip(name, CheckStatus::NotComputed);
        else
            ck.verdict(name, test(), detail);
    };
    const int sd = rep.sdstab.value_or(0);
    need_sdstab("sdstab-bound", true, [&] { return sd <= rep.bound; }, eq("sdstab", sd, "bound", rep.bound));
    need_sdstab("equality-perfect-ordered", rep.perfect_ordered, [&] { return sd == rep.bound; },
                eq("sdstab", sd, "bound", rep.bound));
    need_sdstab("equality-pentagon-free", rep.pentagon_free && rep.nu_equals_nu0, [&] { return sd == rep.bound; },
                eq("sdstab", sd, "bound", rep.bound));
    need_sdstab("equality-forest", rep.forest, [&] { return sd == rep.bound; }, eq("sdstab", sd, "bound", rep.bound));

    if (rep.reg)
    {
        ck.verdict("reg-upper-bound", *rep.reg <= rep.nu + 1, eq("reg", *rep.reg, "nu + 1", rep.nu + 1));
        if (rep.sdstab)
            ck.verdict("constant-depth", (sd == 1) == (*rep.reg == rep.nu0 + 1),
                       eq("sdstab", sd, "reg", *rep.reg) + ", nu0 + 1 = " + std::to_string(rep.nu0 + 1));
        else
            ck.skip("constant-depth", CheckStatus::NotComputed);
    }
    else
    {
        ck.skip("reg-upper-bound", CheckStatus::NotComputed);
        ck.skip("constant-depth", CheckStatus::NotComputed);
    }

    if (rep.depth)
    {
        const auto& prof = rep.depth->profile;
        if (rep.reg)
            ck.verdict("depth-reg-duality", prof.at(1) == rep.r - *rep.reg,
                       eq("depth(1)", prof.at(1), "r - reg", rep.r - *rep.reg));
        else
            ck.skip("depth-reg-duality", CheckStatus::NotComputed);
        bool monotone = true;
        int previous = prof.begin()->second;
        for (const auto& [n, d] : prof)
        {
            monotone = monotone && d <= previous;
            previous = d;
        }
        ck.verdict("profile-monotone", monotone, "profile of length " + std::to_string(prof.size()));
        ck.verdict("profile-limit", prof.rbegin()->second == rep.depth->limit_depth,
                   eq("last depth", prof.rbegin()->second, "r - nu0 - 1", rep.depth->limit_depth));
        ck.verdict("method-agreement", rep.depth->sdstab == sd,
                   eq("oracle sdstab", rep.depth->sdstab, rep.sdstab_method + " sdstab", sd));
    }
    else
    {
        for (auto name : {"depth-reg-duality", "profile-monotone", "profile-limit", "method-agreement"})
            ck.skip(name, CheckStatus::NotComputed);
    }
    return rep;
}

Json analysis_json(const AnalysisReport& rep)
{
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    Json out = {{"graph", rep.graph_id},
                {"canonical", rep.canonical},
                {"r", rep.r},
                {"m", rep.m},
                {"field", rep.field},
                {"mode", rep.mode},
                {"nu", rep.nu},
                {"nu_induced", rep.nu_induced},
                {"nu0", rep.nu0},
                {"ell", rep.ell},
                {"matchings_examined", rep.matchings_examined},
                {"bound", rep.bound},
                {"flags",
                 {{"bipartite", rep.bipartite},
                  {"forest", rep.forest},
                  {"perfect_ordered_matching", rep.perfect_ordered},
                  {"pentagon_free", rep.pentagon_free},
                  {"nu_equals_nu0", rep.nu_equals_nu0},
                  {"cameron_walker", rep.cameron_walker}}},
                {"sdstab", rep.sdstab ? Json(*rep.sdstab) : Json(nullptr)},
                {"sdstab_method", rep.sdstab_method},
                {"verdict", rep.verdict},
                {"reg", rep.reg ? Json(*rep.reg) : Json(nullptr)},
                {"checks", checks}};
    if (rep.seed)
        out["seed"] = *rep.seed;
    if (rep.profile)
    {
        out["profile"] = profile_json(*rep.profile);
        out["ell_walk"] = rep.profile->ell_walk ? Json(*rep.profile->ell_walk) : Json(nullptr);
    }
    if (!rep.ell_walk_note.empty())
        out["ell_walk_note"] = rep.ell_walk_note;
    if (rep.depth)
        out["depth"] = depth_report_json(*rep.depth);
    if (rep.certificate)
        out["certificate"] = {{"sdstab", rep.certificate->sdstab},
                              {"matching", [&] {
                                   Json m = Json::array();
                                   for (const auto& e : rep.certificate->matching)
                                       m.push_back({e.u, e.v});
                                   return m;
                               }()},
                              {"witness", certificate_json(rep.certificate->witness)}};
    return out;
}

} // namespace coverdepth
