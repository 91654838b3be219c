#ifndef COVERDEPTH_ANALYZER_HPP
#define COVERDEPTH_ANALYZER_HPP

#include "coverdepth/alt_paths.hpp"
#include "coverdepth/cache.hpp"
#include "coverdepth/depth_engine.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coverdepth
{

enum class AnalysisMode
{
    Auto,
    Oracle,
    Certificate,
    Combinatorial
};

AnalysisMode parse_analysis_mode(std::string_view text);
std::string to_string(AnalysisMode mode);

struct AnalysisOptions
{
    AnalysisMode mode = AnalysisMode::Auto;
    OracleOptions oracle;
    /// Permits algebraic computations on graphs with 13 or more vertices.
    bool long_running = false;
    /// In auto mode the oracle also runs when its estimate is at most this.
    double cross_check_budget = 1e7;
    bool with_walk = true;
    std::string graph_id;
    std::optional<std::uint64_t> seed;
    /// Optional shared store for depth profiles and regularity.
    const ResultCache* cache = nullptr;
};

enum class CheckStatus
{
    Pass,
    Fail,
    NotApplicable,
    NotComputed
};

std::string to_string(CheckStatus s);

struct TheoremCheck
{
    std::string name;
    CheckStatus status = CheckStatus::NotComputed;
    std::string detail;
};

inline constexpr const char* kNotComputedBudget = "not computed (budget)";

struct AnalysisReport
{
    std::string graph_id;
    std::string canonical;
    int r = 0;
    int m = 0;
    std::optional<std::uint64_t> seed;
    std::string field;
    std::string mode;

    int nu = 0;
    int nu_induced = 0;
    int nu0 = 0;

    std::optional<AltPathProfile> profile; ///< of the first matching attaining ell(G)
    int ell = 0;
    std::size_t matchings_examined = 0;
    std::string ell_walk_note;
    int bound = 0; ///< floor((ell + 1) / 2)

    bool bipartite = false;
    bool forest = false;
    bool perfect_ordered = false;
    bool pentagon_free = false;
    bool nu_equals_nu0 = false;
    bool cameron_walker = false;

    std::optional<int> reg;
    std::optional<DepthReport> depth;
    std::optional<CertificateResult> certificate;
    std::optional<int> sdstab;
    std::string sdstab_method; ///< closed-form, certificate, oracle, or kNotComputedBudget
    std::string verdict;       ///< attained, strict, or not computed

    std::vector<TheoremCheck> checks;

    bool failed() const;
    const TheoremCheck* check(std::string_view name) const;
};

/// Deterministic given (graph, options). Throws InputError on an edgeless graph
/// and BudgetExceeded when an explicitly requested oracle is refused.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

Json analysis_json(const AnalysisReport& report);

} // namespace coverdepth

#endif // COVERDEPTH_ANALYZER_HPP
