#ifndef COVERDEPTH_VERIFICATION_HPP
#define COVERDEPTH_VERIFICATION_HPP

#include "coverdepth/depth_engine.hpp"
#include "coverdepth/graph.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace coverdepth
{

enum class VerifyLevel
{
    Quick,
    Full
};

VerifyLevel parse_verify_level(std::string_view text);

struct CriterionResult
{
    int id = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> details; ///< mismatches read "expected ..., got ..."
    double seconds = 0;

    /// Records a mismatch (and fails the criterion) unless ok.
    void expect(bool ok, const std::string& what);
    void expect_eq(int got, int expected, const std::string& what);
    void expect_eq(const std::vector<int>& got, const std::vector<int>& expected, const std::string& what);
    void expect_eq(const std::map<int, int>& got, const std::map<int, int>& expected, const std::string& what);
    void note(const std::string& line) { details.push_back(line); }
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 14;

/// Runs criterion `id` (1-based). Exceptions become failures.
CriterionResult run_criterion(int id, VerifyLevel level, const OracleOptions& oracle = {});

/// Runs every criterion in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run_all_criteria(VerifyLevel level, const OracleOptions& oracle = {},
                                              const std::function<void(const CriterionResult&)>& on_result = {});

/// Figure self-checks against the stated quantities, for an arbitrary graph.
CriterionResult check_fig1(const Graph& g, const OracleOptions& oracle = {});
CriterionResult check_fig2(const Graph& g);
CriterionResult check_fig3(const Graph& g, const OracleOptions& oracle = {});

/// Seeds of the random sweeps, fixed so that runs are reproducible.
inline constexpr std::uint64_t kRandomGraphSeed = 20240501;
inline constexpr std::uint64_t kRandomForestSeed = 20240502;
inline constexpr std::uint64_t kDualitySeed = 20240503;

} // namespace coverdepth

#endif // COVERDEPTH_VERIFICATION_HPP
