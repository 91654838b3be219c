#ifndef COVERDEPTH_DEPTH_ENGINE_HPP
#define COVERDEPTH_DEPTH_ENGINE_HPP

#include "coverdepth/alt_paths.hpp"
#include "coverdepth/degree_complex.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/linalg.hpp"
#include "coverdepth/matching.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coverdepth
{

struct OracleOptions
{
    FieldSpec field = FieldSpec::rationals();
    /// Largest accepted cost estimate (see oracle_cost_estimate).
    double budget = 1e10;
    /// Lifts the refusal of graphs with 13 or more vertices.
    bool allow_large = false;
    /// Worker count; 0 defers to resolve_thread_count.
    int threads = 0;
};

/// Projected work of a depth profile up to n_max: one homology evaluation per
/// nonempty edge subset plus one bounded feasibility search per exponent.
double oracle_cost_estimate(const Graph& g, int n_max);

/// Throws BudgetExceeded when the instance is refused.
void check_oracle_budget(const Graph& g, int n_max, const OracleOptions& options);

/// A nonvanishing local cohomology piece: H^depth_m(R/J^(n))_alpha != 0.
struct DepthWitness
{
    int n = 0;
    int depth = 0;
    DegreeVector alpha;  ///< -1 on the negative support
    int degree = 0;      ///< homology degree of the degree complex
};

/// depth R/J(G)^(n) for every n in [n_first, n_last] with one witness each.
std::vector<DepthWitness> depth_symbolic_range(const Graph& g, int n_first, int n_last,
                                               const OracleOptions& options = {});

int depth_symbolic(const Graph& g, int n, const OracleOptions& options = {});

/// reg I(G) from nonvanishing link homology of the independence complex.
int reg_edge_ideal(const Graph& g, const FieldSpec& field = FieldSpec::rationals());

struct DepthReport
{
    std::string graph;
    FieldSpec field = FieldSpec::rationals();
    int nu0 = 0;
    int limit_depth = 0;        ///< r - nu0 - 1
    std::map<int, int> profile; ///< n -> depth, n = 1 .. 2 nu0 - 1
    int sdstab = 0;
    std::string method;
    std::vector<DepthWitness> witnesses;
};

/// Oracle profile for n = 1 .. max(1, 2 nu0 - 1) and the derived stability index.
DepthReport depth_profile(const Graph& g, const OracleOptions& options = {});

struct CertificateResult
{
    int sdstab = 0;
    Matching matching;
    CertificateVector witness;
};

/// A vector on the vertices of G with pair sums <= n-1 on `matching` and sums
/// >= n on every other edge, searched pair by pair with each pair sum fixed at
/// n-1. `matching` must be perfect. The first solution in lexicographic order
/// of the pair values is returned.
std::optional<CertificateVector> certificate_at(const Graph& g, std::span<const Edge> matching, int n);

/// Least n with a certificate. Throws InputError if G has no perfect matching
/// or no n <= 2s-1 admits one.
CertificateResult sdstab_certificate(const Graph& g);

/// Closed form for graphs that are a single path or cycle.
std::optional<int> closed_form_sdstab(const Graph& g);

enum class SdstabMode
{
    Auto,
    Oracle,
    Certificate,
    ClosedForm
};

SdstabMode parse_sdstab_mode(std::string_view text);

struct SdstabResult
{
    int value = 0;
    std::string method; ///< "closed-form", "certificate" or "oracle"
    std::optional<DepthReport> report;
    std::optional<CertificateResult> certificate;
};

/// Auto tries the closed form, then the certificate (when a perfect ordered
/// matching exists), then the oracle.
SdstabResult sdstab(const Graph& g, SdstabMode mode, const OracleOptions& options = {});

} // namespace coverdepth

#endif // COVERDEPTH_DEPTH_ENGINE_HPP
