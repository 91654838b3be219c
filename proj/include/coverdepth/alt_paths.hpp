#ifndef COVERDEPTH_ALT_PATHS_HPP
#define COVERDEPTH_ALT_PATHS_HPP

#include "coverdepth/graph.hpp"
#include "coverdepth/matching.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>

namespace coverdepth
{

/// Longest-admissible-path statistics of one ordered matching.
struct AltPathProfile
{
    OrderedMatching matching;
    std::map<int, int> ell_v; ///< partner vertex -> length of its longest admissible path (odd)
    int ell0 = 0;
    int ell1 = 0;             ///< 0 when the partner set is independent
    int ell_formula = 0;      ///< max(ell0, ell1)
    std::optional<int> ell_walk;
};

/// Thrown by ell_walk when an alternating walk reaches the cutoff or the walk
/// state graph has a cycle (an unbounded walk).
class WalkCutoffExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Length of a longest M-admissible path from each partner v in B. Only A-B
/// edges are consulted. Requires `om` to be a valid ordered matching of `g`.
std::map<int, int> admissible_lengths(const Graph& g, const OrderedMatching& om);

int ell0(const std::map<int, int>& lengths);
/// max{l(u)+l(v)+1 : uv an edge inside B}, or 0 when B is independent.
int ell1(const Graph& g, const OrderedMatching& om, const std::map<int, int>& lengths);
int ell_formula(const Graph& g, const OrderedMatching& om);

AltPathProfile alt_path_profile(const Graph& g, const OrderedMatching& om, bool with_walk = false);

/// Longest M-alternating walk in `g` (vertices and non-consecutive edges may
/// repeat; edges alternate strictly between M and its complement). Computed as
/// a longest path in the (vertex, next-edge-kind) state graph.
int ell_walk(const Graph& g, const OrderedMatching& om, int cutoff);
inline int default_walk_cutoff(const OrderedMatching& om) { return 4 * static_cast<int>(om.size()) + 2; }

struct EllGraphResult
{
    int ell = 0;
    OrderedMatching argmin; ///< first maximum ordered matching attaining the minimum
    std::size_t matchings_examined = 0;
};

/// Minimum of ell_formula over all maximum ordered matchings. Needs an edge.
EllGraphResult ell_graph(const Graph& g);

/// Integer weights on the vertices covered by a matching, with a target power n.
/// `values` has one entry per host vertex (index v-1); entries outside
/// `support` are zero and meaningless.
struct CertificateVector
{
    Eigen::VectorXi values;
    VertexMask support = 0;
    int target = 0;

    int operator[](int v) const { return values(v - 1); }
    /// Values on the support in increasing vertex order.
    std::vector<int> restricted() const;
};

/// Checks pair sums <= n-1 on matching edges and >= n on every other edge of G[M].
bool satisfies_certificate(const Graph& g, std::span<const Edge> matching, const CertificateVector& cert);

/// alpha(u_i) = k_i - 1, alpha(v_i) = k - k_i with 2k_i-1 = l(v_i) and 2k-1 = ell0.
/// Target is k. Verifies pair sums k-1 and cross A-B sums >= k (InternalError otherwise).
CertificateVector alpha_assignment(const Graph& g, const OrderedMatching& om);

/// beta(u_j) = alpha(u_j), beta(v_j) = n - k + alpha(v_j) with n = floor((ell_formula+1)/2).
/// The result is verified against every edge of G[M]; failure raises InternalError.
CertificateVector beta_certificate(const Graph& g, const OrderedMatching& om);
CertificateVector beta_certificate(const Graph& g, const OrderedMatching& om, int n);

} // namespace coverdepth

#endif // COVERDEPTH_ALT_PATHS_HPP
