#ifndef COVERDEPTH_MATCHING_HPP
#define COVERDEPTH_MATCHING_HPP

#include "coverdepth/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coverdepth
{

/// Pairwise vertex-disjoint edges of a host graph, sorted.
using Matching = std::vector<Edge>;

/// One matched edge with a chosen orientation: `free` lies in the free
/// parameter set A, `partner` in the partner set B.
struct OrientedPair
{
    int free = 0;
    int partner = 0;

    friend auto operator<=>(const OrientedPair&, const OrientedPair&) = default;
};

/// Matching pairs listed in index order u_1v_1, ..., u_sv_s. Validity against a
/// host graph is checked by check_ordered_matching, not on construction.
struct OrderedMatching
{
    std::vector<OrientedPair> pairs;

    std::size_t size() const { return pairs.size(); }
    VertexMask free_side() const;
    VertexMask partner_side() const;
    VertexMask covered() const { return free_side() | partner_side(); }
    Matching edges() const;
    /// Pairs sorted by (free, partner); identifies the (pair set, orientation) class.
    std::vector<OrientedPair> sorted_pairs() const;

    friend bool operator==(const OrderedMatching&, const OrderedMatching&) = default;
};

bool is_matching(const Graph& g, std::span<const Edge> edges);
VertexMask covered_vertices(std::span<const Edge> edges);

int matching_number(const Graph& g);
int induced_matching_number(const Graph& g);
/// nu'(G) == nu(G).
bool is_cameron_walker(const Graph& g);

/// Every matching with exactly `size` edges, in lexicographic order of sorted edge lists.
std::vector<Matching> enumerate_matchings(const Graph& g, int size);
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

/// Empty when `om` is an ordered matching of `g`; otherwise names the first violated clause.
std::optional<std::string> check_ordered_matching(const Graph& g, const OrderedMatching& om);
inline bool is_ordered_matching(const Graph& g, const OrderedMatching& om)
{
    return !check_ordered_matching(g, om).has_value();
}

enum class OrderingStatus
{
    Ordered,
    FreeSideNotIndependent,
    CyclicConstraints
};

struct OrderingResult
{
    OrderingStatus status = OrderingStatus::CyclicConstraints;
    std::optional<OrderedMatching> ordered;
};

/// Tries to index the pairs of `matching` (free endpoints taken from `free_side`)
/// so that every edge {u_i, v_j} has i <= j. The constraint digraph has an arc
/// i -> j whenever {u_i, v_j} is an edge; an indexing exists iff it is acyclic.
/// On success the lexicographically smallest topological order is returned.
OrderingResult ordering_feasibility(const Graph& g, std::span<const Edge> matching, VertexMask free_side);

int ordered_matching_number(const Graph& g);
/// All maximum ordered matchings, one per (pair set, orientation) class, each in
/// its canonical order; sorted by sorted_pairs().
std::vector<OrderedMatching> enumerate_max_ordered_matchings(const Graph& g);

std::optional<OrderedMatching> has_perfect_ordered_matching(const Graph& g);
/// True iff `g` has exactly one perfect matching.
bool unique_perfect_matching_check(const Graph& g);

} // namespace coverdepth

#endif // COVERDEPTH_MATCHING_HPP
