#ifndef COVERDEPTH_GRAPH_HPP
#define COVERDEPTH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coverdepth
{

/// Vertex subsets of a graph on at most 64 vertices. Vertex v occupies bit v-1.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

inline constexpr VertexMask full_mask(int r)
{
    return r >= 64 ? ~VertexMask{0} : (VertexMask{1} << r) - 1;
}

/// 1-based vertex labels of `mask` in increasing order.
std::vector<int> mask_vertices(VertexMask mask);

/// Undirected edge with u < v.
struct Edge
{
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted subset of {1..r} with strictly increasing elements.
class VertexSet
{
public:
    VertexSet() = default;
    /// Throws InputError unless every element is positive and distinct. Sorts the input.
    explicit VertexSet(std::vector<int> vertices);
    static VertexSet from_mask(VertexMask mask);

    std::span<const int> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    bool contains(int v) const;
    VertexMask mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> vertices_;
};

enum class Edgeless
{
    Forbid,
    Allow
};

/// Simple undirected graph on vertices 1..r. Immutable after construction.
class Graph
{
public:
    /// Validates ranges, loops and duplicates (InputError). An empty edge set
    /// is only accepted with Edgeless::Allow.
    Graph(int vertex_count, std::vector<Edge> edges, Edgeless policy = Edgeless::Forbid);

    int order() const { return order_; }
    std::size_t size() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    bool edgeless() const { return edges_.empty(); }

    bool adjacent(int u, int v) const { return (adjacency_[u - 1] & vertex_bit(v)) != 0; }
    VertexMask neighbors(int v) const { return adjacency_[v - 1]; }
    int degree(int v) const { return std::popcount(adjacency_[v - 1]); }
    VertexMask vertices() const { return full_mask(order_); }

    /// Position of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_;
    std::vector<Edge> edges_;
    std::vector<VertexMask> adjacency_;
};

/// An induced subgraph together with the map from its labels back to the host.
struct InducedSubgraph
{
    Graph graph;
    std::vector<int> to_host; ///< to_host[i-1] is the host label of vertex i.
};

// -- parsing and formatting --------------------------------------------------

/// Parses the `p <r> <m>` / `e <u> <v>` edge-list format. '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
/// Canonical one-line key: "r:u-v,u-v,...".
std::string canonical_key(const Graph& g);

// -- generators --------------------------------------------------------------

Graph path_graph(int r);
Graph cycle_graph(int r);
Graph complete_bipartite(int a, int b);
Graph disjoint_edges(int count);
/// Uniform random labelled forest on `r` vertices with at least one edge.
Graph random_forest(int r, std::mt19937_64& rng);
/// Erdos-Renyi G(r, p), resampled until it has an edge.
Graph random_graph(int r, double p, std::mt19937_64& rng);

// -- structure -----------------------------------------------------------------

/// Relabels S to 1..|S| in increasing order. Throws InputError on empty S.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph(const Graph& g, VertexMask s);

/// Two colour classes (first contains the smallest vertex of each component), or none.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<VertexSet> connected_components(const Graph& g);
bool is_forest(const Graph& g);
/// Detects a k-cycle as a subgraph, not necessarily induced.
bool has_cycle_of_length(const Graph& g, int k);
bool is_independent(const Graph& g, VertexMask s);
inline bool is_independent(const Graph& g, const VertexSet& s) { return is_independent(g, s.mask()); }

/// Recognises graphs that are a single path P_r or a single cycle C_r on all r vertices.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

} // namespace coverdepth

#endif // COVERDEPTH_GRAPH_HPP
