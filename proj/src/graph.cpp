#include "coverdepth/graph.hpp"

#include "coverdepth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace coverdepth
{

std::vector<int> mask_vertices(VertexMask mask)
{
    std::vector<int> out;
    out.reserve(std::popcount(mask));
    while (mask)
    {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

VertexSet::VertexSet(std::vector<int> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 1)
        throw InputError("vertex set contains a non-positive label");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InputError("vertex set contains a repeated vertex");
}

VertexSet VertexSet::from_mask(VertexMask mask) { return VertexSet(mask_vertices(mask)); }

bool VertexSet::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

VertexMask VertexSet::mask() const
{
    VertexMask m = 0;
    for (int v : vertices_)
    {
        if (v > kMaxVertices)
            throw InputError("vertex label exceeds " + std::to_string(kMaxVertices));
        m |= vertex_bit(v);
    }
    return m;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, Edgeless policy)
    : order_(vertex_count), edges_(std::move(edges))
{
    if (order_ < 1 || order_ > kMaxVertices)
        throw InputError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
    adjacency_.assign(order_, 0);
    for (auto& e : edges_)
    {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u == e.v)
            throw InputError("loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > order_)
            throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw InputError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    if (edges_.empty() && policy == Edgeless::Forbid)
        throw InputError("graph has no edges");
    for (const auto& e : edges_)
    {
        adjacency_[e.u - 1] |= vertex_bit(e.v);
        adjacency_[e.v - 1] |= vertex_bit(e.u);
    }
}

int Graph::edge_index(int u, int v) const
{
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<int>(it - edges_.begin()) : -1;
}

// -- parsing -------------------------------------------------------------------

namespace
{

std::string_view strip_comment(std::string_view line)
{
    if (auto pos = line.find('#'); pos != std::string_view::npos)
        line = line.substr(0, pos);
    return line;
}

bool is_blank(std::string_view line)
{
    return std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

} // namespace

Graph parse_graph(std::string_view text)
{
    using K = ParseError::Kind;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int header_line = 0;
    int r = -1;
    long m = -1;
    std::vector<Edge> edges;
    std::vector<VertexMask> seen;

    while (std::getline(in, raw))
    {
        ++line_no;
        auto line = strip_comment(raw);
        if (is_blank(line))
            continue;
        std::istringstream ls{std::string(line)};
        std::string tag;
        ls >> tag;
        if (r < 0)
        {
            long rr = 0;
            if (tag != "p" || !(ls >> rr >> m) || rr < 1 || rr > kMaxVertices || m < 0)
                throw ParseError(K::MalformedHeader, line_no, "expected header 'p <r> <m>' with 1 <= r <= 64");
            std::string extra;
            if (ls >> extra)
                throw ParseError(K::MalformedHeader, line_no, "trailing tokens after header");
            r = static_cast<int>(rr);
            header_line = line_no;
            seen.assign(r, 0);
            continue;
        }
        long u = 0, v = 0;
        std::string extra;
        if (tag != "e" || !(ls >> u >> v) || (ls >> extra))
            throw ParseError(K::MalformedLine, line_no, "expected edge line 'e <u> <v>'");
        if (u < 1 || v < 1 || u > r || v > r)
            throw ParseError(K::VertexOutOfRange, line_no,
                             "vertex out of range 1.." + std::to_string(r));
        if (u == v)
            throw ParseError(K::LoopEdge, line_no, "loop edge at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        int iu = static_cast<int>(u), iv = static_cast<int>(v);
        if (seen[iu - 1] & vertex_bit(iv))
            throw ParseError(K::DuplicateEdge, line_no,
                             "duplicate edge {" + std::to_string(iu) + "," + std::to_string(iv) + "}");
        seen[iu - 1] |= vertex_bit(iv);
        edges.push_back({iu, iv});
    }
    if (r < 0)
        throw ParseError(K::MalformedHeader, line_no, "missing header 'p <r> <m>'");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(K::EdgeCountMismatch, header_line,
                         "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(r, std::move(edges), Edgeless::Allow);
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string canonical_key(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ':';
    bool first = true;
    for (const auto& e : g.edges())
    {
        out << (first ? "" : ",") << e.u << '-' << e.v;
        first = false;
    }
    return out.str();
}

// -- generators ----------------------------------------------------------------

Graph path_graph(int r)
{
    if (r < 2)
        throw InputError("path_graph needs r >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < r; ++i)
        edges.push_back({i, i + 1});
    return Graph(r, std::move(edges));
}

Graph cycle_graph(int r)
{
    if (r < 3)
        throw InputError("cycle_graph needs r >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < r; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({1, r});
    return Graph(r, std::move(edges));
}

Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw InputError("complete_bipartite needs positive sides");
    std::vector<Edge> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

Graph disjoint_edges(int count)
{
    if (count < 1)
        throw InputError("disjoint_edges needs count >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < count; ++i)
        edges.push_back({2 * i + 1, 2 * i + 2});
    return Graph(2 * count, std::move(edges));
}

Graph random_forest(int r, std::mt19937_64& rng)
{
    if (r < 2)
        throw InputError("random_forest needs r >= 2");
    // Random recursive tree over a shuffled labelling, then drop each edge with
    // probability 1/4 while keeping at least one.
    std::vector<int> labels(r);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Edge> tree;
    for (int i = 1; i < r; ++i)
    {
        std::uniform_int_distribution<int> pick(0, i - 1);
        tree.push_back({labels[pick(rng)], labels[i]});
    }
    std::vector<Edge> kept;
    std::bernoulli_distribution keep(0.75);
    for (const auto& e : tree)
        if (keep(rng))
            kept.push_back(e);
    if (kept.empty())
        kept.push_back(tree.front());
    return Graph(r, std::move(kept));
}

Graph random_graph(int r, double p, std::mt19937_64& rng)
{
    if (r < 2)
        throw InputError("random_graph needs r >= 2");
    std::bernoulli_distribution coin(p);
    for (;;)
    {
        std::vector<Edge> edges;
        for (int u = 1; u <= r; ++u)
            for (int v = u + 1; v <= r; ++v)
                if (coin(rng))
                    edges.push_back({u, v});
        if (!edges.empty())
            return Graph(r, std::move(edges));
    }
}

// -- structure -----------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, VertexMask s)
{
    s &= g.vertices();
    if (s == 0)
        throw InputError("induced_subgraph needs a nonempty vertex set");
    auto host = mask_vertices(s);
    std::vector<int> local(g.order() + 1, 0);
    for (std::size_t i = 0; i < host.size(); ++i)
        local[host[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (local[e.u] && local[e.v])
            edges.push_back({local[e.u], local[e.v]});
    return {Graph(static_cast<int>(host.size()), std::move(edges), Edgeless::Allow), std::move(host)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    for (int v : s.vertices())
        if (v > g.order())
            throw InputError("vertex " + std::to_string(v) + " not in graph");
    return induced_subgraph(g, s.mask());
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g)
{
    const int r = g.order();
    std::vector<int> colour(r + 1, -1);
    std::vector<int> stack;
    for (int start = 1; start <= r; ++start)
    {
        if (colour[start] >= 0)
            continue;
        colour[start] = 0;
        stack.push_back(start);
        while (!stack.empty())
        {
            int x = stack.back();
            stack.pop_back();
            for (int y : mask_vertices(g.neighbors(x)))
            {
                if (colour[y] < 0)
                {
                    colour[y] = 1 - colour[x];
                    stack.push_back(y);
                }
                else if (colour[y] == colour[x])
                    return std::nullopt;
            }
        }
    }
    std::vector<int> side[2];
    for (int v = 1; v <= r; ++v)
        side[colour[v]].push_back(v);
    return std::make_pair(VertexSet(side[0]), VertexSet(side[1]));
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexMask unseen = g.vertices();
    while (unseen)
    {
        VertexMask comp = unseen & (~unseen + 1);
        VertexMask frontier = comp;
        while (frontier)
        {
            VertexMask next = 0;
            for (int x : mask_vertices(frontier))
                next |= g.neighbors(x);
            frontier = next & ~comp;
            comp |= next;
        }
        unseen &= ~comp;
        out.push_back(VertexSet::from_mask(comp));
    }
    return out;
}

bool is_forest(const Graph& g)
{
    return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

namespace
{

// Simple paths from `start` that only use vertices larger than `start`; a
// k-cycle exists iff some such path of k vertices closes back to `start`.
bool closes_cycle(const Graph& g, int start, int current, VertexMask used, int remaining)
{
    if (remaining == 0)
        return g.adjacent(current, start);
    VertexMask options = g.neighbors(current) & ~used & ~full_mask(start);
    while (options)
    {
        int next = std::countr_zero(options) + 1;
        options &= options - 1;
        if (closes_cycle(g, start, next, used | vertex_bit(next), remaining - 1))
            return true;
    }
    return false;
}

} // namespace

bool has_cycle_of_length(const Graph& g, int k)
{
    if (k < 3 || k > g.order())
        return false;
    for (int start = 1; start <= g.order(); ++start)
        if (closes_cycle(g, start, start, vertex_bit(start), k - 1))
            return true;
    return false;
}

bool is_independent(const Graph& g, VertexMask s)
{
    for (const auto& e : g.edges())
        if ((s & vertex_bit(e.u)) && (s & vertex_bit(e.v)))
            return false;
    return true;
}

bool is_path_graph(const Graph& g)
{
    if (g.order() < 2 || g.size() != static_cast<std::size_t>(g.order() - 1))
        return false;
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) == 0 || g.degree(v) > 2)
            return false;
    return connected_components(g).size() == 1;
}

bool is_cycle_graph(const Graph& g)
{
    if (g.order() < 3 || g.size() != static_cast<std::size_t>(g.order()))
        return false;
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return connected_components(g).size() == 1;
}

} // namespace coverdepth
