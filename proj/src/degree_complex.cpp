#include "coverdepth/degree_complex.hpp"

#include "coverdepth/errors.hpp"

namespace coverdepth
{

DegreeVector::DegreeVector(std::initializer_list<int> v) : values(static_cast<Eigen::Index>(v.size()))
{
    Eigen::Index i = 0;
    for (int x : v)
        values(i++) = x;
}

VertexMask DegreeVector::negative_support() const
{
    VertexMask m = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values(i) < 0)
            m |= vertex_bit(static_cast<int>(i) + 1);
    return m;
}

DegreeVector DegreeVector::normalized() const { return DegreeVector(values.cwiseMax(-1)); }

std::vector<int> DegreeVector::to_vector() const { return {values.data(), values.data() + values.size()}; }

namespace
{

void require_length(const Graph& g, const DegreeVector& alpha)
{
    if (alpha.size() != g.order())
        throw InputError("degree vector has length " + std::to_string(alpha.size()) + ", graph has " +
                         std::to_string(g.order()) + " vertices");
}

void independent_sets(const Graph& g, VertexMask candidates, VertexMask current, std::vector<VertexMask>& maximal)
{
    if (!candidates)
    {
        // current is maximal iff no vertex outside it is free of neighbours in it.
        for (int v = 1; v <= g.order(); ++v)
            if (!(current & vertex_bit(v)) && !(g.neighbors(v) & current))
                return;
        maximal.push_back(current);
        return;
    }
    int v = std::countr_zero(candidates) + 1;
    VertexMask rest = candidates & ~vertex_bit(v);
    independent_sets(g, rest & ~g.neighbors(v), current | vertex_bit(v), maximal);
    independent_sets(g, rest, current, maximal);
}

} // namespace

SimplicialComplex cover_complex(const Graph& g)
{
    if (g.edgeless())
        throw InputError("cover complex of an edgeless graph");
    std::vector<VertexMask> facets;
    for (const auto& e : g.edges())
        facets.push_back(g.vertices() & ~(vertex_bit(e.u) | vertex_bit(e.v)));
    return SimplicialComplex::from_facets(g.order(), std::move(facets));
}

SimplicialComplex independence_complex(const Graph& g)
{
    std::vector<VertexMask> maximal;
    independent_sets(g, g.vertices(), 0, maximal);
    return SimplicialComplex::from_facets(g.order(), std::move(maximal));
}

bool symbolic_membership(const Graph& g, int n, const DegreeVector& alpha)
{
    require_length(g, alpha);
    if (n < 1)
        throw InputError("symbolic power exponent must be positive");
    if (alpha.values.minCoeff() < 0)
        throw InputError("membership test needs a nonnegative exponent vector");
    for (const auto& e : g.edges())
        if (alpha[e.u] + alpha[e.v] < n)
            return false;
    return true;
}

InducedSubgraph qualifying_graph(const Graph& g, int n, const DegreeVector& alpha)
{
    require_length(g, alpha);
    const VertexMask keep = g.vertices() & ~alpha.negative_support();
    if (!keep)
        throw InputError("every vertex lies in the negative support");
    auto sub = induced_subgraph(g, keep);
    std::vector<Edge> edges;
    for (const auto& e : sub.graph.edges())
        if (alpha[sub.to_host[e.u - 1]] + alpha[sub.to_host[e.v - 1]] <= n - 1)
            edges.push_back(e);
    return {Graph(sub.graph.order(), std::move(edges), Edgeless::Allow), std::move(sub.to_host)};
}

DegreeComplex degree_complex(const Graph& g, int n, const DegreeVector& alpha)
{
    require_length(g, alpha);
    if (n < 1)
        throw InputError("symbolic power exponent must be positive");
    const VertexMask negative = alpha.negative_support();
    const int removed = std::popcount(negative);
    if (removed == g.order())
        return {SimplicialComplex::void_complex(0), {}, removed};
    auto q = qualifying_graph(g, n, alpha);
    const int m = q.graph.order();
    std::vector<VertexMask> facets;
    for (const auto& e : q.graph.edges())
        facets.push_back(full_mask(m) & ~(vertex_bit(e.u) | vertex_bit(e.v)));
    return {SimplicialComplex::from_facets(m, std::move(facets)), std::move(q.to_host), removed};
}

} // namespace coverdepth
