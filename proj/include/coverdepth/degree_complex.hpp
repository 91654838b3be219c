#ifndef COVERDEPTH_DEGREE_COMPLEX_HPP
#define COVERDEPTH_DEGREE_COMPLEX_HPP

#include "coverdepth/graph.hpp"
#include "coverdepth/simplicial.hpp"

#include <Eigen/Core>

#include <vector>

namespace coverdepth
{

/// Integer exponent vector indexed by the vertices 1..r of a host graph.
struct DegreeVector
{
    Eigen::VectorXi values;

    DegreeVector() = default;
    explicit DegreeVector(Eigen::VectorXi v) : values(std::move(v)) {}
    DegreeVector(std::initializer_list<int> v);
    static DegreeVector zero(int r) { return DegreeVector(Eigen::VectorXi::Zero(r)); }

    int size() const { return static_cast<int>(values.size()); }
    int operator[](int v) const { return values(v - 1); }
    int& operator[](int v) { return values(v - 1); }
    /// Vertices with a negative entry.
    VertexMask negative_support() const;
    /// Negative entries replaced by -1.
    DegreeVector normalized() const;
    std::vector<int> to_vector() const;

    friend bool operator==(const DegreeVector& a, const DegreeVector& b) { return a.values == b.values; }
};

/// ⟨V∖e : e ∈ E⟩. Throws InputError on an edgeless graph.
SimplicialComplex cover_complex(const Graph& g);

/// Complex of independent sets on {1..r}.
SimplicialComplex independence_complex(const Graph& g);

/// alpha_u + alpha_v >= n on every edge. Requires alpha >= 0 and n >= 1.
bool symbolic_membership(const Graph& g, int n, const DegreeVector& alpha);

/// Edges of G[V∖G_α] with alpha-sum at most n-1, relabelled to 1..|V∖G_α|.
/// The result may be edgeless. Throws InputError if every vertex is negative.
InducedSubgraph qualifying_graph(const Graph& g, int n, const DegreeVector& alpha);

/// Degree complex of the n-th symbolic power of the cover ideal at alpha.
struct DegreeComplex
{
    SimplicialComplex complex;  ///< on 1..|V∖G_α|
    std::vector<int> to_host;   ///< to_host[i-1] is the host label of local vertex i
    int negative_count = 0;     ///< |G_α|
};

/// Facets are the complements, within V∖G_α, of the qualifying edges. Void
/// when no edge qualifies (or every vertex is negative).
DegreeComplex degree_complex(const Graph& g, int n, const DegreeVector& alpha);

} // namespace coverdepth

#endif // COVERDEPTH_DEGREE_COMPLEX_HPP
