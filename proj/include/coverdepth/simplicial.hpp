#ifndef COVERDEPTH_SIMPLICIAL_HPP
#define COVERDEPTH_SIMPLICIAL_HPP

#include "coverdepth/graph.hpp"
#include "coverdepth/linalg.hpp"

#include <optional>
#include <vector>

namespace coverdepth
{

/// Simplicial complex on the ground set {1..m}, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex {∅} has the
/// empty face only. The two are distinct values.
class SimplicialComplex
{
public:
    static SimplicialComplex void_complex(int m);
    static SimplicialComplex irrelevant(int m);
    /// Keeps the inclusion-maximal sets. Throws InputError on out-of-range elements.
    static SimplicialComplex from_facets(int m, std::vector<VertexMask> facets);
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);

    int ground_size() const { return m_; }
    /// Facets sorted by (size, mask).
    const std::vector<VertexMask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool contains(VertexMask face) const;
    /// Dimension of the largest facet; -1 for {∅}, -2 for the void complex.
    int dimension() const;
    /// Faces with exactly dim+1 vertices, sorted by mask.
    std::vector<VertexMask> faces(int dim) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int m, std::vector<VertexMask> facets) : m_(m), facets_(std::move(facets)) {}
    int m_ = 0;
    std::vector<VertexMask> facets_;
};

/// dim of reduced homology in each degree d = -1 .. top. Degrees outside the
/// stored range have dimension zero.
struct HomologyProfile
{
    std::vector<int> dims; ///< dims[d + 1]

    int operator()(int d) const
    {
        return d + 1 >= 0 && d + 1 < static_cast<int>(dims.size()) ? dims[d + 1] : 0;
    }
    bool acyclic() const;
    /// Largest degree with nonzero homology, if any.
    std::optional<int> top_degree() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// {V∖τ : τ ∉ Δ} on the same ground set. Requires m <= 24.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

/// Faces H with H ∩ F = ∅ and H ∪ F ∈ Δ. Throws InputError if F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& delta, VertexMask face);

/// A vertex lying in every facet (the smallest such), if any.
std::optional<int> is_cone(const SimplicialComplex& delta);

/// Boundary map from dim-d faces to dim-(d-1) faces in the given bases.
IntMatrix boundary_matrix(const std::vector<VertexMask>& lower, const std::vector<VertexMask>& upper);

/// Exact reduced homology. Verifies the Euler characteristic identity and
/// raises InternalError if it fails.
HomologyProfile reduced_homology(const SimplicialComplex& delta, const FieldSpec& field);

/// dim H̃_{i-1}(Δ*) == dim H̃_{m-2-i}(Δ) for every i.
bool dual_homology_check(const SimplicialComplex& delta, const FieldSpec& field);

} // namespace coverdepth

#endif // COVERDEPTH_SIMPLICIAL_HPP
