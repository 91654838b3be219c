#include "coverdepth/simplicial.hpp"

#include "coverdepth/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace coverdepth
{

namespace
{

bool subset_of(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

void sort_facets(std::vector<VertexMask>& facets)
{
    std::sort(facets.begin(), facets.end(), [](VertexMask a, VertexMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int m) { return from_facets(m, std::vector<VertexMask>{}); }

SimplicialComplex SimplicialComplex::irrelevant(int m) { return from_facets(m, std::vector<VertexMask>{0}); }

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<VertexMask> facets)
{
    if (m < 0 || m > kMaxVertices)
        throw InputError("ground set size out of range");
    for (VertexMask f : facets)
        if (f & ~full_mask(m))
            throw InputError("facet element outside 1.." + std::to_string(m));
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexMask> kept;
    for (VertexMask f : facets)
    {
        bool dominated = std::any_of(facets.begin(), facets.end(),
                                     [f](VertexMask g) { return g != f && subset_of(f, g); });
        if (!dominated)
            kept.push_back(f);
    }
    sort_facets(kept);
    return SimplicialComplex(m, std::move(kept));
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& facets)
{
    std::vector<VertexMask> masks;
    for (const auto& f : facets)
    {
        VertexMask mask = 0;
        for (int v : f)
        {
            if (v < 1 || v > m)
                throw InputError("facet element " + std::to_string(v) + " outside 1.." + std::to_string(m));
            mask |= vertex_bit(v);
        }
        masks.push_back(mask);
    }
    return from_facets(m, std::move(masks));
}

bool SimplicialComplex::contains(VertexMask face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexMask f) { return subset_of(face, f); });
}

int SimplicialComplex::dimension() const
{
    if (facets_.empty())
        return -2;
    return std::popcount(facets_.back()) - 1;
}

std::vector<VertexMask> SimplicialComplex::faces(int dim) const
{
    const int size = dim + 1;
    std::unordered_set<VertexMask> seen;
    std::vector<VertexMask> out;
    if (size < 0)
        return out;
    for (VertexMask f : facets_)
    {
        if (std::popcount(f) < size)
            continue;
        // Enumerate the size-element subsets of f.
        const auto verts = mask_vertices(f);
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i)
            pick[i] = i;
        while (true)
        {
            VertexMask face = 0;
            for (int i : pick)
                face |= vertex_bit(verts[i]);
            if (seen.insert(face).second)
                out.push_back(face);
            int i = size - 1;
            while (i >= 0 && pick[i] == static_cast<int>(verts.size()) - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool HomologyProfile::acyclic() const
{
    return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

std::optional<int> HomologyProfile::top_degree() const
{
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i)
        if (dims[i] != 0)
            return i - 1;
    return std::nullopt;
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta)
{
    const int m = delta.ground_size();
    if (m > 24)
        throw InputError("alexander_dual supports ground sets of at most 24 vertices");
    const VertexMask all = full_mask(m);
    std::vector<VertexMask> faces;
    for (VertexMask tau = 0; tau <= all; ++tau)
        if (!delta.contains(tau))
            faces.push_back(all & ~tau);
    return SimplicialComplex::from_facets(m, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& delta, VertexMask face)
{
    if (!delta.contains(face))
        throw InputError("link: the given set is not a face of the complex");
    std::vector<VertexMask> facets;
    for (VertexMask f : delta.facets())
        if (subset_of(face, f))
            facets.push_back(f & ~face);
    return SimplicialComplex::from_facets(delta.ground_size(), std::move(facets));
}

std::optional<int> is_cone(const SimplicialComplex& delta)
{
    if (delta.is_void())
        return std::nullopt;
    VertexMask common = ~VertexMask{0};
    for (VertexMask f : delta.facets())
        common &= f;
    if (!common)
        return std::nullopt;
    return std::countr_zero(common) + 1;
}

IntMatrix boundary_matrix(const std::vector<VertexMask>& lower, const std::vector<VertexMask>& upper)
{
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
    for (std::size_t c = 0; c < upper.size(); ++c)
    {
        int sign = 1;
        for (VertexMask rest = upper[c]; rest; rest &= rest - 1)
        {
            VertexMask bit = rest & -rest;
            auto it = std::lower_bound(lower.begin(), lower.end(), upper[c] & ~bit);
            if (it != lower.end() && *it == (upper[c] & ~bit))
                d(it - lower.begin(), static_cast<Eigen::Index>(c)) = sign;
            sign = -sign;
        }
    }
    return d;
}

HomologyProfile reduced_homology(const SimplicialComplex& delta, const FieldSpec& field)
{
    HomologyProfile h;
    if (delta.is_void())
        return h;
    const int top = delta.dimension();
    // faces[d + 1] holds the dim-d faces, d = -1 .. top.
    std::vector<std::vector<VertexMask>> faces(top + 2);
    faces[0] = {0};
    for (int d = 0; d <= top; ++d)
        faces[d + 1] = delta.faces(d);
    // rank[d + 1] = rank of the boundary from dim d to dim d-1 (zero for d = -1).
    std::vector<Eigen::Index> rank(top + 3, 0);
    for (int d = 0; d <= top; ++d)
        rank[d + 1] = rank_over(boundary_matrix(faces[d], faces[d + 1]), field);
    h.dims.assign(top + 2, 0);
    long euler_faces = 0, euler_homology = 0;
    for (int d = -1; d <= top; ++d)
    {
        const auto count = static_cast<Eigen::Index>(faces[d + 1].size());
        h.dims[d + 1] = static_cast<int>(count - rank[d + 1] - rank[d + 2]);
        const long sign = (d % 2 == 0) ? 1 : -1;
        euler_faces += sign * count;
        euler_homology += sign * h.dims[d + 1];
        if (h.dims[d + 1] < 0)
            throw InternalError("negative homology dimension");
    }
    if (euler_faces != euler_homology)
        throw InternalError("Euler characteristic mismatch in reduced homology");
    return h;
}

bool dual_homology_check(const SimplicialComplex& delta, const FieldSpec& field)
{
    const int m = delta.ground_size();
    const auto h = reduced_homology(delta, field);
    const auto hd = reduced_homology(alexander_dual(delta), field);
    for (int i = 0; i <= m + 1; ++i)
        if (hd(i - 1) != h(m - 2 - i))
            return false;
    return true;
}

} // namespace coverdepth
