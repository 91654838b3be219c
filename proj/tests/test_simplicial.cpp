#include "catch_amalgamated.hpp"

#include "coverdepth/errors.hpp"
#include "coverdepth/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using namespace coverdepth;

namespace
{

using Facets = std::vector<std::vector<int>>;

SimplicialComplex cx(int m, const Facets& f) { return SimplicialComplex::from_facets(m, f); }

SimplicialComplex rp2()
{
    return cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6},
                  {3, 5, 6}});
}

// Dual by definition: complements of the non-faces, all listed then reduced.
SimplicialComplex brute_dual(const SimplicialComplex& d)
{
    const int m = d.ground_size();
    std::vector<VertexMask> faces;
    for (VertexMask t = 0; t < (VertexMask{1} << m); ++t)
    {
        bool face = false;
        for (VertexMask f : d.facets())
            face = face || (t & ~f) == 0;
        if (!face)
            faces.push_back(full_mask(m) & ~t);
    }
    return SimplicialComplex::from_facets(m, faces);
}

// Homology through a rational eliminator that shares nothing with rank_over.
int naive_rank(const IntMatrix& a, int p)
{
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> m(a.rows(), std::vector<cpp_rational>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m[i][j] = p ? ((a(i, j) % p) + p) % p : a(i, j);
    int rank = 0;
    for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c)
    {
        Eigen::Index piv = rank;
        while (piv < a.rows() && m[piv][c] == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        std::swap(m[piv], m[rank]);
        for (Eigen::Index i = rank + 1; i < a.rows(); ++i)
        {
            if (m[i][c] == 0)
                continue;
            if (p)
            {
                // Over GF(2) rows simply add.
                for (Eigen::Index j = c; j < a.cols(); ++j)
                {
                    m[i][j] += m[rank][j];
                    if (m[i][j] == 2)
                        m[i][j] = 0;
                }
            }
            else
            {
                cpp_rational f = m[i][c] / m[rank][c];
                for (Eigen::Index j = c; j < a.cols(); ++j)
                    m[i][j] -= f * m[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<int> naive_dims(const SimplicialComplex& d, int p)
{
    if (d.is_void())
        return {};
    const int top = d.dimension();
    std::vector<std::vector<VertexMask>> faces(top + 2);
    faces[0] = {0};
    for (int k = 0; k <= top; ++k)
        faces[k + 1] = d.faces(k);
    std::vector<int> rank(top + 3, 0);
    for (int k = 0; k <= top; ++k)
        rank[k + 1] = naive_rank(boundary_matrix(faces[k], faces[k + 1]), p);
    std::vector<int> out;
    for (int k = -1; k <= top; ++k)
        out.push_back(static_cast<int>(faces[k + 1].size()) - rank[k + 1] - rank[k + 2]);
    return out;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int m)
{
    std::uniform_int_distribution<VertexMask> pick(0, full_mask(m));
    std::vector<VertexMask> facets;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i)
        facets.push_back(pick(rng));
    return SimplicialComplex::from_facets(m, facets);
}

} // namespace

TEST_CASE("from_facets keeps the maximal sets")
{
    const auto d = cx(3, {{1, 2}, {2, 3}, {1, 3}, {1}});
    CHECK(d.facets().size() == 3);
    CHECK(d == cx(3, {{1, 3}, {2, 3}, {1, 2}}));
    const auto irr = cx(2, {{}});
    CHECK(irr == SimplicialComplex::irrelevant(2));
    CHECK(irr.dimension() == -1);
    const auto v = cx(2, {});
    CHECK(v.is_void());
    CHECK(v != irr);
    CHECK_THROWS_AS(cx(2, {{3}}), InputError);
}

TEST_CASE("Alexander duality")
{
    CHECK(alexander_dual(SimplicialComplex::irrelevant(2)) == cx(2, {{1}, {2}}));
    CHECK(alexander_dual(cx(3, {{1, 2, 3}})).is_void());
    CHECK(alexander_dual(SimplicialComplex::void_complex(3)) == cx(3, {{1, 2, 3}}));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i)
    {
        const auto d = random_complex(rng, 2 + i % 5);
        CHECK(alexander_dual(alexander_dual(d)) == d);
        CHECK(alexander_dual(d) == brute_dual(d));
    }
}

TEST_CASE("links")
{
    const auto hollow = cx(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(link(hollow, vertex_bit(1)) == cx(3, {{2}, {3}}));
    CHECK(link(hollow, 0) == hollow);
    CHECK(link(cx(3, {{1, 2, 3}}), vertex_bit(1) | vertex_bit(2)) == cx(3, {{3}}));
    CHECK_THROWS_AS(link(hollow, full_mask(3)), InputError);
}

TEST_CASE("cones")
{
    CHECK(is_cone(cx(3, {{1, 2}, {1, 3}})) == 1);
    CHECK_FALSE(is_cone(cx(3, {{1, 2}, {2, 3}, {1, 3}})).has_value());
    CHECK_FALSE(is_cone(SimplicialComplex::irrelevant(3)).has_value());
}

TEST_CASE("reduced homology")
{
    const auto q = FieldSpec::rationals();
    const auto f2 = FieldSpec::prime_field(2);
    const auto hollow = reduced_homology(cx(3, {{1, 2}, {2, 3}, {1, 3}}), q);
    CHECK(hollow.dims == std::vector<int>{0, 0, 1});
    // Independence complex of two disjoint edges: the square on a1 b2 a2 b1.
    const auto square = reduced_homology(cx(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}), q);
    CHECK(square(1) == 1);
    CHECK(square.top_degree() == 1);
    CHECK(reduced_homology(SimplicialComplex::void_complex(3), q).acyclic());
    CHECK(reduced_homology(SimplicialComplex::irrelevant(3), q).dims == std::vector<int>{1});
    CHECK(reduced_homology(cx(2, {{1}, {2}}), q)(0) == 1);

    const auto hq = reduced_homology(rp2(), q);
    const auto h2 = reduced_homology(rp2(), f2);
    CHECK(hq(1) == 0);
    CHECK(hq(2) == 0);
    CHECK(h2(1) == 1);
    CHECK(h2(2) == 1);
    CHECK(naive_dims(rp2(), 0) == hq.dims);
    CHECK(naive_dims(rp2(), 2) == h2.dims);
}

TEST_CASE("homology properties on random complexes")
{
    std::mt19937_64 rng(8);
    const auto q = FieldSpec::rationals();
    const auto f2 = FieldSpec::prime_field(2);
    for (int i = 0; i < 200; ++i)
    {
        const auto d = random_complex(rng, 2 + i % 5);
        const auto h = reduced_homology(d, q);
        CHECK(h.dims == naive_dims(d, 0));
        CHECK(reduced_homology(d, f2).dims == naive_dims(d, 2));
        if (is_cone(d))
            CHECK(h.acyclic());
        CHECK(dual_homology_check(d, q));
        CHECK(dual_homology_check(d, f2));
    }
}
