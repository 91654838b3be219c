#include "catch_amalgamated.hpp"

#include "coverdepth/degree_complex.hpp"
#include "coverdepth/errors.hpp"

#include <random>

using namespace coverdepth;

namespace
{

using Facets = std::vector<std::vector<int>>;

SimplicialComplex cx(int m, const Facets& f) { return SimplicialComplex::from_facets(m, f); }

// Face test by localisation: F is a face iff x^alpha, with the variables of F
// and of the negative support inverted, lies outside the symbolic power.
SimplicialComplex definitional_degree_complex(const Graph& g, int n, const DegreeVector& alpha,
                                              std::vector<int>& to_host)
{
    to_host.clear();
    for (int v = 1; v <= g.order(); ++v)
        if (alpha[v] >= 0)
            to_host.push_back(v);
    const int w = static_cast<int>(to_host.size());
    std::vector<VertexMask> faces;
    for (VertexMask f = 0; f < (VertexMask{1} << w); ++f)
    {
        DegreeVector shifted = alpha;
        for (int v = 1; v <= g.order(); ++v)
            if (alpha[v] < 0)
                shifted[v] = n;
        for (int i = 0; i < w; ++i)
            if (f & vertex_bit(i + 1))
                shifted[to_host[i]] = n;
        if (!symbolic_membership(g, n, shifted))
            faces.push_back(f);
    }
    return SimplicialComplex::from_facets(w, faces);
}

DegreeVector random_alpha(std::mt19937_64& rng, int r, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    DegreeVector a = DegreeVector::zero(r);
    for (int v = 1; v <= r; ++v)
        a[v] = d(rng);
    return a;
}

} // namespace

TEST_CASE("cover complexes")
{
    CHECK(cover_complex(path_graph(2)) == SimplicialComplex::irrelevant(2));
    CHECK(cover_complex(path_graph(3)) == cx(3, {{3}, {1}}));
    CHECK(cover_complex(cycle_graph(3)) == cx(3, {{1}, {2}, {3}}));
    CHECK_THROWS_AS(cover_complex(Graph(3, {}, Edgeless::Allow)), InputError);
}

TEST_CASE("independence complexes")
{
    CHECK(independence_complex(path_graph(4)) == cx(4, {{1, 3}, {1, 4}, {2, 4}}));
    CHECK(independence_complex(cycle_graph(5)) == cx(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));
    CHECK(independence_complex(Graph(2, {}, Edgeless::Allow)) == cx(2, {{1, 2}}));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i)
    {
        const Graph g = random_graph(2 + i % 7, 0.4, rng);
        CHECK(alexander_dual(cover_complex(g)) == independence_complex(g));
    }
}

TEST_CASE("symbolic membership")
{
    const Graph p3 = path_graph(3);
    CHECK(symbolic_membership(p3, 1, {0, 1, 0}));
    CHECK_FALSE(symbolic_membership(p3, 2, {0, 1, 0}));
    CHECK(symbolic_membership(p3, 2, {1, 1, 1}));
    CHECK(symbolic_membership(p3, 2, {0, 2, 0}));
    CHECK_FALSE(symbolic_membership(p3, 3, {1, 1, 5}));
    CHECK_THROWS_AS(symbolic_membership(p3, 0, {0, 0, 0}), InputError);
    CHECK_THROWS_AS(symbolic_membership(p3, 1, {-1, 0, 0}), InputError);
}

TEST_CASE("degree complex examples")
{
    CHECK(degree_complex(path_graph(2), 1, {0, 0}).complex == SimplicialComplex::irrelevant(2));
    CHECK(degree_complex(cycle_graph(3), 1, {1, 1, 1}).complex.is_void());
    CHECK(degree_complex(path_graph(3), 2, {0, 1, 0}).complex == cx(3, {{3}, {1}}));

    const auto neg = degree_complex(path_graph(4), 1, {-1, 0, 0, 0});
    CHECK(neg.negative_count == 1);
    CHECK(neg.to_host == std::vector<int>{2, 3, 4});
    CHECK(neg.complex == cx(3, {{3}, {1}}));

    const auto all_neg = degree_complex(path_graph(2), 1, {-1, -3});
    CHECK(all_neg.complex.is_void());
    CHECK(all_neg.negative_count == 2);

    const auto q = qualifying_graph(path_graph(4), 2, {0, 1, 3, 0});
    CHECK(q.graph.order() == 4);
    CHECK(q.graph.size() == 1);
    CHECK(q.graph.adjacent(1, 2));
    CHECK_THROWS_AS(qualifying_graph(path_graph(2), 1, {-1, -1}), InputError);
}

TEST_CASE("degree complex agrees with the localisation definition")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i)
    {
        const int r = 2 + i % 6;
        const Graph g = random_graph(r, 0.5, rng);
        const int n = 1 + static_cast<int>(rng() % 4);
        const DegreeVector alpha = random_alpha(rng, r, -2, n + 1);
        if (alpha.negative_support() == full_mask(r))
            continue;
        std::vector<int> to_host;
        const auto expected = definitional_degree_complex(g, n, alpha, to_host);
        const auto dc = degree_complex(g, n, alpha);
        CHECK(dc.complex == expected);
        CHECK(dc.to_host == to_host);
        CHECK(dc.negative_count == std::popcount(alpha.negative_support()));
    }
}

TEST_CASE("degree complex structural properties")
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 300; ++i)
    {
        const int r = 2 + i % 7;
        const Graph g = random_graph(r, 0.45, rng);
        const int n = 1 + static_cast<int>(rng() % 4);
        const DegreeVector alpha = random_alpha(rng, r, -1, n);
        if (alpha.negative_support() == full_mask(r))
            continue;
        const auto dc = degree_complex(g, n, alpha);
        const auto q = qualifying_graph(g, n, alpha);

        CHECK(dc.complex.is_void() == q.graph.edgeless());
        CHECK(degree_complex(g, n, alpha.normalized()).complex == dc.complex);
        if (dc.complex.is_void())
            continue;
        CHECK(alexander_dual(dc.complex) == independence_complex(q.graph));

        VertexMask covered = 0;
        for (const auto& e : q.graph.edges())
            covered |= vertex_bit(e.u) | vertex_bit(e.v);
        CHECK(is_cone(dc.complex).has_value() == (covered != q.graph.vertices()));

        // Raising a nonnegative entry can only remove faces.
        if (alpha.negative_support() == 0)
        {
            DegreeVector bigger = alpha;
            bigger[1 + static_cast<int>(rng() % r)] += 1;
            const auto smaller = degree_complex(g, n, bigger).complex;
            for (VertexMask f : smaller.facets())
                CHECK(dc.complex.contains(f));
        }
    }
}
