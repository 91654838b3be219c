#include "catch_amalgamated.hpp"

#include "coverdepth/corpus.hpp"
#include "coverdepth/depth_engine.hpp"
#include "coverdepth/errors.hpp"

#include <random>

using namespace coverdepth;

namespace
{

// Local cohomology by the degree-complex formula, scanning every alpha in
// {-1..n+1}^r with no cap tied to the engine's search.
int definitional_depth(const Graph& g, int n, const FieldSpec& field)
{
    const int r = g.order();
    int best = r + 1;
    DegreeVector alpha = DegreeVector::zero(r);
    for (int v = 1; v <= r; ++v)
        alpha[v] = -1;
    while (true)
    {
        if (alpha.negative_support() != full_mask(r))
        {
            const auto dc = degree_complex(g, n, alpha);
            const auto h = reduced_homology(dc.complex, field);
            for (std::size_t k = 0; k < h.dims.size(); ++k)
                if (h.dims[k] != 0)
                {
                    const int d = static_cast<int>(k) - 1;
                    best = std::min(best, d + dc.negative_count + 1);
                    break;
                }
        }
        int v = 1;
        while (v <= r && alpha[v] == n + 1)
            alpha[v++] = -1;
        if (v > r)
            break;
        ++alpha[v];
    }
    return best;
}

void check_witness(const Graph& g, const DepthWitness& w, const FieldSpec& field)
{
    const auto dc = degree_complex(g, w.n, w.alpha);
    const auto h = reduced_homology(dc.complex, field);
    CHECK(h(w.degree) != 0);
    CHECK(w.depth == w.degree + dc.negative_count + 1);
}

} // namespace

TEST_CASE("depth examples")
{
    CHECK(depth_symbolic(path_graph(2), 1) == 0);
    for (int n = 1; n <= 3; ++n)
        CHECK(depth_symbolic(cycle_graph(5), n) == 2);
    CHECK(depth_symbolic(path_graph(4), 1) == 2);
    CHECK(depth_symbolic(path_graph(4), 2) == 1);
}

TEST_CASE("regularity of edge ideals")
{
    CHECK(reg_edge_ideal(path_graph(2)) == 2);
    CHECK(reg_edge_ideal(path_graph(4)) == 2);
    CHECK(reg_edge_ideal(cycle_graph(5)) == 3);
    CHECK(reg_edge_ideal(cycle_graph(7)) == 3);
    CHECK(reg_edge_ideal(cycle_graph(8)) == 4);
    CHECK(reg_edge_ideal(disjoint_edges(3)) == 4);
}

TEST_CASE("depth profiles")
{
    const auto c7 = depth_profile(cycle_graph(7));
    CHECK(c7.nu0 == 3);
    CHECK(c7.limit_depth == 3);
    CHECK(c7.profile == std::map<int, int>{{1, 4}, {2, 4}, {3, 3}, {4, 3}, {5, 3}});
    CHECK(c7.sdstab == 3);

    const auto p6 = depth_profile(path_graph(6));
    CHECK(p6.profile == std::map<int, int>{{1, 3}, {2, 3}, {3, 2}, {4, 2}, {5, 2}});
    CHECK(p6.sdstab == 3);

    const auto c4 = depth_profile(cycle_graph(4));
    CHECK(c4.profile == std::map<int, int>{{1, 2}});
    CHECK(c4.sdstab == 1);

    for (const auto& w : c7.witnesses)
        check_witness(cycle_graph(7), w, FieldSpec::rationals());
}

TEST_CASE("oracle agrees with the definitional scan")
{
    std::vector<Graph> graphs = {path_graph(2), path_graph(3), path_graph(4), path_graph(5),
                                 cycle_graph(3), cycle_graph(4), cycle_graph(5), complete_bipartite(2, 3)};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 12; ++i)
        graphs.push_back(random_graph(3 + i % 3, 0.5, rng));
    for (const auto& g : graphs)
        for (int n = 1; n <= 3; ++n)
        {
            INFO(format_graph(g) << " n=" << n);
            CHECK(depth_symbolic(g, n) == definitional_depth(g, n, FieldSpec::rationals()));
        }
}

TEST_CASE("depth of the first power is r minus reg")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i)
    {
        const Graph g = random_graph(3 + i % 6, 0.4, rng);
        CHECK(depth_symbolic(g, 1) == g.order() - reg_edge_ideal(g));
    }
}

TEST_CASE("witnesses are valid and thread-independent")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 8; ++i)
    {
        const Graph g = random_graph(5 + i % 3, 0.45, rng);
        OracleOptions one, four;
        one.threads = 1;
        four.threads = 4;
        const auto a = depth_profile(g, one);
        const auto b = depth_profile(g, four);
        CHECK(a.profile == b.profile);
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t k = 0; k < a.witnesses.size(); ++k)
        {
            CHECK(a.witnesses[k].alpha == b.witnesses[k].alpha);
            CHECK(a.witnesses[k].degree == b.witnesses[k].degree);
            check_witness(g, a.witnesses[k], FieldSpec::rationals());
        }
    }
}

TEST_CASE("certificates")
{
    const auto fig1 = sdstab_certificate(fig1_graph());
    CHECK(fig1.sdstab == 7);
    CHECK(satisfies_certificate(fig1_graph(), fig1.matching, fig1.witness));
    CHECK(fig1.witness.target == 7);
    CHECK_FALSE(certificate_at(fig1_graph(), fig1.matching, 6).has_value());

    CHECK(sdstab_certificate(family_graph(1)).sdstab == 2);

    const auto p2 = sdstab_certificate(path_graph(2));
    CHECK(p2.sdstab == 1);
    CHECK(p2.witness.restricted() == std::vector<int>{0, 0});

    CHECK_THROWS_AS(sdstab_certificate(cycle_graph(5)), InputError);
}

TEST_CASE("closed forms and modes")
{
    const std::vector<int> paths = {1, 1, 2, 1, 3, 2, 4};
    for (int r = 2; r <= 8; ++r)
        CHECK(closed_form_sdstab(path_graph(r)) == paths[r - 2]);
    CHECK(closed_form_sdstab(cycle_graph(5)) == 1);
    CHECK(closed_form_sdstab(cycle_graph(7)) == 3);
    CHECK(closed_form_sdstab(cycle_graph(8)) == 1);
    CHECK(closed_form_sdstab(cycle_graph(12)) == 3);
    CHECK_FALSE(closed_form_sdstab(fig1_graph()).has_value());

    for (int r = 2; r <= 7; ++r)
        CHECK(sdstab(path_graph(r), SdstabMode::Oracle).value == paths[r - 2]);
    for (int r = 3; r <= 7; ++r)
        CHECK(sdstab(cycle_graph(r), SdstabMode::Oracle).value == *closed_form_sdstab(cycle_graph(r)));

    const auto automatic = sdstab(fig3_graph(), SdstabMode::Auto);
    CHECK(automatic.value == 3);
    CHECK(automatic.method == "certificate");
    CHECK(sdstab(cycle_graph(7), SdstabMode::Auto).method == "closed-form");
    CHECK_THROWS_AS(sdstab(fig1_graph(), SdstabMode::ClosedForm), InputError);
    CHECK(parse_sdstab_mode("oracle") == SdstabMode::Oracle);
    CHECK_THROWS_AS(parse_sdstab_mode("bogus"), InputError);
}

TEST_CASE("budget and input guards")
{
    CHECK_THROWS_AS(depth_profile(path_graph(13)), BudgetExceeded);
    OracleOptions tiny;
    tiny.budget = 1;
    CHECK_THROWS_AS(depth_profile(cycle_graph(5), tiny), BudgetExceeded);
    CHECK(oracle_cost_estimate(cycle_graph(6), 5) > oracle_cost_estimate(cycle_graph(5), 5));
    CHECK_THROWS_AS(depth_profile(Graph(3, {}, Edgeless::Allow)), InputError);
}
