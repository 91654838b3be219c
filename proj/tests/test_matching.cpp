#include "catch_amalgamated.hpp"

#include "coverdepth/corpus.hpp"
#include "coverdepth/matching.hpp"

#include <random>
#include <set>

using namespace coverdepth;

namespace
{

OrderedMatching om_of(std::initializer_list<std::pair<int, int>> pairs)
{
    OrderedMatching om;
    for (auto [u, v] : pairs)
        om.pairs.push_back({u, v});
    return om;
}

// Brute force over all edge subsets.
std::pair<int, int> brute_nu_and_induced(const Graph& g)
{
    const auto edges = g.edges();
    int nu = 0, induced = 0;
    for (std::uint32_t s = 0; s < (1u << edges.size()); ++s)
    {
        Matching m;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (s >> i & 1)
                m.push_back(edges[i]);
        if (!is_matching(g, m))
            continue;
        nu = std::max<int>(nu, m.size());
        const VertexMask cover = covered_vertices(m);
        std::size_t inner = 0;
        for (const auto& e : edges)
            inner += (cover & vertex_bit(e.u)) && (cover & vertex_bit(e.v));
        if (inner == m.size())
            induced = std::max<int>(induced, m.size());
    }
    return {nu, induced};
}

} // namespace

TEST_CASE("matching numbers")
{
    CHECK(matching_number(path_graph(4)) == 2);
    CHECK(matching_number(cycle_graph(5)) == 2);
    CHECK(matching_number(cycle_graph(8)) == 4);
    CHECK(induced_matching_number(path_graph(4)) == 1);
    CHECK(induced_matching_number(disjoint_edges(2)) == 2);
    CHECK(induced_matching_number(path_graph(6)) == 2);
}

TEST_CASE("Cameron-Walker test")
{
    CHECK(is_cameron_walker(complete_bipartite(1, 3)));
    CHECK_FALSE(is_cameron_walker(path_graph(4)));
    for (int k = 1; k <= 4; ++k)
        CHECK(is_cameron_walker(disjoint_edges(k)));
}

TEST_CASE("ordered matching validity")
{
    CHECK(is_ordered_matching(fig3_graph(), om_of({{1, 5}, {2, 6}, {3, 7}, {4, 8}})));
    const auto why = check_ordered_matching(cycle_graph(4), om_of({{1, 2}, {3, 4}}));
    REQUIRE(why.has_value());
    CHECK(why->find("smaller index") != std::string::npos);
    CHECK(is_ordered_matching(path_graph(2), om_of({{2, 1}})));
    CHECK_FALSE(is_ordered_matching(path_graph(3), om_of({{1, 3}})));
    CHECK(check_ordered_matching(path_graph(4), om_of({{2, 1}, {3, 4}}))->find("independent") != std::string::npos);
}

TEST_CASE("ordered matching numbers")
{
    CHECK(ordered_matching_number(cycle_graph(4)) == 1);
    CHECK(ordered_matching_number(path_graph(5)) == 2);
    CHECK(ordered_matching_number(family_graph(2)) == 4);
    for (int r = 4; r <= 9; ++r)
        CHECK(ordered_matching_number(cycle_graph(r)) == (r % 2 ? (r - 1) / 2 : r / 2 - 1));
}

TEST_CASE("ordering feasibility")
{
    const auto g = fig1_graph();
    const Matching m{{1, 5}, {2, 6}, {3, 7}, {4, 8}};
    auto res = ordering_feasibility(g, m, VertexSet({1, 2, 3, 4}).mask());
    REQUIRE(res.status == OrderingStatus::Ordered);
    CHECK(*res.ordered == om_of({{1, 5}, {2, 6}, {3, 7}, {4, 8}}));

    const Matching c4{{1, 2}, {3, 4}};
    for (VertexMask free : {VertexMask{0b0101}, VertexMask{0b1001}, VertexMask{0b0110}, VertexMask{0b1010}})
        CHECK(ordering_feasibility(cycle_graph(4), c4, free).status != OrderingStatus::Ordered);
    CHECK(ordering_feasibility(cycle_graph(4), c4, 0b1001).status == OrderingStatus::FreeSideNotIndependent);
    CHECK(ordering_feasibility(cycle_graph(4), c4, 0b0101).status == OrderingStatus::CyclicConstraints);

    const Matching single{{1, 2}};
    CHECK(ordering_feasibility(path_graph(2), single, 0b01).status == OrderingStatus::Ordered);
}

TEST_CASE("perfect ordered matchings")
{
    auto pom = has_perfect_ordered_matching(fig1_graph());
    REQUIRE(pom.has_value());
    CHECK(pom->size() == 4);
    CHECK_FALSE(has_perfect_ordered_matching(path_graph(5)).has_value());
    CHECK_FALSE(has_perfect_ordered_matching(cycle_graph(4)).has_value());
    CHECK(unique_perfect_matching_check(fig1_graph()));
    CHECK_FALSE(unique_perfect_matching_check(cycle_graph(4)));
}

TEST_CASE("matching invariants on random graphs")
{
    std::mt19937_64 rng(11);
    int perfect = 0;
    for (int i = 0; i < 300; ++i)
    {
        const int r = 2 + i % 8;
        const auto g = random_graph(r, 0.45, rng);
        INFO(canonical_key(g));
        const auto [nu, induced] = brute_nu_and_induced(g);
        CHECK(matching_number(g) == nu);
        CHECK(induced_matching_number(g) == induced);
        const int nu0 = ordered_matching_number(g);
        CHECK(induced <= nu0);
        CHECK(nu0 <= nu);
        const auto all = enumerate_max_ordered_matchings(g);
        REQUIRE_FALSE(all.empty());
        std::set<std::vector<OrientedPair>> classes;
        for (const auto& om : all)
        {
            CHECK(is_ordered_matching(g, om));
            CHECK(static_cast<int>(om.size()) == nu0);
            CHECK(classes.insert(om.sorted_pairs()).second);
        }
        if (has_perfect_ordered_matching(g))
        {
            ++perfect;
            CHECK(unique_perfect_matching_check(g));
        }
    }
    CHECK(perfect > 10);
}

TEST_CASE("forests have nu0 = nu")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i)
    {
        const auto g = random_forest(2 + i % 9, rng);
        INFO(canonical_key(g));
        CHECK(ordered_matching_number(g) == matching_number(g));
    }
}
