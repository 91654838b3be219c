#include "coverdepth/matching.hpp"

#include <algorithm>
#include <unordered_map>

namespace coverdepth
{

VertexMask OrderedMatching::free_side() const
{
    VertexMask m = 0;
    for (const auto& p : pairs)
        m |= vertex_bit(p.free);
    return m;
}

VertexMask OrderedMatching::partner_side() const
{
    VertexMask m = 0;
    for (const auto& p : pairs)
        m |= vertex_bit(p.partner);
    return m;
}

Matching OrderedMatching::edges() const
{
    Matching out;
    for (const auto& p : pairs)
        out.push_back({std::min(p.free, p.partner), std::max(p.free, p.partner)});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrientedPair> OrderedMatching::sorted_pairs() const
{
    auto out = pairs;
    std::sort(out.begin(), out.end());
    return out;
}

VertexMask covered_vertices(std::span<const Edge> edges)
{
    VertexMask m = 0;
    for (const auto& e : edges)
        m |= vertex_bit(e.u) | vertex_bit(e.v);
    return m;
}

bool is_matching(const Graph& g, std::span<const Edge> edges)
{
    VertexMask used = 0;
    for (const auto& e : edges)
    {
        if (e.u < 1 || e.v > g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
            return false;
        VertexMask ends = vertex_bit(e.u) | vertex_bit(e.v);
        if (used & ends)
            return false;
        used |= ends;
    }
    return true;
}

namespace
{

int max_matching_on(const Graph& g, VertexMask mask, std::unordered_map<VertexMask, int>& memo)
{
    // Drop vertices with no neighbour inside the mask.
    VertexMask live = 0;
    for (VertexMask rest = mask; rest; rest &= rest - 1)
    {
        int v = std::countr_zero(rest) + 1;
        if (g.neighbors(v) & mask)
            live |= vertex_bit(v);
    }
    if (!live)
        return 0;
    if (auto it = memo.find(live); it != memo.end())
        return it->second;
    int v = std::countr_zero(live) + 1;
    VertexMask without_v = live & ~vertex_bit(v);
    int best = max_matching_on(g, without_v, memo);
    for (VertexMask nb = g.neighbors(v) & live; nb; nb &= nb - 1)
    {
        int u = std::countr_zero(nb) + 1;
        best = std::max(best, 1 + max_matching_on(g, without_v & ~vertex_bit(u), memo));
    }
    memo.emplace(live, best);
    return best;
}

void induced_search(const Graph& g, std::size_t next, VertexMask blocked, int current, int& best)
{
    best = std::max(best, current);
    const auto edges = g.edges();
    if (current + static_cast<int>(edges.size() - next) <= best)
        return;
    for (std::size_t i = next; i < edges.size(); ++i)
    {
        const auto& e = edges[i];
        VertexMask ends = vertex_bit(e.u) | vertex_bit(e.v);
        if (blocked & ends)
            continue;
        VertexMask closed = ends | g.neighbors(e.u) | g.neighbors(e.v);
        induced_search(g, i + 1, blocked | closed, current + 1, best);
    }
}

void matching_search(const Graph& g, std::size_t next, VertexMask used, int remaining, Matching& current,
                     std::vector<Matching>& out)
{
    if (remaining == 0)
    {
        out.push_back(current);
        return;
    }
    const auto edges = g.edges();
    for (std::size_t i = next; i + remaining <= edges.size(); ++i)
    {
        const auto& e = edges[i];
        VertexMask ends = vertex_bit(e.u) | vertex_bit(e.v);
        if (used & ends)
            continue;
        current.push_back(e);
        matching_search(g, i + 1, used | ends, remaining - 1, current, out);
        current.pop_back();
    }
}

// Calls `visit(free_mask)` for every choice of one endpoint per edge whose
// chosen endpoints form an independent set.
template <typename Visit>
void for_each_orientation(const Graph& g, std::span<const Edge> m, std::size_t i, VertexMask free_side, Visit&& visit)
{
    if (i == m.size())
    {
        visit(free_side);
        return;
    }
    for (int end : {m[i].u, m[i].v})
        if (!(g.neighbors(end) & free_side))
            for_each_orientation(g, m, i + 1, free_side | vertex_bit(end), visit);
}

} // namespace

int matching_number(const Graph& g)
{
    std::unordered_map<VertexMask, int> memo;
    return max_matching_on(g, g.vertices(), memo);
}

int induced_matching_number(const Graph& g)
{
    int best = 0;
    induced_search(g, 0, 0, 0, best);
    return best;
}

bool is_cameron_walker(const Graph& g) { return induced_matching_number(g) == matching_number(g); }

std::vector<Matching> enumerate_matchings(const Graph& g, int size)
{
    std::vector<Matching> out;
    if (size < 0)
        return out;
    Matching current;
    matching_search(g, 0, 0, size, current, out);
    return out;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g)
{
    if (g.order() % 2)
        return {};
    return enumerate_matchings(g, g.order() / 2);
}

std::optional<std::string> check_ordered_matching(const Graph& g, const OrderedMatching& om)
{
    VertexMask used = 0;
    for (const auto& p : om.pairs)
    {
        if (p.free < 1 || p.partner < 1 || p.free > g.order() || p.partner > g.order() || p.free == p.partner)
            return "pair (" + std::to_string(p.free) + "," + std::to_string(p.partner) + ") out of range";
        if (!g.adjacent(p.free, p.partner))
            return "pair (" + std::to_string(p.free) + "," + std::to_string(p.partner) + ") is not an edge";
        VertexMask ends = vertex_bit(p.free) | vertex_bit(p.partner);
        if (used & ends)
            return "pairs are not vertex-disjoint";
        used |= ends;
    }
    if (!is_independent(g, om.free_side()))
        return "free parameter set is not independent";
    for (std::size_t i = 0; i < om.pairs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(om.pairs[i].free, om.pairs[j].partner))
                return "edge {" + std::to_string(om.pairs[i].free) + "," + std::to_string(om.pairs[j].partner) +
                       "} joins u_" + std::to_string(i + 1) + " to v_" + std::to_string(j + 1) +
                       " with a smaller index";
    return std::nullopt;
}

OrderingResult ordering_feasibility(const Graph& g, std::span<const Edge> matching, VertexMask free_side)
{
    std::vector<OrientedPair> pairs;
    for (const auto& e : matching)
    {
        bool u_free = free_side & vertex_bit(e.u);
        bool v_free = free_side & vertex_bit(e.v);
        if (u_free == v_free)
            return {OrderingStatus::FreeSideNotIndependent, std::nullopt};
        pairs.push_back(u_free ? OrientedPair{e.u, e.v} : OrientedPair{e.v, e.u});
    }
    std::sort(pairs.begin(), pairs.end());
    VertexMask a = 0;
    for (const auto& p : pairs)
        a |= vertex_bit(p.free);
    if (!is_independent(g, a))
        return {OrderingStatus::FreeSideNotIndependent, std::nullopt};

    const std::size_t s = pairs.size();
    std::vector<int> indegree(s, 0);
    std::vector<std::vector<std::size_t>> arcs(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i != j && g.adjacent(pairs[i].free, pairs[j].partner))
            {
                arcs[i].push_back(j);
                ++indegree[j];
            }

    OrderedMatching out;
    std::vector<bool> done(s, false);
    for (std::size_t step = 0; step < s; ++step)
    {
        std::size_t pick = s;
        for (std::size_t i = 0; i < s; ++i)
            if (!done[i] && indegree[i] == 0)
            {
                pick = i;
                break;
            }
        if (pick == s)
            return {OrderingStatus::CyclicConstraints, std::nullopt};
        done[pick] = true;
        out.pairs.push_back(pairs[pick]);
        for (auto j : arcs[pick])
            --indegree[j];
    }
    return {OrderingStatus::Ordered, std::move(out)};
}

namespace
{

std::vector<OrderedMatching> ordered_matchings_of_size(const Graph& g, int size, bool first_only)
{
    std::vector<OrderedMatching> out;
    for (const auto& m : enumerate_matchings(g, size))
    {
        for_each_orientation(g, m, 0, 0, [&](VertexMask free_side) {
            if (first_only && !out.empty())
                return;
            auto res = ordering_feasibility(g, m, free_side);
            if (res.status == OrderingStatus::Ordered)
                out.push_back(std::move(*res.ordered));
        });
        if (first_only && !out.empty())
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const OrderedMatching& x, const OrderedMatching& y) { return x.sorted_pairs() < y.sorted_pairs(); });
    return out;
}

} // namespace

int ordered_matching_number(const Graph& g)
{
    for (int s = matching_number(g); s > 0; --s)
        if (!ordered_matchings_of_size(g, s, true).empty())
            return s;
    return 0;
}

std::vector<OrderedMatching> enumerate_max_ordered_matchings(const Graph& g)
{
    for (int s = matching_number(g); s > 0; --s)
        if (auto all = ordered_matchings_of_size(g, s, false); !all.empty())
            return all;
    return {};
}

std::optional<OrderedMatching> has_perfect_ordered_matching(const Graph& g)
{
    if (g.order() % 2)
        return std::nullopt;
    auto found = ordered_matchings_of_size(g, g.order() / 2, true);
    if (found.empty())
        return std::nullopt;
    return found.front();
}

bool unique_perfect_matching_check(const Graph& g) { return enumerate_perfect_matchings(g).size() == 1; }

} // namespace coverdepth
