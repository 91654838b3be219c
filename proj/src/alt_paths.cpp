#include "coverdepth/alt_paths.hpp"

#include "coverdepth/errors.hpp"

#include <algorithm>
#include <functional>

namespace coverdepth
{

namespace
{

void require_ordered(const Graph& g, const OrderedMatching& om)
{
    if (auto why = check_ordered_matching(g, om))
        throw InputError("not an ordered matching: " + *why);
    if (om.pairs.empty())
        throw InputError("ordered matching is empty");
}

} // namespace

std::map<int, int> admissible_lengths(const Graph& g, const OrderedMatching& om)
{
    require_ordered(g, om);
    const std::size_t s = om.size();
    // k_i = 1 + max{k_j : {u_i, v_j} in E, j != i}; arcs only go to larger indices.
    std::vector<int> k(s, 1);
    for (std::size_t i = s; i-- > 0;)
        for (std::size_t j = i + 1; j < s; ++j)
            if (g.adjacent(om.pairs[i].free, om.pairs[j].partner))
                k[i] = std::max(k[i], k[j] + 1);
    std::map<int, int> out;
    for (std::size_t i = 0; i < s; ++i)
        out[om.pairs[i].partner] = 2 * k[i] - 1;
    return out;
}

int ell0(const std::map<int, int>& lengths)
{
    int best = 0;
    for (const auto& [v, len] : lengths)
        best = std::max(best, len);
    return best;
}

int ell1(const Graph& g, const OrderedMatching& om, const std::map<int, int>& lengths)
{
    const VertexMask b = om.partner_side();
    int best = 0;
    for (const auto& e : g.edges())
        if ((b & vertex_bit(e.u)) && (b & vertex_bit(e.v)))
            best = std::max(best, lengths.at(e.u) + lengths.at(e.v) + 1);
    return best;
}

int ell_formula(const Graph& g, const OrderedMatching& om)
{
    auto lengths = admissible_lengths(g, om);
    return std::max(ell0(lengths), ell1(g, om, lengths));
}

AltPathProfile alt_path_profile(const Graph& g, const OrderedMatching& om, bool with_walk)
{
    AltPathProfile p;
    p.matching = om;
    p.ell_v = admissible_lengths(g, om);
    p.ell0 = ell0(p.ell_v);
    p.ell1 = ell1(g, om, p.ell_v);
    p.ell_formula = std::max(p.ell0, p.ell1);
    if (with_walk)
        p.ell_walk = ell_walk(g, om, default_walk_cutoff(om));
    return p;
}

int ell_walk(const Graph& g, const OrderedMatching& om, int cutoff)
{
    require_ordered(g, om);
    const int r = g.order();
    std::vector<int> mate(r + 1, 0);
    for (const auto& p : om.pairs)
    {
        mate[p.free] = p.partner;
        mate[p.partner] = p.free;
    }
    // state = 2*(v-1) + (next edge must be in M ? 1 : 0)
    enum : char { Unvisited, OnStack, Done };
    std::vector<char> mark(2 * r, Unvisited);
    std::vector<int> longest(2 * r, 0);

    std::function<int(int, bool)> visit = [&](int v, bool need_matched) -> int {
        const int state = 2 * (v - 1) + (need_matched ? 1 : 0);
        if (mark[state] == Done)
            return longest[state];
        if (mark[state] == OnStack)
            throw WalkCutoffExceeded("alternating walk state graph has a cycle at vertex " + std::to_string(v));
        mark[state] = OnStack;
        int best = 0;
        if (need_matched)
        {
            if (mate[v])
                best = 1 + visit(mate[v], false);
        }
        else
        {
            for (int w : mask_vertices(g.neighbors(v)))
                if (w != mate[v])
                    best = std::max(best, 1 + visit(w, true));
        }
        if (best >= cutoff)
            throw WalkCutoffExceeded("alternating walk reached cutoff " + std::to_string(cutoff));
        mark[state] = Done;
        longest[state] = best;
        return best;
    };

    int best = 0;
    for (int v = 1; v <= r; ++v)
        best = std::max({best, visit(v, true), visit(v, false)});
    return best;
}

EllGraphResult ell_graph(const Graph& g)
{
    if (g.edgeless())
        throw InputError("ell_graph needs at least one edge");
    EllGraphResult out;
    bool first = true;
    for (const auto& om : enumerate_max_ordered_matchings(g))
    {
        ++out.matchings_examined;
        int ell = ell_formula(g, om);
        if (first || ell < out.ell)
        {
            out.ell = ell;
            out.argmin = om;
            first = false;
        }
    }
    return out;
}

std::vector<int> CertificateVector::restricted() const
{
    std::vector<int> out;
    for (int v : mask_vertices(support))
        out.push_back(values(v - 1));
    return out;
}

bool satisfies_certificate(const Graph& g, std::span<const Edge> matching, const CertificateVector& cert)
{
    const VertexMask support = covered_vertices(matching);
    const int n = cert.target;
    for (const auto& e : g.edges())
    {
        if (!(support & vertex_bit(e.u)) || !(support & vertex_bit(e.v)))
            continue;
        const int sum = cert[e.u] + cert[e.v];
        const bool in_matching = std::find(matching.begin(), matching.end(), e) != matching.end();
        if (in_matching ? sum > n - 1 : sum < n)
            return false;
    }
    for (int v : mask_vertices(support))
        if (cert[v] < 0)
            return false;
    return true;
}

CertificateVector alpha_assignment(const Graph& g, const OrderedMatching& om)
{
    const auto lengths = admissible_lengths(g, om);
    const int k = (ell0(lengths) + 1) / 2;
    CertificateVector alpha{Eigen::VectorXi::Zero(g.order()), om.covered(), k};
    for (const auto& p : om.pairs)
    {
        const int ki = (lengths.at(p.partner) + 1) / 2;
        alpha.values(p.free - 1) = ki - 1;
        alpha.values(p.partner - 1) = k - ki;
    }
    const VertexMask a = om.free_side(), b = om.partner_side();
    for (const auto& e : g.edges())
    {
        const bool ab = ((a & vertex_bit(e.u)) && (b & vertex_bit(e.v))) ||
                        ((b & vertex_bit(e.u)) && (a & vertex_bit(e.v)));
        if (!ab)
            continue;
        const int sum = alpha[e.u] + alpha[e.v];
        const bool paired = std::any_of(om.pairs.begin(), om.pairs.end(), [&](const OrientedPair& p) {
            return (p.free == e.u && p.partner == e.v) || (p.free == e.v && p.partner == e.u);
        });
        if (paired ? sum != k - 1 : sum < k)
            throw InternalError("alpha assignment violates its defining inequalities on edge {" +
                                std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    return alpha;
}

CertificateVector beta_certificate(const Graph& g, const OrderedMatching& om)
{
    return beta_certificate(g, om, (ell_formula(g, om) + 1) / 2);
}

CertificateVector beta_certificate(const Graph& g, const OrderedMatching& om, int n)
{
    CertificateVector alpha = alpha_assignment(g, om);
    const int k = alpha.target;
    const int floor_n = (ell_formula(g, om) + 1) / 2;
    if (n < floor_n)
        throw InputError("beta certificate needs n >= " + std::to_string(floor_n));
    CertificateVector beta{alpha.values, alpha.support, n};
    for (const auto& p : om.pairs)
        beta.values(p.partner - 1) = n - k + alpha[p.partner];
    if (!satisfies_certificate(g, om.edges(), beta))
        throw InternalError("beta certificate fails its pair/cross inequalities at n = " + std::to_string(n));
    return beta;
}

} // namespace coverdepth
