#include "coverdepth/depth_engine.hpp"

#include "coverdepth/errors.hpp"
#include "coverdepth/runtime.hpp"
#include "coverdepth/simplicial.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace coverdepth
{

double oracle_cost_estimate(const Graph& g, int n_max)
{
    const double r = g.order();
    return std::ldexp(1.0, static_cast<int>(g.size())) * (std::max(1, n_max) * r + std::ldexp(1.0, g.order()));
}

void check_oracle_budget(const Graph& g, int n_max, const OracleOptions& options)
{
    const double estimate = oracle_cost_estimate(g, n_max);
    if (g.order() >= 13 && !options.allow_large)
        throw BudgetExceeded("oracle refuses graphs with 13 or more vertices (estimated cost " +
                                 std::to_string(estimate) + ")",
                             estimate);
    if (g.size() >= 63 || estimate > options.budget)
        throw BudgetExceeded("oracle cost estimate " + std::to_string(estimate) + " exceeds budget " +
                                 std::to_string(options.budget),
                             estimate);
}

namespace
{

struct Neighbour
{
    int vertex;
    bool tight; ///< qualifying edge: sum <= n-1; otherwise sum >= n
};

// Lexicographically smallest alpha on `order` (ascending host labels) meeting
// every edge constraint, values in 0..n-1.
bool search_alpha(const std::vector<int>& order, const std::vector<std::vector<Neighbour>>& earlier, std::size_t pos,
                  int n, std::vector<int>& alpha)
{
    if (pos == order.size())
        return true;
    const int w = order[pos];
    int lo = 0, hi = n - 1;
    for (const auto& nb : earlier[pos])
    {
        if (nb.tight)
            hi = std::min(hi, n - 1 - alpha[nb.vertex]);
        else
            lo = std::max(lo, n - alpha[nb.vertex]);
    }
    for (int value = lo; value <= hi; ++value)
    {
        alpha[w] = value;
        if (search_alpha(order, earlier, pos + 1, n, alpha))
            return true;
    }
    return false;
}

struct Best
{
    int depth = -1;
    std::uint64_t mask = 0;
    DepthWitness witness;
    bool set = false;

    void offer(int d, std::uint64_t m, DepthWitness w)
    {
        if (!set || d < depth || (d == depth && m < mask))
        {
            depth = d;
            mask = m;
            witness = std::move(w);
            set = true;
        }
    }
};

} // namespace

std::vector<DepthWitness> depth_symbolic_range(const Graph& g, int n_first, int n_last, const OracleOptions& options)
{
    if (g.edgeless())
        throw InputError("depth of the cover ideal needs at least one edge");
    if (n_first < 1 || n_last < n_first)
        throw InputError("symbolic power range must satisfy 1 <= first <= last");
    check_oracle_budget(g, n_last, options);

    const int r = g.order();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int count = n_last - n_first + 1;
    const std::uint64_t total = (std::uint64_t{1} << m) - 1;

    // Every (support, exponent) pair whose degree complex is neither void nor
    // a cone is determined by its qualifying edge set E': the surviving vertex
    // set is V(E'), the other induced edges must have sum >= n, and the
    // Alexander dual of the complex is the independence complex of (V(E'), E').
    auto evaluate = [&](std::uint64_t tight, std::vector<Best>& best) {
        VertexMask w = 0;
        for (std::uint64_t t = tight; t; t &= t - 1)
        {
            const auto& e = edges[std::countr_zero(t)];
            w |= vertex_bit(e.u) | vertex_bit(e.v);
        }
        const auto order = mask_vertices(w);
        std::vector<int> local(r + 1, 0);
        for (std::size_t i = 0; i < order.size(); ++i)
            local[order[i]] = static_cast<int>(i);
        std::vector<std::vector<Neighbour>> earlier(order.size());
        std::vector<Edge> local_edges;
        for (int i = 0; i < m; ++i)
        {
            const auto& e = edges[i];
            if (!(w & vertex_bit(e.u)) || !(w & vertex_bit(e.v)))
                continue;
            const bool is_tight = (tight >> i) & 1;
            earlier[local[e.v]].push_back({e.u, is_tight});
            if (is_tight)
                local_edges.push_back({local[e.u] + 1, local[e.v] + 1});
        }

        std::vector<std::optional<std::vector<int>>> solutions(count);
        bool any = false;
        for (int k = 0; k < count; ++k)
        {
            std::vector<int> alpha(r + 1, -1);
            if (search_alpha(order, earlier, 0, n_first + k, alpha))
            {
                solutions[k] = std::move(alpha);
                any = true;
            }
        }
        if (!any)
            return;
        const Graph dual_graph(static_cast<int>(order.size()), std::move(local_edges));
        const auto h = reduced_homology(independence_complex(dual_graph), options.field);
        const auto top = h.top_degree();
        if (!top)
            return;
        const int depth = r - 2 - *top;
        const int degree = static_cast<int>(order.size()) - 3 - *top;
        for (int k = 0; k < count; ++k)
        {
            if (!solutions[k])
                continue;
            DegreeVector alpha = DegreeVector::zero(r);
            for (int v = 1; v <= r; ++v)
                alpha[v] = (*solutions[k])[v];
            best[k].offer(depth, tight, {n_first + k, depth, std::move(alpha), degree});
        }
    };

    const int threads = std::max(1, std::min<int>(resolve_thread_count(options.threads),
                                                  static_cast<int>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::vector<Best>> partial(threads, std::vector<Best>(count));
    std::atomic<std::uint64_t> next{1};
    std::exception_ptr failure;
    std::mutex failure_lock;
    constexpr std::uint64_t chunk = 256;
    auto worker = [&](int id) {
        try
        {
            while (true)
            {
                const std::uint64_t start = next.fetch_add(chunk);
                if (start > total)
                    break;
                const std::uint64_t stop = std::min(total, start + chunk - 1);
                for (std::uint64_t tight = start; tight <= stop; ++tight)
                    evaluate(tight, partial[id]);
            }
        }
        catch (...)
        {
            std::lock_guard lock(failure_lock);
            if (!failure)
                failure = std::current_exception();
            next = total + 1;
        }
    };
    if (threads == 1)
        worker(0);
    else
    {
        std::vector<std::thread> pool;
        for (int id = 0; id < threads; ++id)
            pool.emplace_back(worker, id);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<DepthWitness> out;
    for (int k = 0; k < count; ++k)
    {
        Best merged;
        for (const auto& p : partial)
            if (p[k].set)
                merged.offer(p[k].depth, p[k].mask, p[k].witness);
        if (!merged.set)
            throw InternalError("no nonvanishing local cohomology found at n = " + std::to_string(n_first + k));
        out.push_back(std::move(merged.witness));
    }
    return out;
}

int depth_symbolic(const Graph& g, int n, const OracleOptions& options)
{
    return depth_symbolic_range(g, n, n, options).front().depth;
}

int reg_edge_ideal(const Graph& g, const FieldSpec& field)
{
    if (g.edgeless())
        throw InputError("regularity of the edge ideal needs at least one edge");
    const auto delta = independence_complex(g);
    std::vector<VertexMask> faces;
    for (int d = -1; d <= delta.dimension(); ++d)
    {
        auto layer = d < 0 ? std::vector<VertexMask>{0} : delta.faces(d);
        faces.insert(faces.end(), layer.begin(), layer.end());
    }
    int best = -1;
    for (VertexMask sigma : faces)
        if (auto top = reduced_homology(link(delta, sigma), field).top_degree())
            best = std::max(best, *top + 1);
    if (best < 0)
        throw InternalError("no nonvanishing link homology in the independence complex");
    return best + 1;
}

DepthReport depth_profile(const Graph& g, const OracleOptions& options)
{
    DepthReport report;
    report.graph = canonical_key(g);
    report.field = options.field;
    report.nu0 = ordered_matching_number(g);
    report.limit_depth = g.order() - report.nu0 - 1;
    report.method = "oracle";
    const int n_max = std::max(1, 2 * report.nu0 - 1);
    report.witnesses = depth_symbolic_range(g, 1, n_max, options);
    for (const auto& w : report.witnesses)
        report.profile[w.n] = w.depth;
    for (const auto& [n, depth] : report.profile)
        if (depth <= report.limit_depth)
        {
            report.sdstab = n;
            break;
        }
    if (report.sdstab == 0)
        throw InternalError("depth profile never reaches r - nu0 - 1");
    return report;
}

namespace
{

bool certificate_search(const Graph& g, std::span<const Edge> matching, std::size_t pos, int n,
                        std::vector<int>& alpha, VertexMask assigned)
{
    if (pos == matching.size())
        return true;
    const int a = matching[pos].u, b = matching[pos].v;
    auto consistent = [&](int v, VertexMask done) {
        for (int x : mask_vertices(g.neighbors(v) & done))
            if (alpha[v] + alpha[x] < n)
                return false;
        return true;
    };
    for (int value = 0; value < n; ++value)
    {
        alpha[a] = value;
        alpha[b] = n - 1 - value;
        if (consistent(a, assigned) && consistent(b, assigned) &&
            certificate_search(g, matching, pos + 1, n, alpha, assigned | vertex_bit(a) | vertex_bit(b)))
            return true;
    }
    return false;
}

} // namespace

std::optional<CertificateVector> certificate_at(const Graph& g, std::span<const Edge> matching, int n)
{
    if (!is_matching(g, matching) || covered_vertices(matching) != g.vertices())
        throw InputError("certificate search needs a perfect matching of the graph");
    if (n < 1)
        throw InputError("symbolic power exponent must be positive");
    std::vector<int> alpha(g.order() + 1, 0);
    if (!certificate_search(g, matching, 0, n, alpha, 0))
        return std::nullopt;
    CertificateVector cert{Eigen::VectorXi::Zero(g.order()), g.vertices(), n};
    for (int v = 1; v <= g.order(); ++v)
        cert.values(v - 1) = alpha[v];
    if (!satisfies_certificate(g, matching, cert))
        throw InternalError("certificate search returned an invalid vector");
    return cert;
}

CertificateResult sdstab_certificate(const Graph& g)
{
    Matching matching;
    if (auto om = has_perfect_ordered_matching(g))
    {
        // Pair-index order makes cross constraints bind early.
        for (const auto& p : om->pairs)
            matching.push_back({std::min(p.free, p.partner), std::max(p.free, p.partner)});
    }
    else
    {
        auto all = enumerate_perfect_matchings(g);
        if (all.empty())
            throw InputError("certificate route needs a graph with a perfect matching");
        matching = all.front();
    }
    const int s = static_cast<int>(matching.size());
    for (int n = 1; n <= std::max(1, 2 * s - 1); ++n)
        if (auto cert = certificate_at(g, matching, n))
        {
            std::sort(matching.begin(), matching.end());
            return {n, matching, *cert};
        }
    throw InputError("no certificate exists for n <= 2s-1: the perfect matching is not ordered");
}

std::optional<int> closed_form_sdstab(const Graph& g)
{
    const int r = g.order();
    if (is_path_graph(g))
        return r % 2 == 0 ? r / 2 : (r - 1 + 3) / 4;
    if (is_cycle_graph(g))
    {
        if (r % 2 == 1)
            return r == 5 ? 1 : (r - 1) / 2;
        return r == 8 ? 1 : (r - 2 + 3) / 4;
    }
    return std::nullopt;
}

SdstabMode parse_sdstab_mode(std::string_view text)
{
    std::string t;
    for (char c : text)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "auto")
        return SdstabMode::Auto;
    if (t == "oracle")
        return SdstabMode::Oracle;
    if (t == "certificate")
        return SdstabMode::Certificate;
    if (t == "closed-form" || t == "closed_form")
        return SdstabMode::ClosedForm;
    throw InputError("unknown stability mode '" + std::string(text) + "'");
}

SdstabResult sdstab(const Graph& g, SdstabMode mode, const OracleOptions& options)
{
    if (g.edgeless())
        throw InputError("stability index needs at least one edge");
    SdstabResult out;
    auto use_oracle = [&] {
        out.report = depth_profile(g, options);
        out.value = out.report->sdstab;
        out.method = "oracle";
    };
    auto use_certificate = [&] {
        out.certificate = sdstab_certificate(g);
        out.value = out.certificate->sdstab;
        out.method = "certificate";
    };
    switch (mode)
    {
    case SdstabMode::Oracle:
        use_oracle();
        break;
    case SdstabMode::Certificate:
        use_certificate();
        break;
    case SdstabMode::ClosedForm:
        if (auto c = closed_form_sdstab(g))
        {
            out.value = *c;
            out.method = "closed-form";
        }
        else
            throw InputError("no closed form: the graph is not a path or a cycle");
        break;
    case SdstabMode::Auto:
        if (auto c = closed_form_sdstab(g))
        {
            out.value = *c;
            out.method = "closed-form";
        }
        else if (has_perfect_ordered_matching(g))
            use_certificate();
        else
            use_oracle();
        break;
    }
    return out;
}

} // namespace coverdepth
