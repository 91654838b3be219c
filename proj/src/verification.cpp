#include "coverdepth/verification.hpp"

#include "coverdepth/alt_paths.hpp"
#include "coverdepth/analyzer.hpp"
#include "coverdepth/batch.hpp"
#include "coverdepth/corpus.hpp"
#include "coverdepth/degree_complex.hpp"
#include "coverdepth/errors.hpp"
#include "coverdepth/matching.hpp"
#include "coverdepth/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cctype>
#include <sstream>

namespace coverdepth
{

namespace
{

template <typename Range>
std::string join(const Range& items)
{
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (const auto& x : items)
    {
        out << (first ? "" : ",") << x;
        first = false;
    }
    out << ")";
    return out.str();
}

std::string map_text(const std::map<int, int>& m)
{
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [k, v] : m)
    {
        out << (first ? "" : ", ") << k << ":" << v;
        first = false;
    }
    out << "}";
    return out.str();
}

OrderedMatching om_of(std::initializer_list<std::pair<int, int>> pairs)
{
    OrderedMatching om;
    for (auto [u, v] : pairs)
        om.pairs.push_back({u, v});
    return om;
}

std::vector<int> values_of(const CertificateVector& c)
{
    return {c.values.data(), c.values.data() + c.values.size()};
}

// Plain Gaussian elimination over exact rationals or GF(p), kept apart from
// the fraction-free routine it cross-checks.
int naive_rank(const IntMatrix& a, const FieldSpec& field)
{
    using boost::multiprecision::cpp_rational;
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    std::vector<std::vector<cpp_rational>> m(rows, std::vector<cpp_rational>(cols));
    const std::int64_t p = field.characteristic();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m[i][j] = p ? ((a(i, j) % p) + p) % p : a(i, j);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c)
    {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0)
            {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        for (int i = 0; i < rows; ++i)
        {
            if (i == rank || m[i][c] == 0)
                continue;
            if (p)
            {
                // multiply row i by pivot and subtract, all reduced mod p
                auto pv = static_cast<std::int64_t>(boost::multiprecision::numerator(m[rank][c]));
                auto f = static_cast<std::int64_t>(boost::multiprecision::numerator(m[i][c]));
                for (int j = 0; j < cols; ++j)
                {
                    auto x = static_cast<std::int64_t>(boost::multiprecision::numerator(m[i][j]));
                    auto y = static_cast<std::int64_t>(boost::multiprecision::numerator(m[rank][j]));
                    m[i][j] = (((x * pv - f * y) % p) + p) % p;
                }
            }
            else
            {
                cpp_rational f = m[i][c] / m[rank][c];
                for (int j = 0; j < cols; ++j)
                    m[i][j] -= f * m[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

HomologyProfile naive_homology(const SimplicialComplex& delta, const FieldSpec& field)
{
    HomologyProfile h;
    if (delta.is_void())
        return h;
    const int top = delta.dimension();
    std::vector<std::vector<VertexMask>> faces(top + 2);
    faces[0] = {0};
    for (int d = 0; d <= top; ++d)
        faces[d + 1] = delta.faces(d);
    std::vector<int> rank(top + 3, 0);
    for (int d = 0; d <= top; ++d)
        rank[d + 1] = naive_rank(boundary_matrix(faces[d], faces[d + 1]), field);
    for (int d = -1; d <= top; ++d)
        h.dims.push_back(static_cast<int>(faces[d + 1].size()) - rank[d + 1] - rank[d + 2]);
    return h;
}

struct Named
{
    std::string name;
    Graph graph;
};

std::vector<Named> small_corpus(VerifyLevel level)
{
    std::vector<Named> out;
    const int top = level == VerifyLevel::Full ? 8 : 7;
    for (int r = 2; r <= top; ++r)
        out.push_back({"P" + std::to_string(r), path_graph(r)});
    for (int r = 3; r <= top; ++r)
        out.push_back({"C" + std::to_string(r), cycle_graph(r)});
    out.push_back({"FIG1", fig1_graph()});
    out.push_back({"FIG3", fig3_graph()});
    out.push_back({"FAM(1)", family_graph(1)});
    if (level == VerifyLevel::Full)
        out.push_back({"FAM(2)", family_graph(2)});
    return out;
}

int oracle_sdstab(const Graph& g, const OracleOptions& oracle) { return depth_profile(g, oracle).sdstab; }

CriterionResult criterion_paths(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    const std::map<int, int> expected{{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 3}, {7, 2}, {8, 4}};
    std::map<int, int> want, got;
    for (auto [r, s] : expected)
    {
        if (level == VerifyLevel::Quick && r > 7)
            continue;
        want[r] = s;
        got[r] = oracle_sdstab(path_graph(r), oracle);
        res.expect_eq(*closed_form_sdstab(path_graph(r)), s, "closed form for P" + std::to_string(r));
    }
    res.expect_eq(got, want, "oracle sdstab of P_r");
    res.note("oracle sdstab(P_r) = " + map_text(got));
    return res;
}

CriterionResult criterion_odd_cycles(VerifyLevel, const OracleOptions& oracle)
{
    CriterionResult res;
    const std::map<int, int> want{{3, 1}, {5, 1}, {7, 3}};
    std::map<int, int> got;
    for (auto [r, s] : want)
        got[r] = oracle_sdstab(cycle_graph(r), oracle);
    res.expect_eq(got, want, "oracle sdstab of odd C_r");
    res.note("oracle sdstab(C_r) = " + map_text(got));
    return res;
}

CriterionResult criterion_even_cycles(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    std::map<int, int> want, got, ell_want, ell_got;
    for (int r : {4, 6, 8})
    {
        ell_want[r] = 2 * ((r - 2 + 3) / 4) - 1;
        ell_got[r] = ell_graph(cycle_graph(r)).ell;
        if (level == VerifyLevel::Quick && r == 8)
            continue;
        want[r] = 1;
        got[r] = oracle_sdstab(cycle_graph(r), oracle);
    }
    res.expect_eq(got, want, "oracle sdstab of even C_r");
    res.expect_eq(ell_got, ell_want, "ell_graph(C_r)");
    res.note("oracle sdstab(C_r) = " + map_text(got) + ", ell(C_r) = " + map_text(ell_got));
    return res;
}

CriterionResult criterion_regularity(VerifyLevel, const OracleOptions& oracle)
{
    CriterionResult res;
    const std::map<int, int> want{{5, 3}, {7, 3}, {8, 4}};
    std::map<int, int> got;
    for (auto [r, reg] : want)
        got[r] = reg_edge_ideal(cycle_graph(r), oracle.field);
    res.expect_eq(got, want, "reg I(C_r)");
    res.expect_eq(reg_edge_ideal(path_graph(4), oracle.field), 2, "reg I(P4)");
    res.note("reg I(C_r) = " + map_text(got));
    return res;
}

CriterionResult criterion_duality(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    int checked = 0;
    auto check = [&](const std::string& name, const Graph& g) {
        const int depth = depth_symbolic(g, 1, oracle);
        const int reg = reg_edge_ideal(g, oracle.field);
        res.expect(depth == g.order() - reg, name + ": expected depth R/J = r - reg = " +
                                                 std::to_string(g.order() - reg) + ", got " + std::to_string(depth));
        ++checked;
    };
    for (const auto& [name, g] : small_corpus(VerifyLevel::Full))
        check(name, g);
    const int count = level == VerifyLevel::Full ? 25 : 10;
    for (int i = 0; i < count; ++i)
        check("random #" + std::to_string(i), seeded_random_graph(kDualitySeed, i, 3, 8, 0.4));
    res.note(std::to_string(checked) + " graphs satisfy depth R/J(G) = r - reg I(G)");
    return res;
}

CriterionResult criterion_fam(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    const int top = level == VerifyLevel::Full ? 3 : 2;
    for (int s = 1; s <= top; ++s)
    {
        const auto g = family_graph(s);
        const std::string tag = "FAM(" + std::to_string(s) + ")";
        res.expect_eq(ordered_matching_number(g), 2 * s, "nu0 of " + tag);
        res.expect_eq(ell_graph(g).ell, 4 * s - 1, "ell of " + tag);
        const int cert = sdstab_certificate(g).sdstab;
        res.expect_eq(cert, 2 * s, "certificate sdstab of " + tag);
        res.note(tag + ": certificate sdstab = " + std::to_string(cert));
        if (g.order() <= 8)
        {
            const int orc = oracle_sdstab(g, oracle);
            res.expect_eq(orc, 2 * s, "oracle sdstab of " + tag);
            res.note(tag + ": oracle sdstab = " + std::to_string(orc));
        }
    }
    return res;
}

CriterionResult criterion_bound_sweep(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    const int count = level == VerifyLevel::Full ? 100 : 30;
    int completed = 0, refused = 0, attained = 0;
    for (int i = 0; i < count; ++i)
    {
        const auto g = seeded_random_graph(kRandomGraphSeed, i, 2, 8, 0.4);
        const int bound = (ell_graph(g).ell + 1) / 2;
        try
        {
            const int sd = oracle_sdstab(g, oracle);
            ++completed;
            attained += sd == bound;
            res.expect(sd <= bound, "random #" + std::to_string(i) + " " + canonical_key(g) +
                                        ": expected sdstab <= " + std::to_string(bound) + ", got " +
                                        std::to_string(sd));
        }
        catch (const BudgetExceeded&)
        {
            ++refused;
        }
    }
    res.expect(completed > 0, "expected at least one completed oracle run");
    res.note(std::to_string(completed) + " completed, " + std::to_string(refused) + " refused by budget, " +
             std::to_string(attained) + " attain the bound");
    return res;
}

CriterionResult criterion_forests(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    const int count = level == VerifyLevel::Full ? 50 : 20;
    for (int i = 0; i < count; ++i)
    {
        const auto g = seeded_random_forest(kRandomForestSeed, i, 2, 9);
        const std::string tag = "forest #" + std::to_string(i) + " " + canonical_key(g);
        res.expect_eq(ordered_matching_number(g), matching_number(g), "nu0 = nu on " + tag);
        res.expect_eq(oracle_sdstab(g, oracle), (ell_graph(g).ell + 1) / 2, "oracle sdstab = (ell+1)/2 on " + tag);
    }
    res.note(std::to_string(count) + " forests checked");
    return res;
}

CriterionResult criterion_monotone(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    std::vector<Named> graphs = small_corpus(level);
    graphs.push_back({"FIG2", fig2_graph()});
    const int randoms = level == VerifyLevel::Full ? 40 : 10;
    for (int i = 0; i < randoms; ++i)
        graphs.push_back({"random #" + std::to_string(i), seeded_random_graph(kRandomGraphSeed, i, 2, 8, 0.4)});
    for (int i = 0; i < randoms / 2; ++i)
        graphs.push_back({"forest #" + std::to_string(i), seeded_random_forest(kRandomForestSeed, i, 2, 9)});
    int profiles = 0;
    std::size_t matchings = 0;
    for (const auto& [name, g] : graphs)
    {
        const auto rep = depth_profile(g, oracle);
        ++profiles;
        int previous = rep.profile.begin()->second;
        for (const auto& [n, d] : rep.profile)
        {
            res.expect(d <= previous, name + ": profile increases at n = " + std::to_string(n) + ": " +
                                          map_text(rep.profile));
            previous = d;
        }
        res.expect(rep.profile.rbegin()->second == rep.limit_depth,
                   name + ": expected final depth " + std::to_string(rep.limit_depth) + ", got " +
                       std::to_string(rep.profile.rbegin()->second));
        const int nu0 = rep.nu0;
        const bool bip = is_bipartite(g);
        for (const auto& om : enumerate_max_ordered_matchings(g))
        {
            ++matchings;
            const int ell = ell_formula(g, om);
            res.expect(ell <= 4 * nu0 - 3, name + ": ell(M) = " + std::to_string(ell) + " exceeds 4 nu0 - 3");
            res.expect(!bip || ell <= 2 * nu0 - 1,
                       name + ": bipartite ell(M) = " + std::to_string(ell) + " exceeds 2 nu0 - 1");
        }
    }
    res.note(std::to_string(profiles) + " profiles, " + std::to_string(matchings) + " maximum ordered matchings");
    return res;
}

CriterionResult criterion_fields(VerifyLevel, const OracleOptions&)
{
    CriterionResult res;
    const auto rp2 = SimplicialComplex::from_facets(6, std::vector<std::vector<int>>{{1, 2, 3},
                                                                                     {1, 3, 4},
                                                                                     {1, 4, 5},
                                                                                     {1, 5, 6},
                                                                                     {1, 2, 6},
                                                                                     {2, 3, 5},
                                                                                     {2, 4, 5},
                                                                                     {2, 4, 6},
                                                                                     {3, 4, 6},
                                                                                     {3, 5, 6}});
    const auto q = reduced_homology(rp2, FieldSpec::rationals());
    const auto f2 = reduced_homology(rp2, FieldSpec::prime_field(2));
    res.expect_eq(q(1), 0, "H1 of RP2 over Q");
    res.expect_eq(q(2), 0, "H2 of RP2 over Q");
    res.expect_eq(f2(1), 1, "H1 of RP2 over GF(2)");
    res.expect_eq(f2(2), 1, "H2 of RP2 over GF(2)");
    res.expect(naive_homology(rp2, FieldSpec::rationals()) == q, "naive rank oracle disagrees over Q");
    res.expect(naive_homology(rp2, FieldSpec::prime_field(2)) == f2, "naive rank oracle disagrees over GF(2)");
    res.note("RP2: H1 = " + std::to_string(q(1)) + " over Q, H1 = " + std::to_string(f2(1)) + " over GF(2)");

    AnalysisOptions opts;
    opts.mode = AnalysisMode::Combinatorial;
    opts.graph_id = "CHAR16";
    const auto rep = analyze(char16_graph(), opts);
    res.expect(rep.nu <= 6, "CHAR16: expected nu <= 6, got " + std::to_string(rep.nu));
    res.expect(rep.ell <= 11, "CHAR16: expected ell <= 11, got " + std::to_string(rep.ell));
    res.expect(rep.ell <= 2 * rep.nu0 - 1, "CHAR16: expected ell <= 2 nu0 - 1");
    res.note("CHAR16 (combinatorial only): nu = " + std::to_string(rep.nu) + ", nu0 = " + std::to_string(rep.nu0) +
             ", ell = " + std::to_string(rep.ell) + "; the characteristic-dependent depth is out of oracle range");
    return res;
}

CriterionResult criterion_equivalence(VerifyLevel level, const OracleOptions& oracle)
{
    CriterionResult res;
    std::vector<Named> graphs;
    for (const auto& n : small_corpus(level))
        if (has_perfect_ordered_matching(n.graph))
            graphs.push_back(n);
    const int draws = level == VerifyLevel::Full ? 300 : 80;
    int random_kept = 0;
    for (int i = 0; i < draws; ++i)
    {
        auto g = seeded_random_graph(kRandomGraphSeed + 14, i, 2, 8, 0.4);
        if (has_perfect_ordered_matching(g))
        {
            graphs.push_back({"random #" + std::to_string(i), std::move(g)});
            ++random_kept;
        }
        auto f = seeded_random_forest(kRandomForestSeed + 14, i, 2, 8);
        if (has_perfect_ordered_matching(f))
        {
            graphs.push_back({"forest #" + std::to_string(i), std::move(f)});
            ++random_kept;
        }
    }
    for (const auto& [name, g] : graphs)
    {
        const int cert = sdstab_certificate(g).sdstab;
        const int orc = oracle_sdstab(g, oracle);
        res.expect(cert == orc, name + " " + canonical_key(g) + ": expected certificate = oracle, got " +
                                    std::to_string(cert) + " vs " + std::to_string(orc));
    }
    res.note(std::to_string(graphs.size()) + " graphs with a perfect ordered matching (" +
             std::to_string(random_kept) + " random)");
    return res;
}

using Runner = CriterionResult (*)(VerifyLevel, const OracleOptions&);

struct Entry
{
    const char* title;
    Runner run;
};

const Entry kCriteria[kCriterionCount] = {
    {"path closed form via oracle", criterion_paths},
    {"odd cycles via oracle", criterion_odd_cycles},
    {"even cycles via oracle and ell(C_r)", criterion_even_cycles},
    {"edge-ideal regularity", criterion_regularity},
    {"depth/regularity duality", criterion_duality},
    {"FIG1 self-check", [](VerifyLevel, const OracleOptions& o) { return check_fig1(fig1_graph(), o); }},
    {"FIG3 self-check", [](VerifyLevel, const OracleOptions& o) { return check_fig3(fig3_graph(), o); }},
    {"FIG2 walk/formula divergence", [](VerifyLevel, const OracleOptions&) { return check_fig2(fig2_graph()); }},
    {"family FAM(s)", criterion_fam},
    {"stability bound sweep", criterion_bound_sweep},
    {"forest equality sweep", criterion_forests},
    {"monotone profiles and ell bounds", criterion_monotone},
    {"field sensitivity", criterion_fields},
    {"certificate/oracle equivalence", criterion_equivalence},
};

} // namespace

void CriterionResult::expect(bool ok, const std::string& what)
{
    if (!ok)
    {
        passed = false;
        details.push_back("MISMATCH " + what);
    }
}

void CriterionResult::expect_eq(int got, int expected, const std::string& what)
{
    expect(got == expected, what + ": expected " + std::to_string(expected) + ", got " + std::to_string(got));
}

void CriterionResult::expect_eq(const std::vector<int>& got, const std::vector<int>& expected, const std::string& what)
{
    expect(got == expected, what + ": expected " + join(expected) + ", got " + join(got));
}

void CriterionResult::expect_eq(const std::map<int, int>& got, const std::map<int, int>& expected,
                                const std::string& what)
{
    expect(got == expected, what + ": expected " + map_text(expected) + ", got " + map_text(got));
}

VerifyLevel parse_verify_level(std::string_view text)
{
    if (text == "quick")
        return VerifyLevel::Quick;
    if (text == "full")
        return VerifyLevel::Full;
    throw InputError("unknown verification level '" + std::string(text) + "' (expected quick or full)");
}

namespace
{

CriterionResult fig1_body(const Graph& g)
{
    CriterionResult res;
    const auto m = om_of({{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    if (auto why = check_ordered_matching(g, m))
    {
        res.expect(false, "M is not an ordered matching: " + *why);
        return res;
    }
    res.expect(m.covered() == g.vertices(), "M is not perfect");
    const auto p = alt_path_profile(g, m, true);
    res.expect_eq(p.ell_v, {{5, 7}, {6, 5}, {7, 3}, {8, 1}}, "ell(v) on B");
    res.expect_eq(p.ell0, 7, "ell0(M)");
    res.expect_eq(p.ell1, 13, "ell1(M)");
    res.expect_eq(p.ell_formula, 13, "ell_formula(M)");
    res.expect_eq(*p.ell_walk, 13, "ell_walk(M)");
    res.expect_eq(ell_graph(g).ell, 13, "ell(G)");
    res.expect_eq(values_of(alpha_assignment(g, m)), {3, 2, 1, 0, 0, 1, 2, 3}, "alpha assignment");
    const auto beta = beta_certificate(g, m);
    res.expect_eq(beta.target, 7, "beta target n");
    res.expect_eq(values_of(beta), {3, 2, 1, 0, 3, 4, 5, 6}, "beta witness");
    res.expect(satisfies_certificate(g, m.edges(), beta), "beta violates the certificate inequalities at n = 7");
    const auto edges = m.edges();
    res.expect(!certificate_at(g, edges, 6).has_value(), "a certificate exists at n = 6");
    res.expect_eq(sdstab_certificate(g).sdstab, 7, "certificate sdstab");
    res.note("ell(M) = " + std::to_string(p.ell_formula) + ", certificate sdstab = 7, beta = " + join(values_of(beta)));
    return res;
}

CriterionResult fig2_body(const Graph& g)
{
    CriterionResult res;
    const auto m = om_of({{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    const auto m2 = om_of({{1, 5}, {2, 6}, {4, 9}, {3, 8}});
    for (const auto* om : {&m, &m2})
        if (auto why = check_ordered_matching(g, *om))
        {
            res.expect(false, "ordered matching rejected: " + *why);
            return res;
        }
    const auto p = alt_path_profile(g, m, false);
    res.expect_eq(p.ell_v, {{5, 3}, {6, 1}, {7, 3}, {8, 1}}, "ell(v) on B for M");
    res.expect_eq(p.ell0, 3, "ell0(M)");
    res.expect_eq(p.ell1, 7, "ell1(M)");
    res.expect_eq(p.ell_formula, 7, "ell_formula(M)");
    const int formula = ell_formula(g, m2);
    const int walk = ell_walk(g, m2, default_walk_cutoff(m2));
    res.expect_eq(formula, 3, "ell_formula(M')");
    res.expect_eq(walk, 4, "ell_walk(M')");
    const auto eg = ell_graph(g);
    res.note("divergence recorded: ell_walk(M') = " + std::to_string(walk) + " but ell_formula(M') = " +
             std::to_string(formula) + "; the walk ends at the uncovered vertex 9");
    res.note("operative ell(G) = " + std::to_string(eg.ell) + " (formula); the even walk value is not used");
    return res;
}

CriterionResult fig3_body(const Graph& g, const OracleOptions& oracle)
{
    CriterionResult res;
    const auto m = om_of({{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    if (auto why = check_ordered_matching(g, m))
    {
        res.expect(false, "M is not an ordered matching: " + *why);
        return res;
    }
    res.expect(is_independent(g, VertexMask{0b1111}), "{1,2,3,4} is not independent");
    const auto p = alt_path_profile(g, m, false);
    res.expect_eq(p.ell_v, {{5, 5}, {6, 5}, {7, 3}, {8, 1}}, "ell(v) on B");
    const auto alpha = alpha_assignment(g, m);
    res.expect_eq(values_of(alpha), {2, 2, 1, 0, 0, 0, 1, 2}, "alpha assignment");
    res.expect_eq(alpha.target, 3, "alpha target k");
    if (g.order() == 8)
    {
        const auto q = qualifying_graph(g, 3, DegreeVector(alpha.values));
        std::vector<int> got, want;
        for (const auto& e : q.graph.edges())
            got.insert(got.end(), {q.to_host[e.u - 1], q.to_host[e.v - 1]});
        for (const auto& e : m.edges())
            want.insert(want.end(), {e.u, e.v});
        res.expect_eq(got, want, "qualifying graph at n = 3 (edge endpoints)");
    }
    const int orc = depth_profile(g, oracle).sdstab;
    res.expect_eq(orc, 3, "oracle sdstab");
    res.expect_eq(sdstab_certificate(g).sdstab, 3, "certificate sdstab");
    res.note("alpha = " + join(values_of(alpha)) + ", oracle sdstab = " + std::to_string(orc));
    return res;
}

template <typename Body>
CriterionResult guarded(Body&& body)
{
    try
    {
        return body();
    }
    catch (const std::exception& e)
    {
        CriterionResult res;
        res.passed = false;
        res.details.push_back(std::string("EXCEPTION ") + e.what());
        return res;
    }
}

} // namespace

CriterionResult check_fig1(const Graph& g, const OracleOptions&)
{
    return guarded([&] { return fig1_body(g); });
}

CriterionResult check_fig2(const Graph& g)
{
    return guarded([&] { return fig2_body(g); });
}

CriterionResult check_fig3(const Graph& g, const OracleOptions& oracle)
{
    return guarded([&] { return fig3_body(g, oracle); });
}

CriterionResult run_criterion(int id, VerifyLevel level, const OracleOptions& oracle)
{
    if (id < 1 || id > kCriterionCount)
        throw InputError("no criterion " + std::to_string(id));
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try
    {
        res = kCriteria[id - 1].run(level, oracle);
    }
    catch (const std::exception& e)
    {
        res.passed = false;
        res.details.push_back(std::string("EXCEPTION ") + e.what());
    }
    res.id = id;
    res.title = kCriteria[id - 1].title;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CriterionResult> run_all_criteria(VerifyLevel level, const OracleOptions& oracle,
                                              const std::function<void(const CriterionResult&)>& on_result)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id)
    {
        out.push_back(run_criterion(id, level, oracle));
        if (on_result)
            on_result(out.back());
    }
    return out;
}

} // namespace coverdepth
