#include "coverdepth/json_io.hpp"

#include "coverdepth/errors.hpp"

namespace coverdepth
{

Json graph_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"r", g.order()}, {"edges", edges}};
}

Json ordered_matching_json(const OrderedMatching& om)
{
    Json out = Json::array();
    for (const auto& p : om.pairs)
        out.push_back({p.free, p.partner});
    return out;
}

OrderedMatching ordered_matching_from_json(const Json& j)
{
    OrderedMatching om;
    try
    {
        for (const auto& pair : j)
            om.pairs.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
    catch (const Json::exception& e)
    {
        throw InputError(std::string("malformed ordered matching: ") + e.what());
    }
    return om;
}

Json profile_json(const AltPathProfile& p)
{
    Json ell_v = Json::object();
    for (const auto& [v, len] : p.ell_v)
        ell_v[std::to_string(v)] = len;
    Json out = {{"pairs", ordered_matching_json(p.matching)},
                {"A", mask_vertices(p.matching.free_side())},
                {"B", mask_vertices(p.matching.partner_side())},
                {"ell_v", ell_v},
                {"ell0", p.ell0},
                {"ell1", p.ell1},
                {"ell_formula", p.ell_formula}};
    if (p.ell_walk)
        out["ell_walk"] = *p.ell_walk;
    return out;
}

Json complex_json(const SimplicialComplex& c)
{
    Json facets = Json::array();
    for (VertexMask f : c.facets())
        facets.push_back(mask_vertices(f));
    return {{"m", c.ground_size()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    try
    {
        return SimplicialComplex::from_facets(j.at("m").get<int>(),
                                              j.at("facets").get<std::vector<std::vector<int>>>());
    }
    catch (const Json::exception& e)
    {
        throw InputError(std::string("malformed complex: ") + e.what());
    }
}

Json homology_json(const HomologyProfile& h)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < h.dims.size(); ++i)
        out[std::to_string(static_cast<int>(i) - 1)] = h.dims[i];
    return out;
}

Json certificate_json(const CertificateVector& c)
{
    return {{"n", c.target}, {"support", mask_vertices(c.support)}, {"values", c.restricted()}};
}

Json depth_report_json(const DepthReport& r)
{
    Json profile = Json::object();
    for (const auto& [n, depth] : r.profile)
        profile[std::to_string(n)] = depth;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"n", w.n}, {"depth", w.depth}, {"alpha", w.alpha.to_vector()}, {"degree", w.degree}});
    return {{"graph", r.graph},       {"field", r.field.name()}, {"nu0", r.nu0},
            {"limit_depth", r.limit_depth}, {"profile", profile},      {"sdstab", r.sdstab},
            {"method", r.method},     {"witnesses", witnesses}};
}

DepthReport depth_report_from_json(const Json& j)
{
    try
    {
        DepthReport r;
        r.graph = j.at("graph").get<std::string>();
        r.field = FieldSpec::parse(j.at("field").get<std::string>());
        r.nu0 = j.at("nu0").get<int>();
        r.limit_depth = j.at("limit_depth").get<int>();
        for (const auto& [n, depth] : j.at("profile").items())
            r.profile[std::stoi(n)] = depth.get<int>();
        r.sdstab = j.at("sdstab").get<int>();
        r.method = j.at("method").get<std::string>();
        for (const auto& w : j.at("witnesses"))
        {
            const auto alpha = w.at("alpha").get<std::vector<int>>();
            Eigen::VectorXi values(static_cast<Eigen::Index>(alpha.size()));
            for (std::size_t i = 0; i < alpha.size(); ++i)
                values(static_cast<Eigen::Index>(i)) = alpha[i];
            r.witnesses.push_back(
                {w.at("n").get<int>(), w.at("depth").get<int>(), DegreeVector(values), w.at("degree").get<int>()});
        }
        return r;
    }
    catch (const Json::exception& e)
    {
        throw InputError(std::string("malformed depth report: ") + e.what());
    }
}

} // namespace coverdepth
