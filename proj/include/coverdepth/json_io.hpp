#ifndef COVERDEPTH_JSON_IO_HPP
#define COVERDEPTH_JSON_IO_HPP

#include "coverdepth/alt_paths.hpp"
#include "coverdepth/depth_engine.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/matching.hpp"
#include "coverdepth/simplicial.hpp"

#include <nlohmann/json.hpp>

namespace coverdepth
{

using Json = nlohmann::json;

/// {r, edges: [[u, v], ...]}
Json graph_json(const Graph& g);
/// [[u, v], ...] with u free, in index order.
Json ordered_matching_json(const OrderedMatching& om);
OrderedMatching ordered_matching_from_json(const Json& j);
/// {pairs, A, B, ell_v, ell0, ell1, ell_formula, ell_walk?}
Json profile_json(const AltPathProfile& p);
/// {m, facets}; [] is the void complex and [[]] is {∅}.
Json complex_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);
/// {"-1": dim, "0": dim, ...}
Json homology_json(const HomologyProfile& h);
/// {n, values: [v1 .. vr]} over the support, plus the support list.
Json certificate_json(const CertificateVector& c);
/// {graph, field, nu0, limit_depth, profile: {n: depth}, sdstab, method, witnesses}
Json depth_report_json(const DepthReport& r);
DepthReport depth_report_from_json(const Json& j);

} // namespace coverdepth

#endif // COVERDEPTH_JSON_IO_HPP
