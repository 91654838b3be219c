#ifndef COVERDEPTH_CORPUS_HPP
#define COVERDEPTH_CORPUS_HPP

#include "coverdepth/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace coverdepth
{

/// Figure-1 graph: perfect ordered matching with a triangle through edge {5,6}.
Graph fig1_graph();
/// Figure-2 graph: nine vertices, B-B edge {5,7}, pendant {4,9}.
Graph fig2_graph();
/// Figure-3 graph: bipartite with a perfect ordered matching.
Graph fig3_graph();
/// The 4s-vertex family whose stability index is 2s.
Graph family_graph(int s);
/// Sixteen-vertex bipartite graph whose depth function depends on the characteristic.
/// x_i maps to i (1..10) and y_j maps to 10+j (11..16).
Graph char16_graph();

/// Resolves FIG1, FIG2, FIG3, FAM(s), CHAR16, and the conveniences P<r>, C<r>.
/// Throws InputError on an unknown name.
Graph builtin_graph(std::string_view name);

/// Names accepted by builtin_graph that denote fixed graphs.
std::vector<std::string> builtin_names();

} // namespace coverdepth

#endif // COVERDEPTH_CORPUS_HPP
