#include "coverdepth/corpus.hpp"

#include "coverdepth/errors.hpp"

#include <cctype>
#include <charconv>

namespace coverdepth
{

Graph fig1_graph()
{
    return Graph(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}, {1, 6}, {2, 7}, {3, 8}, {5, 6}});
}

Graph fig2_graph()
{
    return Graph(9, {{1, 5}, {1, 6}, {2, 6}, {3, 7}, {3, 8}, {4, 8}, {5, 7}, {4, 9}});
}

Graph fig3_graph()
{
    return Graph(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}, {1, 7}, {2, 7}, {3, 8}});
}

Graph family_graph(int s)
{
    if (s < 1 || 4 * s > kMaxVertices)
        throw InputError("FAM(s) needs 1 <= s <= 16");
    std::vector<Edge> edges;
    for (int i = 1; i <= s; ++i)
        for (int j = i; j <= s; ++j)
            edges.push_back({i, 2 * s + j});
    for (int p = 2 * s + 1; p <= 3 * s; ++p)
        for (int q = p + 1; q <= 3 * s; ++q)
            edges.push_back({p, q});
    for (int i = s + 1; i <= 2 * s; ++i)
        for (int j = i; j <= 2 * s; ++j)
            edges.push_back({i, 2 * s + j});
    for (int p = 3 * s + 1; p <= 4 * s; ++p)
        for (int q = p + 1; q <= 4 * s; ++q)
            edges.push_back({p, q});
    edges.push_back({2 * s + 1, 3 * s + 1});
    return Graph(4 * s, std::move(edges));
}

Graph char16_graph()
{
    // (x index, y index) pairs in the order they are listed.
    static constexpr int pairs[30][2] = {
        {1, 1}, {2, 1}, {3, 1}, {7, 1}, {9, 1},  {1, 2}, {2, 2}, {4, 2}, {6, 2}, {10, 2},
        {1, 3}, {3, 3}, {5, 3}, {6, 3}, {8, 3},  {2, 4}, {4, 4}, {5, 4}, {7, 4}, {8, 4},
        {3, 5}, {4, 5}, {5, 5}, {9, 5}, {10, 5}, {6, 6}, {7, 6}, {8, 6}, {9, 6}, {10, 6}};
    std::vector<Edge> edges;
    for (const auto& p : pairs)
        edges.push_back({p[0], 10 + p[1]});
    return Graph(16, std::move(edges));
}

namespace
{

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

bool parse_int(std::string_view s, int& out)
{
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

Graph builtin_graph(std::string_view name)
{
    const std::string key = upper(name);
    if (key == "FIG1")
        return fig1_graph();
    if (key == "FIG2")
        return fig2_graph();
    if (key == "FIG3")
        return fig3_graph();
    if (key == "CHAR16")
        return char16_graph();
    int k = 0;
    if (key.starts_with("FAM(") && key.ends_with(")") &&
        parse_int(std::string_view(key).substr(4, key.size() - 5), k))
        return family_graph(k);
    if (key.size() > 1 && key[0] == 'P' && parse_int(std::string_view(key).substr(1), k))
        return path_graph(k);
    if (key.size() > 1 && key[0] == 'C' && parse_int(std::string_view(key).substr(1), k))
        return cycle_graph(k);
    throw InputError("unknown builtin graph '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"FIG1", "FIG2", "FIG3", "CHAR16"}; }

} // namespace coverdepth
