#include "hdisc/frames.hpp"

#include <sstream>

#include "hdisc/errors.hpp"

namespace hdisc {

namespace {

ColoredGraph color_by_rule(const Graph& g, const std::function<int8_t(int, int)>& rule) {
    std::vector<int8_t> colors;
    colors.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) colors.push_back(rule(u, v));
    return ColoredGraph(g, std::move(colors));
}

int8_t check_color(int c) {
    if (c != 1 && c != -1) throw ContractViolation("frame color must be +1 or -1");
    return static_cast<int8_t>(c);
}

} // namespace

Frame mono_clique(int k, int color) {
    if (k < 1) throw ContractViolation("mono_clique: k < 1");
    int8_t c = check_color(color);
    Graph g = complete_graph(k);
    std::ostringstream name;
    name << "mono:" << k << ":" << (c > 0 ? "+" : "-");
    return {color_by_rule(g, [&](int, int) { return c; }), name.str()};
}

Frame star_clique(int k, int color) {
    if (k < 2) throw ContractViolation("star_clique: k < 2");
    int8_t c = check_color(color);
    Graph g = complete_graph(k);
    std::ostringstream name;
    name << "star:" << k << ":" << (c > 0 ? "+" : "-");
    // color-c edges form the star at vertex 0, everything else gets -c
    return {color_by_rule(g, [&](int u, int) { return u == 0 ? c : static_cast<int8_t>(-c); }),
            name.str()};
}

Frame butterfly(int type) {
    if (type < 1 || type > 3) throw ContractViolation("butterfly: type must be 1, 2 or 3");
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    // Free choices are c(01), c(02), c(12); the second wing is forced by
    // the antisymmetry c(03) = -c(01), c(04) = -c(02), c(34) = -c(12).
    int8_t a, b, c;
    switch (type) {
        case 1: a = +1; b = +1; c = +1; break; // monochromatic wings
        case 2: a = +1; b = +1; c = -1; break; // stars headed at the shared vertex
        default: a = +1; b = -1; c = +1; break; // stars headed at outer vertices
    }
    auto rule = [&](int u, int v) -> int8_t {
        if (u == 0 && v == 1) return a;
        if (u == 0 && v == 2) return b;
        if (u == 1 && v == 2) return c;
        if (u == 0 && v == 3) return static_cast<int8_t>(-a);
        if (u == 0 && v == 4) return static_cast<int8_t>(-b);
        return static_cast<int8_t>(-c); // (3,4)
    };
    std::ostringstream name;
    name << "butterfly:" << type;
    return {color_by_rule(g, rule), name.str()};
}

Frame edge_pair(int c1, int c2) {
    int8_t a = check_color(c1), b = check_color(c2);
    Graph g(4, {{0, 1}, {2, 3}});
    std::ostringstream name;
    name << "edgepair:" << (a > 0 ? "+" : "-") << (b > 0 ? "+" : "-");
    return {color_by_rule(g, [&](int u, int) { return u == 0 ? a : b; }), name.str()};
}

Graph clique_pair_graph(int r, int shared) {
    if (shared != r - 1 && shared != r - 2)
        throw ContractViolation("clique_pair: shared must be r-1 or r-2");
    int only = r - shared;
    int n = 2 * only + shared;
    std::vector<Edge> edges;
    // L1 = [0, only+shared), L2 = [only, n); the constructor drops the
    // duplicated shared-block pairs.
    for (int u = 0; u < only + shared; ++u)
        for (int v = u + 1; v < only + shared; ++v) edges.emplace_back(u, v);
    for (int u = only; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Frame clique_pair(int r, int shared, const std::vector<int8_t>& colors) {
    Graph g = clique_pair_graph(r, shared);
    if (colors.size() != g.edges().size())
        throw ContractViolation("clique_pair: need one color per edge of the union");
    std::ostringstream name;
    name << "cliquepair:" << r << ":" << shared << ":";
    for (int8_t c : colors) name << (c > 0 ? "+" : "-");
    return {ColoredGraph(g, colors), name.str()};
}

Frame custom_frame(ColoredGraph g, std::string name) {
    return {std::move(g), std::move(name)};
}

Frame frame_from_selector(const std::string& selector) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : selector) {
        if (ch == ':') { parts.push_back(cur); cur.clear(); }
        else cur.push_back(ch);
    }
    parts.push_back(cur);
    auto sign = [&](const std::string& s) -> int {
        if (s == "+" || s == "+1") return 1;
        if (s == "-" || s == "-1") return -1;
        throw ParseError("bad color '" + s + "' in frame selector");
    };
    auto to_int = [&](const std::string& s) -> int {
        try { return std::stoi(s); }
        catch (...) { throw ParseError("bad number '" + s + "' in frame selector"); }
    };
    const std::string& kind = parts[0];
    if (kind == "mono" && parts.size() == 3) return mono_clique(to_int(parts[1]), sign(parts[2]));
    if (kind == "star" && parts.size() == 3) return star_clique(to_int(parts[1]), sign(parts[2]));
    if (kind == "butterfly" && parts.size() == 2) return butterfly(to_int(parts[1]));
    if (kind == "edgepair" && parts.size() == 2 && parts[1].size() == 2)
        return edge_pair(sign(parts[1].substr(0, 1)), sign(parts[1].substr(1, 1)));
    if (kind == "cliquepair" && parts.size() == 4) {
        std::vector<int8_t> colors;
        for (char c : parts[3]) colors.push_back(static_cast<int8_t>(sign(std::string(1, c))));
        return clique_pair(to_int(parts[1]), to_int(parts[2]), colors);
    }
    throw ParseError("unknown frame selector: " + selector);
}

} // namespace hdisc
