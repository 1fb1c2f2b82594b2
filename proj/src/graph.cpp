#include "hdisc/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "hdisc/errors.hpp"

namespace hdisc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ContractViolation("graph with negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw ContractViolation("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw ContractViolation("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    matrix_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[static_cast<size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<size_t>(v) * n_ + u] = 1;
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(edges));
}

ColoredGraph::ColoredGraph(Graph g, std::vector<int8_t> colors)
    : graph(std::move(g)), color(std::move(colors)) {
    if (color.size() != graph.edges().size())
        throw ContractViolation("coloring not defined on exactly the edge set");
    for (int8_t c : color)
        if (c != 1 && c != -1) throw ContractViolation("edge color must be +1 or -1");
}

int ColoredGraph::color_of(int u, int v) const {
    int i = graph.edge_index(u, v);
    if (i < 0) throw ContractViolation("color_of: not an edge");
    return color[i];
}

int ColoredGraph::discrepancy() const {
    int d = 0;
    for (int8_t c : color) d += c;
    return d;
}

ColoredGraph ColoredGraph::swapped() const {
    std::vector<int8_t> c = color;
    for (auto& x : c) x = -x;
    return ColoredGraph(graph, std::move(c));
}

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
    Graph g = graph.relabeled(perm);
    std::vector<int8_t> c(color.size());
    for (size_t i = 0; i < graph.edges().size(); ++i) {
        auto [u, v] = graph.edges()[i];
        c[g.edge_index(perm[u], perm[v])] = color[i];
    }
    return ColoredGraph(std::move(g), std::move(c));
}

GraphBasics graph_basics(const Graph& g) {
    if (g.n() == 0) throw ContractViolation("graph_basics: empty graph");
    GraphBasics b;
    b.components = g.components();
    b.degrees.resize(g.n());
    for (int v = 0; v < g.n(); ++v) b.degrees[v] = g.degree(v);
    b.is_regular = true;
    for (int v = 1; v < g.n(); ++v)
        if (b.degrees[v] != b.degrees[0]) { b.is_regular = false; break; }
    if (b.is_regular) b.common_degree = b.degrees[0];

    long h = 0;
    for (const auto& comp : b.components) h = std::gcd(h, static_cast<long>(comp.size()));
    b.hcf_c = h;

    // rho with e(U) = rho|U| for every component, if one exists
    bool first = true;
    Rational rho;
    bool uniform = true;
    for (const auto& comp : b.components) {
        long e = 0;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (w > v) ++e;
        Rational r = rat(e, static_cast<long>(comp.size()));
        if (first) { rho = r; first = false; }
        else if (r != rho) { uniform = false; break; }
    }
    if (uniform) b.component_density = rho;
    return b;
}

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            size_t a = raw.find_first_not_of(" \t\r\n");
            if (a == std::string::npos) continue;
            size_t b = raw.find_last_not_of(" \t\r\n");
            out = raw.substr(a, b - a + 1);
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

int parse_int(LineReader& r, const std::string& tok) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) r.fail("bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        r.fail("bad integer '" + tok + "'");
    }
}

template <class EdgeFn>
int parse_common(std::istream& in, EdgeFn&& on_edge, bool colored) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("missing vertex count");
    int n = parse_int(r, line);
    if (n < 0) r.fail("negative vertex count");
    while (r.next(line)) {
        std::istringstream ss(line);
        std::string a, b, c;
        if (!(ss >> a >> b)) r.fail("expected 'u v' pair");
        int u = parse_int(r, a), v = parse_int(r, b);
        int8_t col = 1;
        if (colored) {
            if (!(ss >> c)) r.fail("expected edge color");
            if (c == "+1" || c == "1" || c == "+") col = 1;
            else if (c == "-1" || c == "-") col = -1;
            else r.fail("bad edge color '" + c + "'");
        }
        std::string extra;
        if (ss >> extra) r.fail("trailing token '" + extra + "'");
        if (u == v) r.fail("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n) r.fail("endpoint out of range");
        on_edge(u, v, col, r);
    }
    return n;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int n = parse_common(in, [&](int u, int v, int8_t, LineReader&) {
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }, false);
    return Graph(n, std::move(edges));
}

ColoredGraph parse_colored_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::vector<int8_t> colors;
    int n = parse_common(in, [&](int u, int v, int8_t c, LineReader& r) {
        Edge e{std::min(u, v), std::max(u, v)};
        for (size_t i = 0; i < edges.size(); ++i) {
            if (edges[i] == e) {
                if (colors[i] != c) r.fail("edge recolored inconsistently");
                return;
            }
        }
        edges.push_back(e);
        colors.push_back(c);
    }, true);
    Graph g(n, edges);
    // Align colors with the sorted edge order of the constructed graph.
    std::vector<int8_t> aligned(g.edges().size());
    for (size_t i = 0; i < edges.size(); ++i)
        aligned[g.edge_index(edges[i].first, edges[i].second)] = colors[i];
    return ColoredGraph(std::move(g), std::move(aligned));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

ColoredGraph parse_colored_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_colored_edge_list(ss);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string format_colored_edge_list(const ColoredGraph& g) {
    std::ostringstream out;
    out << g.graph.n() << "\n";
    for (size_t i = 0; i < g.graph.edges().size(); ++i) {
        const auto& [u, v] = g.graph.edges()[i];
        out << u << " " << v << " " << (g.color[i] > 0 ? "+1" : "-1") << "\n";
    }
    return out.str();
}

Graph complete_graph(int r) {
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    return Graph(r, std::move(edges));
}

} // namespace hdisc
