#include "rigi/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rigi {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw input_error("parse error at line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    long declared_n = -1;
    bool saw_content = false;
    std::set<Edge> seen;
    std::vector<Edge> edges;
    int max_id = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(strip_comment(raw));
        std::string first;
        if (!(ls >> first)) continue;
        if (!saw_content && first == "vertices") {
            if (!(ls >> declared_n) || declared_n < 0) parse_fail(lineno, "bad vertex count");
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "trailing token '" + extra + "'");
            saw_content = true;
            continue;
        }
        saw_content = true;
        long u, v;
        std::istringstream es(strip_comment(raw));
        if (!(es >> u >> v)) parse_fail(lineno, "expected '<u> <v>'");
        std::string extra;
        if (es >> extra) parse_fail(lineno, "trailing token '" + extra + "'");
        if (u < 0 || v < 0) parse_fail(lineno, "negative vertex id");
        if (u == v) parse_fail(lineno, "self-loop");
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            parse_fail(lineno, "vertex id exceeds declared count");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second) parse_fail(lineno, "duplicate edge");
        edges.push_back(e);
        max_id = std::max(max_id, e.second);
    }
    int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_id + 1;
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return read_graph(ss.str());
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string write_dot(const Graph& g, const std::vector<Edge>& highlight,
                      const std::string& name) {
    std::set<Edge> hl;
    for (const auto& e : highlight) hl.insert(make_edge(e.first, e.second));
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (hl.count({u, v})) out << " [penwidth=3]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace rigi
