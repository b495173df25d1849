#include "pdt/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace pdt {

namespace {

bool blank(const std::string& s) {
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

ParseError at_line(int line, const std::string& what) {
    return ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_ints(const std::string& s, long& a, long& b) {
    std::istringstream ss(s);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        if (!parse_ints(line, n, m) || n < 0 || m < 0)
            throw at_line(lineno, "expected header \"n m\"");
        break;
    }
    if (n < 0) throw ParseError("empty input: missing \"n m\" header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    long read = 0;
    while (read < m && std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        long u, v;
        if (!parse_ints(line, u, v)) throw at_line(lineno, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw at_line(lineno, "edge endpoint out of range");
        if (u == v) throw at_line(lineno, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++read;
    }
    if (read < m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(read));
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank(line)) throw at_line(lineno, "trailing content after edge list");
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << format_edge_list(g);
}

} // namespace pdt
