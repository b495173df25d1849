#ifndef PDT_GRAPH_IO_HPP
#define PDT_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pdt/graph.hpp"

namespace pdt {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Duplicate edges are dropped silently; malformed lines raise a ParseError
// carrying the line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

std::string format_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace pdt

#endif
