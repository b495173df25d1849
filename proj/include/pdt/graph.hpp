#ifndef PDT_GRAPH_HPP
#define PDT_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdt/vertex_set.hpp"

namespace pdt {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;

    // Builds a graph from unordered vertex pairs.  Duplicate edges are
    // dropped; self-loops and out-of-range endpoints are construction errors,
    // as is n > VertexSet::max_vertices.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;
    int min_degree() const;
    bool is_connected() const { return connected_; }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    // N[S]: S together with every neighbor of a member of S.
    VertexSet closed_neighborhood(const VertexSet& s) const;

    // Sorted (u < v) edge list.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int edge_count_ = 0;
    bool connected_ = true;
    std::vector<VertexSet> adj_;
};

// Stable content digest of (order, sorted edge list), hex-encoded.
std::string graph_hash(const Graph& g);

} // namespace pdt

#endif
