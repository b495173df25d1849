#include "pdt/graph.hpp"

#include <cstdint>

namespace pdt {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    if (n > VertexSet::max_vertices)
        throw GraphError("vertex count " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(VertexSet::max_vertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.edge_count_;
        }
    }
    // Connectivity by bitset BFS from vertex 0.
    if (n <= 1) {
        g.connected_ = true;
    } else {
        VertexSet seen(n);
        seen.set(0);
        VertexSet frontier = seen;
        while (frontier.any()) {
            VertexSet next(n);
            for (int v : frontier) next |= g.adj_[v];
            next -= seen;
            seen |= next;
            frontier = next;
        }
        g.connected_ = (seen.count() == n);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    VertexSet out = s;
    for (int v : s) out |= adj_[v];
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_after(u); v >= 0; v = adj_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

std::string graph_hash(const Graph& g) {
    // FNV-1a over the order and the sorted edge list.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace pdt
