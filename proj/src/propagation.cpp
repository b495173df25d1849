#include "pdt/propagation.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdt {

int PropagationTrace::propagation_time() const {
    if (!total()) return infinite_time;
    return std::max<int>(1, static_cast<int>(rounds.size()) - 1);
}

namespace {

void check_source(const Graph& g, const VertexSet& source) {
    if (source.capacity() != g.order())
        throw std::invalid_argument("source capacity does not match graph order");
    if (source.empty()) throw std::invalid_argument("source set must be nonempty");
}

} // namespace

PropagationTrace propagate(const Graph& g, const VertexSet& source) {
    check_source(g, source);
    const int n = g.order();

    PropagationTrace t;
    t.source = source;
    t.rounds.push_back(source);
    t.observed_prefix.push_back(source);
    t.round_of.assign(n, unobserved);
    for (int v : source) t.round_of[v] = 0;

    // Domination step.
    VertexSet observed = g.closed_neighborhood(source);
    VertexSet first_round = observed - source;
    if (first_round.any()) {
        for (int w : first_round) {
            t.round_of[w] = 1;
            ForceEvent e;
            e.forced = w;
            e.forcer = (g.neighbors(w) & source).first();
            e.round = 1;
            e.kind = ForceKind::domination;
            t.forces.push_back(e);
        }
        t.rounds.push_back(first_round);
        t.observed_prefix.push_back(observed);
    }

    // Color-change rounds.
    int round = static_cast<int>(t.rounds.size()) - 1;
    while (observed.count() < n) {
        ++round;
        VertexSet fresh(n);
        for (int u : observed) {
            VertexSet white = g.neighbors(u) - observed;
            if (white.count() != 1) continue;
            int w = white.first();
            if (fresh.test(w)) continue; // lowest-indexed forcer already recorded
            fresh.set(w);
            ForceEvent e;
            e.forcer = u;
            e.forced = w;
            e.round = round;
            e.kind = ForceKind::zero;
            t.forces.push_back(e);
        }
        if (fresh.empty()) break;
        for (int w : fresh) t.round_of[w] = round;
        observed |= fresh;
        t.rounds.push_back(fresh);
        t.observed_prefix.push_back(observed);
    }

    t.terminal = (observed.count() == n) ? Terminal::total : Terminal::stalled;
    return t;
}

int power_propagation_time(const Graph& g, const VertexSet& source) {
    return power_propagation_time_capped(g, source, g.order());
}

int power_propagation_time_capped(const Graph& g, const VertexSet& source, int round_cap) {
    check_source(g, source);
    assert(round_cap >= 1);
    const int n = g.order();

    VertexSet observed = g.closed_neighborhood(source);
    if (observed.count() == n) return 1;

    int round = 1;
    while (true) {
        if (round >= round_cap) return round_cap + 1;
        VertexSet fresh(n);
        for (int u : observed) {
            VertexSet white = g.neighbors(u) - observed;
            if (white.count() == 1) fresh.set(white.first());
        }
        if (fresh.empty()) return infinite_time;
        observed |= fresh;
        ++round;
        if (observed.count() == n) return round;
    }
}

PropagationTrace zero_forcing_propagate(const Graph& g, const VertexSet& initial) {
    if (initial.capacity() != g.order())
        throw std::invalid_argument("initial set capacity does not match graph order");
    const int n = g.order();

    PropagationTrace t;
    t.source = initial;
    t.rounds.push_back(initial);
    t.observed_prefix.push_back(initial);
    t.round_of.assign(n, unobserved);
    for (int v : initial) t.round_of[v] = 0;

    VertexSet observed = initial;
    int round = 0;
    while (observed.count() < n) {
        ++round;
        VertexSet fresh(n);
        for (int u : observed) {
            VertexSet white = g.neighbors(u) - observed;
            if (white.count() != 1) continue;
            int w = white.first();
            if (fresh.test(w)) continue;
            fresh.set(w);
            ForceEvent e;
            e.forcer = u;
            e.forced = w;
            e.round = round;
            e.kind = ForceKind::zero;
            t.forces.push_back(e);
        }
        if (fresh.empty()) break;
        for (int w : fresh) t.round_of[w] = round;
        observed |= fresh;
        t.rounds.push_back(fresh);
        t.observed_prefix.push_back(observed);
    }

    t.terminal = (observed.count() == n) ? Terminal::total : Terminal::stalled;
    return t;
}

std::vector<std::vector<int>> forcing_chains(const PropagationTrace& trace) {
    if (!trace.total()) throw std::invalid_argument("forcing chains require a total trace");
    const int n = trace.source.capacity();

    std::vector<int> zero_child(n, -1);
    for (const auto& f : trace.forces)
        if (f.kind == ForceKind::zero) zero_child[f.forcer] = f.forced;

    std::vector<std::vector<int>> chains;
    for (const auto& f : trace.forces) {
        if (trace.round_of[f.forcer] != 0) continue; // chains start at the source
        std::vector<int> chain{f.forcer, f.forced};
        for (int v = zero_child[f.forced]; v >= 0; v = zero_child[v]) chain.push_back(v);
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::map<int, VertexSet> q_sets(const PropagationTrace& trace) {
    if (!trace.total()) throw std::invalid_argument("q_sets require a total trace");
    const int n = trace.source.capacity();

    std::vector<int> forcer_of(n, -1);
    for (const auto& f : trace.forces) forcer_of[f.forced] = f.forcer;

    std::map<int, VertexSet> q;
    for (int x : trace.source) q.emplace(x, VertexSet(n));
    if (trace.rounds.size() > 2) {
        for (int w : trace.rounds[2]) {
            int mid = forcer_of[w];
            int start = forcer_of[mid];
            q.at(start).set(w);
        }
    }
    return q;
}

int GridSpec::north(int v) const {
    int r = row(v);
    if (r > 0) return index(r - 1, col(v));
    return wrap_rows && rows > 2 ? index(rows - 1, col(v)) : -1;
}

int GridSpec::south(int v) const {
    int r = row(v);
    if (r < rows - 1) return index(r + 1, col(v));
    return wrap_rows && rows > 2 ? index(0, col(v)) : -1;
}

int GridSpec::west(int v) const {
    int c = col(v);
    if (c > 0) return index(row(v), c - 1);
    return wrap_cols && cols > 2 ? index(row(v), cols - 1) : -1;
}

int GridSpec::east(int v) const {
    int c = col(v);
    if (c < cols - 1) return index(row(v), c + 1);
    return wrap_cols && cols > 2 ? index(row(v), 0) : -1;
}

Graph GridSpec::build() const {
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = index(r, c);
            if (r + 1 < rows) edges.emplace_back(v, index(r + 1, c));
            if (c + 1 < cols) edges.emplace_back(v, index(r, c + 1));
        }
    if (wrap_rows && rows > 2)
        for (int c = 0; c < cols; ++c) edges.emplace_back(index(0, c), index(rows - 1, c));
    if (wrap_cols && cols > 2)
        for (int r = 0; r < rows; ++r) edges.emplace_back(index(r, 0), index(r, cols - 1));
    return Graph::from_edges(rows * cols, edges);
}

PropagationTrace reassign_forces_grid(const Graph& g, const PropagationTrace& trace,
                                      const GridSpec& grid) {
    if (grid.order() != g.order() || !(grid.build() == g))
        throw std::invalid_argument("graph does not match the given grid layout");
    if (!trace.total()) throw std::invalid_argument("force reassignment requires a total trace");

    PropagationTrace out = trace;
    const int n = g.order();

    std::vector<int> force_index_of(n, -1);
    for (size_t i = 0; i < out.forces.size(); ++i)
        force_index_of[out.forces[i].forced] = static_cast<int>(i);

    std::vector<int> forcer_of(n, -1);
    for (const auto& f : out.forces) forcer_of[f.forced] = f.forcer;

    auto q = q_sets(out);
    for (auto& [x, qx] : q) {
        if (qx.count() < 4) continue;
        // Four chains out of x means each leaves through a distinct neighbor
        // and runs straight; rewire the northbound one to the source vertex
        // that must sit northwest of x.
        int x_n = grid.north(x);
        int x_nn = x_n >= 0 ? grid.north(x_n) : -1;
        bool straight_north = false;
        for (int w : qx)
            if (forcer_of[w] == x_n) straight_north = (w == x_nn);
        if (!straight_north)
            throw std::logic_error("unexpected bent chain with four round-2 forces");
        int x_nw = grid.west(x_n);
        if (x_nw < 0 || out.round_of[x_nw] != 0)
            throw std::logic_error("expected a source vertex northwest of an overloaded source");
        ForceEvent& dom = out.forces[force_index_of[x_n]];
        if (dom.kind != ForceKind::domination || dom.forcer != x)
            throw std::logic_error("northbound neighbor not domination-forced by its source");
        dom.forcer = x_nw;
    }
    return out;
}

} // namespace pdt
