#ifndef PDT_PROPAGATION_HPP
#define PDT_PROPAGATION_HPP

#include <limits>
#include <map>
#include <vector>

#include "pdt/graph.hpp"

namespace pdt {

// Sentinel for "process never finishes" / "no set of this size works".
inline constexpr int infinite_time = std::numeric_limits<int>::max();
inline constexpr int unobserved = -1;

enum class ForceKind { domination, zero };

struct ForceEvent {
    int forcer = -1;
    int forced = -1;
    int round = 0;
    ForceKind kind = ForceKind::zero;
};

enum class Terminal { total, stalled };

// Full record of one observation run: the round partition, cumulative
// prefixes, per-vertex round function, and a canonical force assignment.
struct PropagationTrace {
    VertexSet source;
    std::vector<VertexSet> rounds;          // rounds[0] == source
    std::vector<VertexSet> observed_prefix; // observed_prefix[i] = union of rounds[0..i]
    std::vector<int> round_of;              // per vertex; `unobserved` if never reached
    std::vector<ForceEvent> forces;         // sorted by (round, forced vertex)
    Terminal terminal = Terminal::stalled;

    bool total() const { return terminal == Terminal::total; }
    const VertexSet& observed() const { return observed_prefix.back(); }

    // Least t >= 1 with everything observed, or infinite_time when stalled.
    // The domination step always counts as a round, so a source covering the
    // whole graph still reports time 1.
    int propagation_time() const;
};

// Runs the observation process from a nonempty source: round 1 observes the
// closed neighborhood, later rounds apply the synchronous color-change rule
// (an observed vertex with a unique unobserved neighbor observes it).  Force
// ties break to the lowest-indexed forcer; the round partition itself is
// independent of that choice.
PropagationTrace propagate(const Graph& g, const VertexSet& source);

// Propagation time only, without building a trace.
int power_propagation_time(const Graph& g, const VertexSet& source);

// As above but gives up once the round counter exceeds `round_cap`, returning
// round_cap + 1.  Stalls still return infinite_time.
int power_propagation_time_capped(const Graph& g, const VertexSet& source, int round_cap);

// Synchronous color-change rounds from an initial observed set, with no
// domination step.  rounds[0] is the initial set.
PropagationTrace zero_forcing_propagate(const Graph& g, const VertexSet& initial);

// Maximal chains forcer -> forced -> ... under the recorded assignment; one
// chain per force leaving a source vertex.  Requires a total trace.
std::vector<std::vector<int>> forcing_chains(const PropagationTrace& trace);

// For each round-2 vertex w the recorded forces give a length-2 chain
// x -> y -> w with x in the source; groups the w by their chain start x.
// Every source vertex appears as a key.  Requires a total trace.
std::map<int, VertexSet> q_sets(const PropagationTrace& trace);

// Geometry of a product of two paths/cycles laid out row-major: vertex
// (r, c) has index r*cols + c; wrapped dimensions add the closing edges.
struct GridSpec {
    int rows = 0;
    int cols = 0;
    bool wrap_rows = false; // edge between first and last row of each column
    bool wrap_cols = false; // edge between first and last column of each row

    int order() const { return rows * cols; }
    int index(int r, int c) const { return r * cols + c; }
    int row(int v) const { return v / cols; }
    int col(int v) const { return v % cols; }
    // Neighbor in the given direction, or -1 at an unwrapped boundary.
    int north(int v) const;
    int south(int v) const;
    int west(int v) const;
    int east(int v) const;

    Graph build() const;
};

// Rewrites the force assignment of a total trace on the given grid so that
// every source vertex starts at most three of the length-2 chains counted by
// q_sets.  Only domination-force choices change; the round partition is
// untouched.  Errors if the graph does not match the grid layout.
PropagationTrace reassign_forces_grid(const Graph& g, const PropagationTrace& trace,
                                      const GridSpec& grid);

} // namespace pdt

#endif
