#ifndef PDT_INTERVALS_HPP
#define PDT_INTERVALS_HPP

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "pdt/graph.hpp"
#include "pdt/propagation.hpp"

namespace pdt {

// Exact rational with a positive denominator.  Interval intersection and
// endpoint-distinctness tests must never go through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    Rational(long long n) : num(n), den(1) {}

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);

    std::string str() const; // "num/den"
};

Rational parse_rational(const std::string& text);

// Closed intervals [left, right] per vertex.  All 2n endpoints must be
// pairwise distinct; the unit flag holds when every length is exactly 1.
struct IntervalRepresentation {
    struct Interval {
        Rational left;
        Rational right;
    };
    std::vector<Interval> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
    bool is_unit() const;
    // Throws on an empty list, a non-positive length, or duplicate endpoints.
    void validate() const;
};

struct IntervalGraph {
    Graph graph;
    // Vertices sorted by left endpoint; position_of[v] is v's rank.
    std::vector<int> induced_order;
    std::vector<int> position_of;
};

// Exact intersection graph of the intervals plus the left-endpoint order.
IntervalGraph graph_from_intervals(const IntervalRepresentation& rep);

// Sweep that repeatedly takes the farthest interval still meeting the least
// undominated one, then discards its closed neighborhood.  Requires a unit
// representation with a connected intersection graph; the result is a
// minimum dominating set of it.
VertexSet greedy_domination(const IntervalRepresentation& rep);

// For each member of s, its least and greatest neighbor in the induced
// order (when they exist).  At most 2|s| vertices.  Unit representations only.
VertexSet t_of_s(const IntervalRepresentation& rep, const VertexSet& s);

// Dominating set built from a total trace with propagation time t >= 2:
// alternate round classes are stitched together with the least/greatest
// neighbor set of the source (even t) or the source itself (odd t).  Its size
// never exceeds |source| * t.
VertexSet hat_s(const IntervalRepresentation& rep, const PropagationTrace& trace);

// Per-instance checks used by the verification suites; all require a unit
// representation and a trace produced on its intersection graph.
// Every round k >= 2 observes at most 2|source| vertices.
bool check_lemma_roundwidth(const IntervalRepresentation& rep, const PropagationTrace& trace);
// Every vertex observed in round k >= 1 has a neighbor observed in round k-1.
bool check_lemma_backadjacency(const IntervalRepresentation& rep, const PropagationTrace& trace);
// After its first force each chain is monotone in the induced order, and on
// increasing chains everything between the start and the tip is observed
// strictly before the tip.
bool check_chain_monotone(const IntervalRepresentation& rep, const PropagationTrace& trace);

// Random unit representation with distinct endpoints, left endpoints in
// [0, n/2], and a connected intersection graph (rejection sampled).
IntervalRepresentation random_unit_representation(int n, std::mt19937_64& rng);

// One line per vertex: "left_num/left_den right_num/right_den".
IntervalRepresentation parse_intervals(std::istream& in);
IntervalRepresentation parse_intervals(const std::string& text);
IntervalRepresentation read_intervals_file(const std::string& path);
std::string format_intervals(const IntervalRepresentation& rep);

} // namespace pdt

#endif
