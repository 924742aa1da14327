#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flexcol/graph.hpp"
#include "flexcol/rational.hpp"

namespace flexcol {

// vertex id -> color id; -1 means uncolored.
using Coloring = std::vector<int>;

// Integer list-size demand per vertex (may be <= 0; lists materialize
// with max{0, f(v)} colors).
struct FFunction {
    std::vector<int> values;

    FFunction() = default;
    explicit FFunction(std::vector<int> v) : values(std::move(v)) {}
    static FFunction constant(int n, int k) { return FFunction(std::vector<int>(n, k)); }

    int operator()(int v) const { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }
    int clamped(int v) const { return values[v] > 0 ? values[v] : 0; }
    bool operator==(const FFunction& o) const { return values == o.values; }
};

// vertex id -> finite color set (small nonnegative integers, sorted).
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(n) {}

    int size() const { return static_cast<int>(lists.size()); }
    const std::vector<int>& at(int v) const { return lists[v]; }
    bool operator==(const ListAssignment& o) const { return lists == o.lists; }

    bool is_f_assignment(const FFunction& f) const;
    int max_color() const;
};

// l(v) = k - deg_g(v) + deg_h(v) for v in h_vertices, returned in the local
// indexing of induced(g, h_vertices) (h_vertices sorted ascending).
FFunction ell(const Graph& g, const VertexSet& h_vertices, int k);

struct SubgraphWithF {
    InducedSubgraph sub;
    FFunction f;  // on sub.graph
};
SubgraphWithF ell_subgraph(const Graph& g, const VertexSet& h_vertices, int k);

// f^U(v) = f(v) - |N_g(v) ∩ U| on V \ U; entries at U are left untouched
// and are meaningless to callers.
FFunction f_restrict(const Graph& g, const FFunction& f, const VertexSet& u_set);

// Subtract 1 on u_set, identity elsewhere.
FFunction f_minus_indicator(const FFunction& f, const VertexSet& u_set);

// Number of canonical f-assignments (slot partitions with the per-vertex
// distinctness constraint).
BigInt count_canonical_assignments(const FFunction& f);

// Streams one representative per canonical pattern: set partitions of the
// list slots {(v,i) : 1 <= i <= f(v)}, no two slots of one vertex sharing a
// class, in lexicographic restricted-growth-string order. Colors are class
// ids in first-use order. Single consumer.
class CanonicalAssignmentStream {
public:
    CanonicalAssignmentStream(const Graph& g, const FFunction& f);
    bool next(ListAssignment& out);

private:
    int n_;
    std::vector<int> slot_vertex_;  // slot index -> vertex
    std::vector<int> rgs_;
    bool first_ = true;
    bool done_ = false;

    bool valid_at(int i) const;
    ListAssignment materialize() const;
};

// Streams only the merge-maximal canonical assignments: those whose color
// classes pairwise share a vertex. Merging two classes with disjoint
// supports preserves every coloring obstruction, so any universally
// quantified FIX'/FORB/colorability check may restrict to these. Supports
// are emitted as a non-increasing bitmask sequence. Requires n <= 31.
class HardAssignmentStream {
public:
    HardAssignmentStream(const Graph& g, const FFunction& f, long long node_budget = 50'000'000);
    bool next(ListAssignment& out);

private:
    struct Level {
        unsigned mask;     // class just chosen at this depth
        unsigned next;     // next candidate mask to try when backtracking here
    };
    int n_;
    std::vector<int> need_;  // remaining coverage
    std::vector<Level> stack_;
    long long nodes_ = 0, budget_;
    bool done_ = false;
    bool all_done() const;
    bool feasible(unsigned mask) const;
    ListAssignment materialize() const;
};

// One line per vertex: "v: c1 c2 ...".
std::string format_lists(const ListAssignment& l);
ListAssignment parse_lists(std::istream& in, int n);

bool proper_coloring(const Graph& g, const Coloring& phi);
bool proper_l_coloring(const Graph& g, const ListAssignment& l, const Coloring& phi);

}  // namespace flexcol
