#pragma once

#include <optional>
#include <stdexcept>

#include "flexcol/assignment.hpp"
#include "flexcol/graph.hpp"

namespace flexcol {

struct PreconditionViolation : std::invalid_argument {
    VertexSet witness;
    PreconditionViolation(const std::string& what, VertexSet w = {})
        : std::invalid_argument(what), witness(std::move(w)) {}
};

// Lexicographically-first proper list coloring extending `partial`
// (entries >= 0 are fixed), or nullopt. Backtracking with forward checking.
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& l,
                                           const Coloring& partial = {});

bool list_colorable(const Graph& g, const ListAssignment& l);

// All proper L-colorings consistent with `partial`, lexicographic order.
// Throws BudgetExceeded past max_count.
std::vector<Coloring> enumerate_list_colorings(const Graph& g, const ListAssignment& l,
                                               long long max_count = 1 << 22,
                                               const Coloring& partial = {});

// Connected graph whose blocks are all cliques or odd cycles.
bool is_gallai_tree(const Graph& g);

// For a connected Gallai tree, an assignment with |L(v)| = deg(v) everywhere
// admitting no proper coloring (block palettes: |B|-1 fresh colors per clique
// block, 2 per odd-cycle block).
ListAssignment gallai_failing_assignment(const Graph& t);

struct ChoosabilityResult {
    bool choosable;
    std::optional<ListAssignment> failing;  // a witnessing f-assignment when not choosable
};

// Exact f-choosability decision: greedy removal of vertices with
// f(v) > deg(v), per-component analysis (degree-tight components via the
// Gallai-tree criterion, anything else by exhausting merge-maximal
// assignments).
ChoosabilityResult decide_choosable(const Graph& g, const FFunction& f,
                                    long long node_budget = 50'000'000);

// Iterates canonical f-assignments and backtracks over colorings per
// assignment. hard_only restricts to merge-maximal representatives, which
// decide the same predicate.
bool is_f_choosable_bruteforce(const Graph& g, const FFunction& f, bool hard_only = true,
                               long long assignment_budget = 5'000'000);

// Connected g with f(v) >= deg(v) everywhere (violations are errors):
// choosable iff f(u) > deg(u) somewhere or g is not a Gallai tree.
bool ert_choosable(const Graph& g, const FFunction& f);

// Some U with |U| <= 2 (possibly empty) such that (f - 1_U)(w) = deg_t(w)
// for every w, or nullopt. Scans U = {}, singletons, pairs in lex order.
// t must be a connected Gallai tree.
std::optional<VertexSet> find_bad_witness(const Graph& t, const FFunction& f);

// Whether h is (f - 1_{u,v})-choosable, for f with a dominating set r_set
// of vertices with one spare color and no induced Gallai subtree on which f
// is bad. Verifies its own hypotheses (PreconditionViolation on failure)
// and asserts the dichotomy: a false answer forces uv to be an edge with
// exactly one endpoint in r_set.
bool lemma32_choosable(const Graph& h, const VertexSet& r_set, const FFunction& f, int u, int v);

}  // namespace flexcol
