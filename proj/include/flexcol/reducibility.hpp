#pragma once

#include <optional>
#include <string>
#include <utility>

#include "flexcol/assignment.hpp"
#include "flexcol/choosability.hpp"
#include "flexcol/graph.hpp"
#include "flexcol/simplex.hpp"

namespace flexcol {

struct FixCheck {
    bool ok = true;
    int v = -1, c = -1;  // failing pair when !ok
};

struct ForbCheck {
    bool ok = true;
    VertexSet tuple;
    int c = -1;
};

// Every (v, c in L(v)) admits an L-coloring fixing it.
FixCheck check_fix_prime(const Graph& h, const ListAssignment& l);

// Every tuple in V(H)^t (repetition allowed; equivalent to subsets of size
// <= t) and color in the union of its lists admits an avoiding L-coloring.
ForbCheck check_forb_t(const Graph& h, const ListAssignment& l, int t);

struct PropertyFailure {
    ListAssignment assignment;  // a concrete f-assignment witnessing the failure
    std::string property;       // "colorable" | "fix" | "forb"
    VertexSet witness;          // the vertex / tuple involved
    int color = -1;
};

// Re-run the specific failed check on its witness assignment.
bool replay_failure(const Graph& h, const PropertyFailure& fail);

struct ReductivityVerdict {
    bool weak = false;
    std::vector<PropertyFailure> failures;
    std::optional<Rational> optimal_alpha;  // filled by optimal_alpha(); > 0 implies weak
};

// FIX' and FORB-(k-2) over every canonical f-assignment. Decided through
// the equivalent choosability calculus: FIX' at v for all assignments iff
// H - v is f^{v}-choosable, FORB for U iff H is (f - 1_U)-choosable; failing
// assignments are materialized back from the choosability witnesses.
ReductivityVerdict is_weakly_reductive(const Graph& h, const FFunction& f, int k,
                                       bool collect_all = true);

// Min over canonical f-assignments of the optimal distribution constant:
// max alpha s.t. some distribution on proper L-colorings gives every (v,c)
// probability >= alpha and every subset of size <= k-2 avoidance
// probability >= alpha. Exact rational; 0 when some assignment admits no
// distribution. Throws BudgetExceeded when an assignment has more than
// coloring_budget candidate colorings.
Rational optimal_alpha(const Graph& h, const FFunction& f, int k,
                       long long coloring_budget = 1 << 20);

struct LpDistribution {
    Rational alpha;
    std::vector<std::pair<Coloring, Rational>> support;  // probabilities > 0 summing to 1
};

// Optimal distribution for one concrete assignment.
LpDistribution lp_distribution(const Graph& h, const ListAssignment& l, int k,
                               long long coloring_budget = 1 << 20);

// optimal_alpha(H, ell(g, h_vertices, k), k) >= alpha
bool is_reducible_subgraph(const Graph& g, const VertexSet& h_vertices, int k,
                           const Rational& alpha, long long coloring_budget = 1 << 20);

// Smallest-first (size, then lex) search for a weakly (ell_{H,k},k)-reductive
// connected induced subgraph.
std::optional<std::pair<VertexSet, ReductivityVerdict>> find_weakly_reducible(const Graph& g,
                                                                              int k, int max_size);

}  // namespace flexcol
