#pragma once

#include "flexcol/assignment.hpp"
#include "flexcol/graph.hpp"
#include "flexcol/sampler.hpp"

namespace flexcol {

// H with each vertex of X replaced by one copy per part of the partition of
// H \ X; the copy r_B keeps exactly r's neighbors inside B.
struct SplitGraph {
    Graph s;
    std::vector<int> origin_vertex;  // s id -> h id
    std::vector<int> origin_part;    // s id -> part index for copies, -1 for core vertices
    std::vector<int> core_of_host;   // h id -> s id (core), -1 on X
    FFunction ell_spl;               // ell_spl(r_B) = ell_h(r); ell_spl(v) = ell_h(v)

    int copy_of(int r, int part) const;  // s id of r_B
};

SplitGraph split_graph(const Graph& h, const FFunction& ell_h, const VertexSet& x_set,
                       const std::vector<VertexSet>& parts_b);

// L_spl: copies inherit the original vertex's list.
ListAssignment lift_lists(const SplitGraph& sg, const ListAssignment& l_on_h);

// Three-branch recombination procedure: (1) adopt a split coloring and
// greedily extend to X; (2) adopt one copy's color at its original vertex
// plus that part, then extend; (3) color two X-vertices at random, then
// extend. gamma_sampler must be a sampler for the split graph under the
// lifted lists with a claimed constant gamma; the preconditions on X, R,
// the per-branch and per-pair choosability are all checked up front.
// claimed_alpha = min{gamma/(3qm), 1/(12 q^2)}; for |X| < 2 the branch set
// shrinks and the same constant is still claimed (validated by expansion).
Sampler crossing_over_sampler(const Graph& h, const FFunction& ell_h, const VertexSet& x_set,
                              const VertexSet& r_set, const std::vector<VertexSet>& parts_b,
                              const Sampler& gamma_sampler, int q, int m,
                              const ListAssignment& l, std::uint64_t seed);

}  // namespace flexcol
