#pragma once

#include "flexcol/graph.hpp"
#include "flexcol/rational.hpp"

namespace flexcol {

struct MadResult {
    Rational value;     // max over nonempty subgraphs of 2|E(H)|/|V(H)|
    VertexSet witness;  // a vertex set achieving it
};

// Exact maximum average degree. Binary search over candidate densities,
// each step a max-flow feasibility test on the densest-subgraph network.
MadResult max_average_degree(const Graph& g);

}  // namespace flexcol
