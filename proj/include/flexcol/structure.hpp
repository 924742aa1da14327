#pragma once

#include <map>
#include <optional>
#include <string>

#include "flexcol/graph.hpp"
#include "flexcol/mad.hpp"
#include "flexcol/rational.hpp"
#include "flexcol/reducibility.hpp"

namespace flexcol {

enum class VertexClass { three_vertex, stressed, conductive4, insulated4, insulated5plus, other };

std::string to_string(VertexClass c);

struct Classification {
    std::vector<VertexClass> vertex_class;
    std::vector<VertexSet> special_k4s;                 // K4s with two 3- and two 4-vertices
    std::vector<std::pair<int, int>> insulated_edges;   // u < v, the 4-4 edge of a special K4

    bool edge_insulated(int u, int v) const;
    bool vertex_conductive(int v) const { return vertex_class[v] == VertexClass::conductive4; }
    bool vertex_insulated(int v) const {
        return vertex_class[v] == VertexClass::insulated4 ||
               vertex_class[v] == VertexClass::insulated5plus;
    }
    bool vertex_stressed(int v) const { return vertex_class[v] == VertexClass::stressed; }
};

Classification classify(const Graph& g);

// A path whose internal vertices and edges are all conductive; endpoints
// unconstrained, a single conductive edge counts.
struct ConductiveLink {
    bool connected = false;
    std::vector<int> path;  // endpoints included when connected
};
ConductiveLink conductively_connected(const Graph& g, const Classification& cl, int u, int v);

struct Violation {
    std::string rule;
    VertexSet witness;
    std::vector<int> path;  // ordered path/cycle when applicable
    std::string description;
};

// Runs every structural predicate; conductive-path detectors enumerate
// induced paths up to path_cap vertices and report the cap.
std::vector<Violation> detect_violations(const Graph& g, int path_cap = 12);

// Re-runs the specific predicate on the violation's witness.
bool replay_violation(const Graph& g, const Violation& v, int path_cap = 12);

struct ChargeLedger {
    std::vector<Rational> initial;       // deg(v) - 11/3
    std::vector<Rational> after_r2;      // 3-vertices pull 1/3 from 4+-neighbors
    std::vector<Rational> final_charge;  // stressed vertices pull 1/3 from matched donors
    std::map<int, int> r3_assignment;    // stressed vertex -> insulated donor
    VertexSet unmatched_stressed;
    Rational total() const;
};

// Donor capacities mirror the per-degree analysis: insulated 4-vertex 1,
// 5-vertex 4-t, 6+-vertex deg-t (t = number of 3-neighbors); assignment by
// maximum bipartite matching over conductively connected pairs, ties to
// the lowest donor id.
ChargeLedger discharge(const Graph& g);

struct AuditReport {
    Rational mad_value;
    VertexSet mad_witness;
    bool below_bound = false;  // mad < 11/3
    std::optional<std::pair<VertexSet, ReductivityVerdict>> reducible;
    std::vector<Violation> violations;
    std::optional<ChargeLedger> ledger;
    bool discharge_contradiction = false;  // all charges nonnegative yet total negative
    std::string conclusion;
};

AuditReport audit_counterexample(const Graph& g, int k = 4, int path_cap = 12,
                                 int max_subgraph = 24);

}  // namespace flexcol
