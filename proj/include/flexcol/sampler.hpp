#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "flexcol/assignment.hpp"
#include "flexcol/graph.hpp"
#include "flexcol/rational.hpp"

namespace flexcol {

// Deterministic 64-bit generator; the per-step seed split is counter-based.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n), rejection sampling
    BigInt below_big(const BigInt& n);
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

// Random procedures are written against this interface once; a sampling
// chooser invokes the continuation for one drawn branch, an expansion
// chooser for every branch with its exact probability.
class Chooser {
public:
    virtual ~Chooser() = default;
    virtual void choose(int n, const std::function<void(int)>& k) = 0;
    virtual void choose_weighted(const std::vector<Rational>& weights,
                                 const std::function<void(int)>& k) = 0;
    virtual void leaf(const Coloring& phi) = 0;
};

using Procedure = std::function<void(Chooser&)>;

// Forwards branching to an outer chooser but redirects leaves into a
// continuation, so procedures compose into larger procedures.
class SubChooser : public Chooser {
public:
    SubChooser(Chooser& outer, std::function<void(const Coloring&)> on_leaf)
        : outer_(outer), on_leaf_(std::move(on_leaf)) {}
    void choose(int n, const std::function<void(int)>& k) override { outer_.choose(n, k); }
    void choose_weighted(const std::vector<Rational>& weights,
                         const std::function<void(int)>& k) override {
        outer_.choose_weighted(weights, k);
    }
    void leaf(const Coloring& phi) override { on_leaf_(phi); }

private:
    Chooser& outer_;
    std::function<void(const Coloring&)> on_leaf_;
};

struct ExpansionStats {
    Rational total;                // sums to 1 exactly
    long long leaves = 0;
    std::vector<std::map<int, Rational>> fix;                          // Pr(phi(v)=c)
    std::map<std::pair<int, int>, std::map<int, Rational>> joint_eq;   // Pr(phi(u)=c and phi(v)=c), u<v

    Rational fix_prob(int v, int c) const;
    // Pr(phi avoids c on u), |u| in {1, 2}, by inclusion-exclusion
    Rational avoid_prob(const VertexSet& u, int c) const;
    Rational min_fix(const ListAssignment& l) const;
    Rational min_forb2(const ListAssignment& l) const;
    bool per_vertex_sums_ok(const ListAssignment& l) const;
};

// A seeded procedure producing proper L-colorings, with an exact expander
// enumerating all execution branches when the leaf count fits the budget.
class Sampler {
public:
    Graph graph;
    ListAssignment lists;
    Procedure procedure;
    std::optional<Rational> claimed_alpha;
    std::uint64_t seed = 0;

    // Draws one coloring; every output is checked to be a proper L-coloring.
    Coloring sample();
    ExpansionStats expand(long long max_leaves = 1 << 22) const;

private:
    std::uint64_t sample_index_ = 0;
};

struct WilsonInterval {
    double lower, upper;
};
WilsonInterval wilson(long long successes, long long trials, double z);

}  // namespace flexcol
