#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace flexcol {

// Sorted, duplicate-free vertex ids of some host graph.
using VertexSet = std::vector<int>;

VertexSet make_vertex_set(std::vector<int> ids);
bool vs_contains(const VertexSet& s, int v);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);

// Undirected simple graph on dense vertex ids 0..n-1.
// Immutable by convention once built; add_edge is for construction only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    void add_edge(int u, int v);

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;    // local id -> host id
    std::vector<int> from_host;  // host id -> local id, -1 outside
};

// Edges of the returned graph are exactly those of g inside s.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // each 2-connected or K1/K2; every edge in exactly one
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

// BFS distance; nullopt across components.
std::optional<int> distance(const Graph& g, int u, int v);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
bool set_is_connected(const Graph& g, const VertexSet& s);

// Streams every connected induced vertex set of size <= max_size exactly once,
// sizes nondecreasing, lexicographic within a size. Single consumer.
class ConnectedSubsetStream {
public:
    ConnectedSubsetStream(const Graph& g, int max_size);
    bool next(VertexSet& out);

private:
    void advance_level();
    const Graph& g_;
    int max_size_;
    int size_;
    std::size_t idx_;
    std::vector<VertexSet> level_;
};

}  // namespace flexcol
