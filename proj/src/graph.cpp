#include "flexcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace flexcol {

VertexSet make_vertex_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool vs_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::m() const {
    int deg_sum = 0;
    for (const auto& a : adj_) deg_sum += static_cast<int>(a.size());
    return deg_sum / 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.from_host.assign(g.n(), -1);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex id out of range");
        out.from_host[v] = static_cast<int>(out.to_host.size());
        out.to_host.push_back(v);
    }
    Graph sub(static_cast<int>(s.size()));
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && out.from_host[w] >= 0)
                sub.add_edge(out.from_host[v], out.from_host[w]);
    out.graph = std::move(sub);
    return out;
}

namespace {

struct BlockState {
    const Graph& g;
    std::vector<int> num, low, parent;
    std::vector<std::pair<int, int>> estack;
    std::vector<VertexSet> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockState(const Graph& gg)
        : g(gg), num(gg.n(), -1), low(gg.n(), 0), parent(gg.n(), -1), is_cut(gg.n(), 0) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
        }
        blocks.push_back(make_vertex_set(std::move(verts)));
    }

    // Iterative DFS; recursion depth is unbounded on long paths otherwise.
    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_child;
        };
        std::vector<Frame> stack{{root, 0}};
        num[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            int v = stack.back().v;
            if (stack.back().next_child < g.neighbors(v).size()) {
                int w = g.neighbors(v)[stack.back().next_child++];
                if (num[w] == -1) {
                    parent[w] = v;
                    estack.emplace_back(v, w);
                    num[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                int done = v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[done]);
                    if (low[done] >= num[p]) {
                        if (p != root) is_cut[p] = 1;
                        pop_block(p, done);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockState st(g);
    for (int v = 0; v < g.n(); ++v) {
        if (st.num[v] != -1) continue;
        st.run(v);
        if (g.degree(v) == 0) st.blocks.push_back({v});  // isolated vertex: K1 block
    }
    BlockDecomposition out;
    out.blocks = std::move(st.blocks);
    for (int v = 0; v < g.n(); ++v)
        if (st.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw std::out_of_range("vertex id out of range");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{u};
    dist[u] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == v) return dist[x];
        for (int w : g.neighbors(x))
            if (dist[w] == -1) {
                dist[w] = dist[x] + 1;
                q.push_back(w);
            }
    }
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        VertexSet cur;
        std::deque<int> q{s};
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            cur.push_back(x);
            for (int w : g.neighbors(x))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    q.push_back(w);
                }
        }
        out.push_back(make_vertex_set(std::move(cur)));
    }
    return out;
}

bool set_is_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::deque<int> q{s[0]};
    seen[s[0]] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int w : g.neighbors(x))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push_back(w);
            }
    }
    return cnt == s.size();
}

ConnectedSubsetStream::ConnectedSubsetStream(const Graph& g, int max_size)
    : g_(g), max_size_(max_size), size_(1), idx_(0) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    for (int v = 0; v < g.n(); ++v) level_.push_back({v});
}

void ConnectedSubsetStream::advance_level() {
    std::set<VertexSet> nxt;
    for (const auto& s : level_) {
        for (int v : s)
            for (int w : g_.neighbors(v))
                if (!vs_contains(s, w)) {
                    VertexSet t = s;
                    t.insert(std::lower_bound(t.begin(), t.end(), w), w);
                    nxt.insert(std::move(t));
                }
    }
    level_.assign(nxt.begin(), nxt.end());
    ++size_;
    idx_ = 0;
}

bool ConnectedSubsetStream::next(VertexSet& out) {
    while (true) {
        if (idx_ < level_.size()) {
            out = level_[idx_++];
            return true;
        }
        if (size_ >= max_size_ || level_.empty()) return false;
        advance_level();
    }
}

}  // namespace flexcol
