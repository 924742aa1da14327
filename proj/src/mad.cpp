#include "flexcol/mad.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace flexcol {

namespace {

// Dinic on small integer-capacity networks.
struct Dinic {
    struct E {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<E>> adj;
    std::vector<int> level, it;

    explicit Dinic(int n) : adj(n) {}

    void add(int u, int v, long long c) {
        adj[u].push_back({v, c, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::vector<int> q{s};
        level[s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (const E& e : adj[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push_back(e.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(adj[v].size()); ++i) {
            E& e = adj[v][i];
            if (e.cap > 0 && level[e.to] == level[v] + 1) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long fl = 0;
        while (bfs(s, t)) {
            it.assign(adj.size(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) fl += f;
        }
        return fl;
    }

    // vertices reachable from s in the residual network
    std::vector<char> min_cut_side(int s) {
        std::vector<char> side(adj.size(), 0);
        std::vector<int> q{s};
        side[s] = 1;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (const E& e : adj[q[h]])
                if (e.cap > 0 && !side[e.to]) {
                    side[e.to] = 1;
                    q.push_back(e.to);
                }
        return side;
    }
};

// Is there a nonempty subgraph H with 2|E(H)| > thr * |V(H)|?
// Network: source -> edge node (cap 2b), edge node -> endpoints (inf),
// vertex -> sink (cap a), with thr = a/b. max(2b|E(H)| - a|V(H)|) = 2bm - mincut.
bool denser_than(const Graph& g, const Rational& thr, VertexSet* witness) {
    auto es = g.edges();
    int m = static_cast<int>(es.size()), n = g.n();
    long long a = thr.get_num().get_si(), b = thr.get_den().get_si();
    Dinic net(2 + m + n);
    int src = 0, snk = 1;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    for (int i = 0; i < m; ++i) {
        net.add(src, 2 + i, 2 * b);
        net.add(2 + i, 2 + m + es[i].first, inf);
        net.add(2 + i, 2 + m + es[i].second, inf);
    }
    for (int v = 0; v < n; ++v) net.add(2 + m + v, snk, a);
    long long flow = net.max_flow(src, snk);
    if (flow >= 2LL * b * m) return false;
    if (witness) {
        auto side = net.min_cut_side(src);
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (side[2 + m + v]) witness->push_back(v);
    }
    return true;
}

}  // namespace

MadResult max_average_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("mad: empty graph");
    if (g.m() == 0) return {Rational(0), {0}};

    long n = g.n();
    // Invariant: denser_than(lo) holds, denser_than(hi) fails; mad in (lo, hi].
    Rational lo(2 * g.m() - 1, g.n());  // whole graph witnesses density > lo
    Rational hi(n - 1);
    if (!denser_than(g, hi, nullptr)) {
        // fine: hi = n-1 can never be exceeded, mad <= n-1
    }
    VertexSet best;
    denser_than(g, lo, &best);
    Rational gap(1, 4 * n * n);  // distinct candidates 2e/v differ by >= 1/n^2
    while (hi - lo > gap) {
        Rational mid = (lo + hi) / 2;
        VertexSet w;
        if (denser_than(g, mid, &w)) {
            lo = mid;
            best = w;
        } else {
            hi = mid;
        }
    }
    // Unique candidate 2e/v in (lo, hi].
    for (long v = 1; v <= n; ++v) {
        Rational e_over = hi * v / 2;
        BigInt e = e_over.get_num() / e_over.get_den();  // floor (nonnegative)
        Rational cand(2 * e, v);
        cand.canonicalize();
        if (cand > lo && cand <= hi) {
            // Witness from the last positive test achieves exactly this density.
            long long vs = static_cast<long long>(best.size());
            long long esz = induced(g, best).graph.m();
            Rational achieved(2 * esz, vs);
            achieved.canonicalize();
            if (achieved != cand) throw std::logic_error("mad: witness density mismatch");
            return {cand, best};
        }
    }
    throw std::logic_error("mad: no candidate in final interval");
}

}  // namespace flexcol
