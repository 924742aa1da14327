#include "flexcol/choosability.hpp"

#include <algorithm>
#include <functional>

namespace flexcol {

namespace {

// Backtracking core: assigns vertices in id order, colors ascending.
// on_solution returns false to stop the search.
void search_colorings(const Graph& g, const ListAssignment& l, Coloring& phi, int v,
                      const std::function<bool(const Coloring&)>& on_solution, bool& stop) {
    if (stop) return;
    while (v < g.n() && phi[v] >= 0) ++v;
    if (v == g.n()) {
        if (!on_solution(phi)) stop = true;
        return;
    }
    for (int c : l.at(v)) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (phi[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        // forward check: every uncolored vertex keeps at least one option
        phi[v] = c;
        bool dead = false;
        for (int u = v + 1; u < g.n() && !dead; ++u) {
            if (phi[u] >= 0) continue;
            bool any = false;
            for (int cc : l.at(u)) {
                bool free = true;
                for (int w : g.neighbors(u))
                    if (phi[w] == cc) {
                        free = false;
                        break;
                    }
                if (free) {
                    any = true;
                    break;
                }
            }
            if (!any) dead = true;
        }
        if (!dead) search_colorings(g, l, phi, v + 1, on_solution, stop);
        phi[v] = -1;
        if (stop) return;
    }
}

}  // namespace

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& l,
                                           const Coloring& partial) {
    Coloring phi = partial.empty() ? Coloring(g.n(), -1) : partial;
    for (int v = 0; v < g.n(); ++v)
        if (phi[v] >= 0)
            for (int w : g.neighbors(v))
                if (phi[w] == phi[v]) return std::nullopt;
    std::optional<Coloring> found;
    bool stop = false;
    search_colorings(g, l, phi, 0, [&](const Coloring& c) {
        found = c;
        return false;
    }, stop);
    return found;
}

bool list_colorable(const Graph& g, const ListAssignment& l) {
    return find_list_coloring(g, l).has_value();
}

std::vector<Coloring> enumerate_list_colorings(const Graph& g, const ListAssignment& l,
                                               long long max_count, const Coloring& partial) {
    std::vector<Coloring> out;
    Coloring phi = partial.empty() ? Coloring(g.n(), -1) : partial;
    bool stop = false;
    search_colorings(g, l, phi, 0, [&](const Coloring& c) {
        out.push_back(c);
        if (static_cast<long long>(out.size()) > max_count)
            throw BudgetExceeded("coloring enumeration budget");
        return true;
    }, stop);
    return out;
}

bool is_gallai_tree(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_gallai_tree: disconnected input");
    auto bd = block_decomposition(g);
    for (const auto& bl : bd.blocks) {
        auto sub = induced(g, bl).graph;
        int b = sub.n();
        if (sub.m() == b * (b - 1) / 2) continue;  // clique (covers K1, K2)
        bool cycle = (b % 2 == 1) && sub.m() == b;
        if (cycle)
            for (int v = 0; v < b; ++v)
                if (sub.degree(v) != 2) cycle = false;
        if (!cycle) return false;
    }
    return true;
}

ListAssignment gallai_failing_assignment(const Graph& t) {
    if (!is_gallai_tree(t)) throw std::invalid_argument("not a Gallai tree");
    auto bd = block_decomposition(t);
    ListAssignment l(t.n());
    int next_color = 0;
    for (const auto& bl : bd.blocks) {
        auto sub = induced(t, bl).graph;
        int b = sub.n();
        int palette = (sub.m() == b * (b - 1) / 2) ? b - 1 : 2;
        std::vector<int> colors;
        for (int i = 0; i < palette; ++i) colors.push_back(next_color++);
        for (int v : bl)
            for (int c : colors) l.lists[v].push_back(c);
    }
    for (auto& lst : l.lists) std::sort(lst.begin(), lst.end());
    for (int v = 0; v < t.n(); ++v)
        if (static_cast<int>(l.lists[v].size()) != t.degree(v))
            throw std::logic_error("block palette sizes do not add up to degrees");
    return l;
}

namespace {

// fresh distinct colors on every vertex of `where` (sizes f), starting past
// the colors already present in l
void fill_fresh(ListAssignment& l, const FFunction& f, const std::vector<int>& where) {
    int base = l.max_color() + 1;
    for (int v : where) {
        l.lists[v].clear();
        for (int i = 0; i < f.clamped(v); ++i) l.lists[v].push_back(base++);
    }
}

// failing assignment for component `comp` of g lifted to all of g
ListAssignment lift_failing(const Graph& g, const FFunction& f, const VertexSet& comp,
                            const InducedSubgraph& sub, const ListAssignment& local) {
    ListAssignment l(g.n());
    for (std::size_t i = 0; i < comp.size(); ++i) l.lists[comp[i]] = local.at(static_cast<int>(i));
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!vs_contains(comp, v)) rest.push_back(v);
    fill_fresh(l, f, rest);
    return l;
}

}  // namespace

ChoosabilityResult decide_choosable(const Graph& g, const FFunction& f, long long node_budget) {
    if (f.size() != g.n()) throw std::invalid_argument("f size mismatch");
    if (g.n() == 0) return {true, std::nullopt};

    for (int v = 0; v < g.n(); ++v)
        if (f(v) <= 0) {
            ListAssignment l(g.n());
            std::vector<int> all(g.n());
            for (int u = 0; u < g.n(); ++u) all[u] = u;
            fill_fresh(l, f, all);
            return {false, l};
        }

    // Greedy removal: a vertex with more colors than remaining neighbors can
    // always be colored last.
    std::vector<char> alive(g.n(), 1);
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    bool changed = true;
    int alive_count = g.n();
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v] || f(v) <= deg[v]) continue;
            alive[v] = 0;
            --alive_count;
            for (int w : g.neighbors(v))
                if (alive[w]) --deg[w];
            changed = true;
        }
    }
    if (alive_count == 0) return {true, std::nullopt};

    VertexSet core;
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) core.push_back(v);
    auto core_sub = induced(g, core);
    for (const auto& comp_local : components(core_sub.graph)) {
        VertexSet comp;
        for (int lv : comp_local) comp.push_back(core_sub.to_host[lv]);
        auto sub = induced(g, comp);
        FFunction fc(std::vector<int>(comp.size()));
        bool tight = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            fc.values[i] = f(comp[i]);
            if (fc.values[i] != sub.graph.degree(static_cast<int>(i))) tight = false;
        }
        if (tight) {
            if (is_gallai_tree(sub.graph))
                return {false, lift_failing(g, f, comp, sub, gallai_failing_assignment(sub.graph))};
            continue;
        }
        HardAssignmentStream hs(sub.graph, fc, node_budget);
        ListAssignment cand;
        while (hs.next(cand)) {
            if (!list_colorable(sub.graph, cand))
                return {false, lift_failing(g, f, comp, sub, cand)};
        }
    }
    return {true, std::nullopt};
}

bool is_f_choosable_bruteforce(const Graph& g, const FFunction& f, bool hard_only,
                               long long assignment_budget) {
    for (int v = 0; v < g.n(); ++v)
        if (f(v) <= 0) return false;
    ListAssignment l;
    long long seen = 0;
    if (hard_only) {
        HardAssignmentStream s(g, f);
        while (s.next(l)) {
            if (++seen > assignment_budget) throw BudgetExceeded("assignment budget");
            if (!list_colorable(g, l)) return false;
        }
    } else {
        CanonicalAssignmentStream s(g, f);
        while (s.next(l)) {
            if (++seen > assignment_budget) throw BudgetExceeded("assignment budget");
            if (!list_colorable(g, l)) return false;
        }
    }
    return true;
}

bool ert_choosable(const Graph& g, const FFunction& f) {
    if (!is_connected(g)) throw PreconditionViolation("ert_choosable: disconnected input");
    for (int v = 0; v < g.n(); ++v)
        if (f(v) < g.degree(v))
            throw PreconditionViolation("ert_choosable: f below degree", {v});
    for (int v = 0; v < g.n(); ++v)
        if (f(v) > g.degree(v)) return true;
    return !is_gallai_tree(g);
}

std::optional<VertexSet> find_bad_witness(const Graph& t, const FFunction& f) {
    if (!is_connected(t) || !is_gallai_tree(t))
        throw std::invalid_argument("find_bad_witness: input is not a connected Gallai tree");
    auto matches = [&](const VertexSet& u) {
        for (int w = 0; w < t.n(); ++w)
            if (f(w) - (vs_contains(u, w) ? 1 : 0) != t.degree(w)) return false;
        return true;
    };
    if (matches({})) return VertexSet{};
    for (int v = 0; v < t.n(); ++v)
        if (matches({v})) return VertexSet{v};
    for (int u = 0; u < t.n(); ++u)
        for (int v = u + 1; v < t.n(); ++v)
            if (matches({u, v})) return VertexSet{u, v};
    return std::nullopt;
}

bool lemma32_choosable(const Graph& h, const VertexSet& r_set, const FFunction& f, int u, int v) {
    for (int r : r_set)
        if (r < 0 || r >= h.n()) throw std::out_of_range("r_set vertex out of range");
    for (int w = 0; w < h.n(); ++w) {
        if (vs_contains(r_set, w)) {
            if (f(w) < h.degree(w) + 1)
                throw PreconditionViolation("f(r) < deg(r)+1 on dominating set", {w});
            continue;
        }
        if (f(w) < h.degree(w))
            throw PreconditionViolation("f(w) < deg(w)", {w});
        bool dominated = false;
        for (int x : h.neighbors(w))
            if (vs_contains(r_set, x)) dominated = true;
        if (!dominated) throw PreconditionViolation("r_set is not dominating", {w});
    }
    // No induced Gallai subtree may be bad for f.
    ConnectedSubsetStream cs(h, h.n());
    VertexSet s;
    while (cs.next(s)) {
        auto sub = induced(h, s);
        if (!is_gallai_tree(sub.graph)) continue;
        FFunction fs(std::vector<int>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i) fs.values[i] = f(s[i]);
        if (find_bad_witness(sub.graph, fs))
            throw PreconditionViolation("f is bad on an induced Gallai subtree", s);
    }
    VertexSet uv = make_vertex_set({u, v});
    bool result = decide_choosable(h, f_minus_indicator(f, uv)).choosable;
    if (!result) {
        bool exempt = (u != v) && h.has_edge(u, v) &&
                      (vs_contains(r_set, u) != vs_contains(r_set, v));
        if (!exempt) throw std::logic_error("choosability dichotomy violated");
    }
    return result;
}

}  // namespace flexcol
