#include "flexcol/reducibility.hpp"

#include <algorithm>

namespace flexcol {

namespace {

ListAssignment without_color(const ListAssignment& l, const VertexSet& at, int c) {
    ListAssignment out = l;
    for (int v : at) {
        auto& lst = out.lists[v];
        lst.erase(std::remove(lst.begin(), lst.end(), c), lst.end());
    }
    return out;
}

ListAssignment with_fixed(const ListAssignment& l, int v, int c) {
    ListAssignment out = l;
    out.lists[v] = {c};
    return out;
}

}  // namespace

FixCheck check_fix_prime(const Graph& h, const ListAssignment& l) {
    for (int v = 0; v < h.n(); ++v)
        for (int c : l.at(v))
            if (!list_colorable(h, with_fixed(l, v, c))) return {false, v, c};
    return {};
}

ForbCheck check_forb_t(const Graph& h, const ListAssignment& l, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    // tuples with repetition reduce to their support sets
    std::vector<VertexSet> subsets;
    VertexSet cur;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (!cur.empty()) subsets.push_back(cur);
        if (remaining == 0) return;
        for (int v = start; v < h.n(); ++v) {
            cur.push_back(v);
            rec(v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(0, std::min(t, h.n()));
    std::sort(subsets.begin(), subsets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    for (const auto& u : subsets) {
        VertexSet colors;
        for (int v : u)
            for (int c : l.at(v)) colors.push_back(c);
        colors = make_vertex_set(std::move(colors));
        for (int c : colors)
            if (!list_colorable(h, without_color(l, u, c))) return {false, u, c};
    }
    return {};
}

bool replay_failure(const Graph& h, const PropertyFailure& fail) {
    if (fail.property == "colorable") return !list_colorable(h, fail.assignment);
    if (fail.property == "fix")
        return !list_colorable(h, with_fixed(fail.assignment, fail.witness.at(0), fail.color));
    if (fail.property == "forb")
        return !list_colorable(h, without_color(fail.assignment, fail.witness, fail.color));
    return false;
}

namespace {

// lift a failing assignment of H - v back to a FIX' failure at (v, c*)
PropertyFailure lift_fix_failure(const Graph& h, const FFunction& f, int v,
                                 const InducedSubgraph& sub, const ListAssignment& local) {
    ListAssignment l(h.n());
    for (int i = 0; i < sub.graph.n(); ++i) l.lists[sub.to_host[i]] = local.at(i);
    int fresh = l.max_color() + 1;
    int cstar = fresh++;
    for (int w : h.neighbors(v)) {
        l.lists[w].push_back(cstar);
        std::sort(l.lists[w].begin(), l.lists[w].end());
    }
    l.lists[v].push_back(cstar);
    for (int i = 1; i < f.clamped(v); ++i) l.lists[v].push_back(fresh++);
    return {std::move(l), "fix", {v}, cstar};
}

// lift a failing (f - 1_U)-assignment of H to a FORB failure at (U, c*)
PropertyFailure lift_forb_failure(const Graph& h, const VertexSet& u, ListAssignment failing) {
    int cstar = failing.max_color() + 1;
    for (int w : u) {
        failing.lists[w].push_back(cstar);
        std::sort(failing.lists[w].begin(), failing.lists[w].end());
    }
    return {std::move(failing), "forb", u, cstar};
}

// nonempty subsets of {0..n-1} with size <= tmax, size-ascending then lex;
// visit returns false to stop
void forb_subsets(int n, int tmax, const std::function<bool(const VertexSet&)>& visit) {
    bool stop = false;
    VertexSet tmp;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (stop) return;
        if (remaining == 0) {
            if (!visit(tmp)) stop = true;
            return;
        }
        for (int v = start; v < n && !stop; ++v) {
            tmp.push_back(v);
            rec(v + 1, remaining - 1);
            tmp.pop_back();
        }
    };
    for (int size = 1; size <= std::min(tmax, n) && !stop; ++size) rec(0, size);
}

}  // namespace

ReductivityVerdict is_weakly_reductive(const Graph& h, const FFunction& f, int k,
                                       bool collect_all) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    if (f.size() != h.n()) throw std::invalid_argument("f size mismatch");
    ReductivityVerdict verdict;
    auto add = [&](PropertyFailure pf) {
        verdict.failures.push_back(std::move(pf));
        return collect_all;  // keep scanning only when collecting everything
    };

    for (int v = 0; v < h.n() && (collect_all || verdict.failures.empty()); ++v) {
        if (f(v) > 0) continue;
        ListAssignment l(h.n());
        int fresh = 0;
        for (int w = 0; w < h.n(); ++w)
            for (int i = 0; i < f.clamped(w); ++i) l.lists[w].push_back(fresh++);
        add({std::move(l), "colorable", {v}, -1});
    }

    // FIX' for every assignment at v  <=>  H - v is f^{v}-choosable
    for (int v = 0; v < h.n() && (collect_all || verdict.failures.empty()); ++v) {
        if (f(v) <= 0) continue;  // already failed above
        VertexSet rest;
        for (int w = 0; w < h.n(); ++w)
            if (w != v) rest.push_back(w);
        auto sub = induced(h, rest);
        FFunction fr = f_restrict(h, f, {v});
        FFunction flocal(std::vector<int>(rest.size()));
        for (std::size_t i = 0; i < rest.size(); ++i) flocal.values[i] = fr(rest[i]);
        auto res = decide_choosable(sub.graph, flocal);
        if (!res.choosable) add(lift_fix_failure(h, f, v, sub, *res.failing));
    }

    // FORB-(k-2) for every assignment at U  <=>  H is (f - 1_U)-choosable
    forb_subsets(h.n(), k - 2, [&](const VertexSet& u) {
        auto res = decide_choosable(h, f_minus_indicator(f, u));
        if (!res.choosable) return add(lift_forb_failure(h, u, *res.failing));
        return true;
    });

    verdict.weak = verdict.failures.empty();
    return verdict;
}

namespace {

LinearProgram distribution_lp(const Graph& h, const ListAssignment& l, int k,
                              const std::vector<Coloring>& colorings) {
    int nvar = static_cast<int>(colorings.size()) + 1;  // p_i plus alpha
    int acol = nvar - 1;
    LinearProgram lp;
    lp.c.assign(nvar, Rational(0));
    lp.c[acol] = 1;
    auto add_row = [&](std::vector<Rational> row, Sense s, Rational b) {
        lp.A.push_back(std::move(row));
        lp.sense.push_back(s);
        lp.b.push_back(std::move(b));
    };
    // FIX rows
    for (int v = 0; v < h.n(); ++v)
        for (int c : l.at(v)) {
            std::vector<Rational> row(nvar, Rational(0));
            for (std::size_t i = 0; i < colorings.size(); ++i)
                if (colorings[i][v] == c) row[i] = 1;
            row[acol] = -1;
            add_row(std::move(row), Sense::GE, Rational(0));
        }
    // FORB rows: subsets of size <= k-2, only colors present in some list of U
    forb_subsets(h.n(), k - 2, [&](const VertexSet& u) {
        VertexSet colors;
        for (int v : u)
            for (int c : l.at(v)) colors.push_back(c);
        colors = make_vertex_set(std::move(colors));
        for (int c : colors) {
            std::vector<Rational> row(nvar, Rational(0));
            for (std::size_t i = 0; i < colorings.size(); ++i) {
                bool avoids = true;
                for (int v : u)
                    if (colorings[i][v] == c) avoids = false;
                if (avoids) row[i] = 1;
            }
            row[acol] = -1;
            add_row(std::move(row), Sense::GE, Rational(0));
        }
        return true;
    });
    // probabilities form a distribution; alpha <= 1 keeps the LP bounded
    std::vector<Rational> simplex_row(nvar, Rational(1));
    simplex_row[acol] = 0;
    add_row(std::move(simplex_row), Sense::EQ, Rational(1));
    std::vector<Rational> cap(nvar, Rational(0));
    cap[acol] = 1;
    add_row(std::move(cap), Sense::LE, Rational(1));
    return lp;
}

std::vector<Coloring> colorings_within_budget(const Graph& h, const ListAssignment& l,
                                              long long coloring_budget) {
    BigInt prod = 1;
    for (int v = 0; v < h.n(); ++v) prod *= static_cast<int>(l.at(v).size());
    if (prod > coloring_budget)
        throw BudgetExceeded("optimal_alpha: assignment exceeds coloring budget");
    return enumerate_list_colorings(h, l, coloring_budget);
}

}  // namespace

LpDistribution lp_distribution(const Graph& h, const ListAssignment& l, int k,
                               long long coloring_budget) {
    auto colorings = colorings_within_budget(h, l, coloring_budget);
    if (colorings.empty()) return {Rational(0), {}};
    LinearProgram lp = distribution_lp(h, l, k, colorings);
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("distribution LP not optimal");
    if (!verify_lp_certificate(lp, sol)) throw std::logic_error("LP duality certificate failed");
    LpDistribution out;
    out.alpha = sol.objective;
    for (std::size_t i = 0; i < colorings.size(); ++i)
        if (sol.x[i] > 0) out.support.emplace_back(colorings[i], sol.x[i]);
    return out;
}

Rational optimal_alpha(const Graph& h, const FFunction& f, int k, long long coloring_budget) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    for (int v = 0; v < h.n(); ++v)
        if (f(v) <= 1) return Rational(0);  // a single-color list cannot be avoided
    std::optional<Rational> best;
    HardAssignmentStream hs(h, f);
    ListAssignment l;
    while (hs.next(l)) {
        Rational a = lp_distribution(h, l, k, coloring_budget).alpha;
        if (a == 0) return a;
        if (!best || a < *best) best = a;
    }
    if (!best) throw std::logic_error("no canonical assignment enumerated");
    return *best;
}

bool is_reducible_subgraph(const Graph& g, const VertexSet& h_vertices, int k,
                           const Rational& alpha, long long coloring_budget) {
    auto swf = ell_subgraph(g, h_vertices, k);
    return optimal_alpha(swf.sub.graph, swf.f, k, coloring_budget) >= alpha;
}

std::optional<std::pair<VertexSet, ReductivityVerdict>> find_weakly_reducible(const Graph& g,
                                                                              int k, int max_size) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    ConnectedSubsetStream stream(g, std::min(max_size, g.n()));
    VertexSet s;
    while (stream.next(s)) {
        auto swf = ell_subgraph(g, s, k);
        bool plausible = true;
        for (int i = 0; i < swf.f.size() && plausible; ++i)
            if (swf.f(i) <= 1) plausible = false;  // FORB needs two colors everywhere
        if (!plausible) continue;
        auto verdict = is_weakly_reductive(swf.sub.graph, swf.f, k, /*collect_all=*/false);
        if (verdict.weak) return std::make_pair(s, std::move(verdict));
    }
    return std::nullopt;
}

}  // namespace flexcol
