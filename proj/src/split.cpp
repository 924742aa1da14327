#include "flexcol/split.hpp"

#include <algorithm>

#include "flexcol/choosability.hpp"

namespace flexcol {

int SplitGraph::copy_of(int r, int part) const {
    for (int v = 0; v < s.n(); ++v)
        if (origin_vertex[v] == r && origin_part[v] == part) return v;
    throw std::out_of_range("no such copy");
}

SplitGraph split_graph(const Graph& h, const FFunction& ell_h, const VertexSet& x_set,
                       const std::vector<VertexSet>& parts_b) {
    if (ell_h.size() != h.n()) throw std::invalid_argument("split_graph: f size mismatch");
    std::vector<char> in_x(h.n(), 0);
    for (int r : x_set) in_x[r] = 1;
    std::vector<int> owner(h.n(), -1);
    for (std::size_t bi = 0; bi < parts_b.size(); ++bi)
        for (int v : parts_b[bi]) {
            if (in_x[v]) throw std::invalid_argument("split_graph: part meets X");
            if (owner[v] != -1) throw std::invalid_argument("split_graph: overlapping parts");
            owner[v] = static_cast<int>(bi);
        }
    for (int v = 0; v < h.n(); ++v)
        if (!in_x[v] && owner[v] == -1)
            throw std::invalid_argument("split_graph: parts do not cover H minus X");

    SplitGraph sg;
    sg.core_of_host.assign(h.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        if (in_x[v]) continue;
        sg.core_of_host[v] = static_cast<int>(sg.origin_vertex.size());
        sg.origin_vertex.push_back(v);
        sg.origin_part.push_back(-1);
    }
    for (int r : x_set)
        for (std::size_t bi = 0; bi < parts_b.size(); ++bi) {
            sg.origin_vertex.push_back(r);
            sg.origin_part.push_back(static_cast<int>(bi));
        }
    Graph s(static_cast<int>(sg.origin_vertex.size()));
    for (auto [u, v] : h.edges())
        if (!in_x[u] && !in_x[v]) s.add_edge(sg.core_of_host[u], sg.core_of_host[v]);
    for (int sv = 0; sv < s.n(); ++sv) {
        if (sg.origin_part[sv] < 0) continue;
        int r = sg.origin_vertex[sv];
        for (int w : h.neighbors(r))
            if (!in_x[w] && owner[w] == sg.origin_part[sv]) s.add_edge(sv, sg.core_of_host[w]);
    }
    sg.s = std::move(s);
    std::vector<int> vals(sg.origin_vertex.size());
    for (std::size_t i = 0; i < sg.origin_vertex.size(); ++i) vals[i] = ell_h(sg.origin_vertex[i]);
    sg.ell_spl = FFunction(std::move(vals));
    return sg;
}

ListAssignment lift_lists(const SplitGraph& sg, const ListAssignment& l_on_h) {
    ListAssignment out(sg.s.n());
    for (int v = 0; v < sg.s.n(); ++v) out.lists[v] = l_on_h.at(sg.origin_vertex[v]);
    return out;
}

namespace {

// lexicographically-first completion of phi on the uncolored vertices;
// existence is guaranteed by the checked preconditions
Coloring complete_or_die(const Graph& h, const ListAssignment& l, const Coloring& phi,
                         const char* where) {
    auto full = find_list_coloring(h, l, phi);
    if (!full) throw std::logic_error(std::string("crossing-over: extension failed in ") + where);
    return *full;
}

}  // namespace

Sampler crossing_over_sampler(const Graph& h, const FFunction& ell_h, const VertexSet& x_set,
                              const VertexSet& r_set, const std::vector<VertexSet>& parts_b,
                              const Sampler& gamma_sampler, int q, int m,
                              const ListAssignment& l, std::uint64_t seed) {
    if (!l.is_f_assignment(ell_h))
        throw PreconditionViolation("crossing-over: lists are not an ell-assignment");
    // (1) size bounds
    if (static_cast<int>(x_set.size()) > q)
        throw PreconditionViolation("crossing-over (1): |X| > q", x_set);
    if (static_cast<int>(parts_b.size()) > m)
        throw PreconditionViolation("crossing-over (1): more than m parts");
    // (2) X inside R; every R vertex keeps a spare color and a neighbor outside R
    for (int r : x_set)
        if (!vs_contains(r_set, r))
            throw PreconditionViolation("crossing-over (2): X not inside R", {r});
    for (int r : r_set) {
        if (ell_h(r) < h.degree(r) + 1 || ell_h(r) < 2)
            throw PreconditionViolation("crossing-over (2): R vertex without spare color", {r});
        bool outside = false;
        for (int w : h.neighbors(r))
            if (!vs_contains(r_set, w)) outside = true;
        if (!outside)
            throw PreconditionViolation("crossing-over (2): R vertex with no neighbor outside R",
                                        {r});
    }
    // (3) per-branch choosability
    for (int r : x_set)
        for (const auto& b : parts_b) {
            VertexSet d = vs_union(b, {r});
            VertexSet rest;
            for (int v = 0; v < h.n(); ++v)
                if (!vs_contains(d, v)) rest.push_back(v);
            auto sub = induced(h, rest);
            FFunction fr = f_restrict(h, ell_h, d);
            std::vector<int> vals(rest.size());
            for (std::size_t i = 0; i < rest.size(); ++i) vals[i] = fr(rest[i]);
            if (!decide_choosable(sub.graph, FFunction(std::move(vals))).choosable)
                throw PreconditionViolation("crossing-over (3): branch remainder not choosable", d);
        }
    // (4) per-pair choosability
    for (std::size_t a = 0; a < x_set.size(); ++a)
        for (std::size_t bb = a + 1; bb < x_set.size(); ++bb) {
            VertexSet d{x_set[a], x_set[bb]};
            VertexSet rest;
            for (int v = 0; v < h.n(); ++v)
                if (!vs_contains(d, v)) rest.push_back(v);
            auto sub = induced(h, rest);
            FFunction fr = f_restrict(h, ell_h, d);
            std::vector<int> vals(rest.size());
            for (std::size_t i = 0; i < rest.size(); ++i) vals[i] = fr(rest[i]);
            if (!decide_choosable(sub.graph, FFunction(std::move(vals))).choosable)
                throw PreconditionViolation("crossing-over (4): pair remainder not choosable", d);
        }
    // (5) the split sampler matches spl(H, X, B) with the lifted lists
    SplitGraph sg = split_graph(h, ell_h, x_set, parts_b);
    if (!(gamma_sampler.graph == sg.s) || !(gamma_sampler.lists == lift_lists(sg, l)))
        throw PreconditionViolation("crossing-over (5): split sampler mismatch");
    if (!gamma_sampler.claimed_alpha)
        throw PreconditionViolation("crossing-over (5): split sampler has no claimed constant");
    Rational gamma = *gamma_sampler.claimed_alpha;

    int nx = static_cast<int>(x_set.size());
    int branches = nx >= 2 ? 3 : (nx == 1 ? 2 : 1);

    Sampler out;
    out.graph = h;
    out.lists = l;
    out.seed = seed;
    out.claimed_alpha = std::min(gamma / (3 * q * m), Rational(1, 12 * q * q));

    Procedure split_proc = gamma_sampler.procedure;
    int nparts = static_cast<int>(parts_b.size());
    out.procedure = [h, l, x_set, parts_b, sg, split_proc, branches, nx, nparts](Chooser& ch) {
        // runs the split procedure, handing its colorings to `use`
        auto with_split = [&](const std::function<void(const Coloring&)>& use) {
            SubChooser sub(ch, use);
            split_proc(sub);
        };
        ch.choose(branches, [&](int rho) {
            if (rho == 0) {
                with_split([&](const Coloring& psi) {
                    Coloring phi(h.n(), -1);
                    for (int v = 0; v < h.n(); ++v)
                        if (sg.core_of_host[v] >= 0) phi[v] = psi[sg.core_of_host[v]];
                    for (int r : x_set) {  // greedy, ascending vertex id
                        int chosen = -1;
                        for (int c : l.at(r)) {
                            bool ok = true;
                            for (int w : h.neighbors(r))
                                if (phi[w] == c) ok = false;
                            if (ok) {
                                chosen = c;
                                break;
                            }
                        }
                        if (chosen < 0)
                            throw std::logic_error("crossing-over: greedy extension failed");
                        phi[r] = chosen;
                    }
                    ch.leaf(phi);
                });
            } else if (rho == 1) {
                with_split([&](const Coloring& psi) {
                    ch.choose(nx, [&](int ri) {
                        ch.choose(nparts, [&](int bi) {
                            int r = x_set[ri];
                            Coloring phi(h.n(), -1);
                            phi[r] = psi[sg.copy_of(r, bi)];
                            for (int v : parts_b[bi]) phi[v] = psi[sg.core_of_host[v]];
                            ch.leaf(complete_or_die(h, l, phi, "branch 2"));
                        });
                    });
                });
            } else {
                ch.choose(nx, [&](int i1) {
                    ch.choose(nx - 1, [&](int i2raw) {
                        int i2 = i2raw < i1 ? i2raw : i2raw + 1;
                        int r1 = x_set[i1], r2 = x_set[i2];
                        ch.choose(static_cast<int>(l.at(r1).size()), [&](int c1) {
                            Coloring phi(h.n(), -1);
                            phi[r1] = l.at(r1)[c1];
                            std::vector<int> avail;
                            for (int c : l.at(r2)) {
                                bool ok = true;
                                for (int w : h.neighbors(r2))
                                    if (phi[w] == c) ok = false;
                                if (ok) avail.push_back(c);
                            }
                            if (avail.size() < 2)
                                throw std::logic_error(
                                    "crossing-over: fewer than two colors available in branch 3");
                            ch.choose(static_cast<int>(avail.size()), [&](int c2) {
                                Coloring phi2 = phi;
                                phi2[r2] = avail[c2];
                                ch.leaf(complete_or_die(h, l, phi2, "branch 3"));
                            });
                        });
                    });
                });
            }
        });
    };
    return out;
}

}  // namespace flexcol
