#include "flexcol/partition.hpp"

#include <algorithm>

namespace flexcol {

void SubgraphPartition::validate() const {
    if (f.size() != h.n()) throw std::invalid_argument("partition: f size mismatch");
    std::vector<int> seen(h.n(), 0);
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("partition: empty part");
        for (int v : part) {
            if (v < 0 || v >= h.n()) throw std::out_of_range("partition: vertex out of range");
            if (seen[v]++) throw std::invalid_argument("partition: overlapping parts");
        }
    }
    for (int v = 0; v < h.n(); ++v)
        if (!seen[v]) throw std::invalid_argument("partition: uncovered vertex");
}

std::vector<int> SubgraphPartition::part_of() const {
    std::vector<int> owner(h.n(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) owner[v] = static_cast<int>(i);
    return owner;
}

bool SubgraphPartition::parts_adjacent(int i, int j) const {
    for (int v : parts[i])
        for (int w : h.neighbors(v))
            if (vs_contains(parts[j], w)) return true;
    return false;
}

VertexSet SubgraphPartition::neighbor_parts(int v) const {
    auto owner = part_of();
    VertexSet out;
    for (int w : h.neighbors(v))
        if (owner[w] != owner[v]) out.push_back(owner[w]);
    return make_vertex_set(std::move(out));
}

namespace {

FFunction restrict_to(const FFunction& f, const VertexSet& s) {
    std::vector<int> vals(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) vals[i] = f(s[i]);
    return FFunction(std::move(vals));
}

// FIX' + FORB-2 over every f-assignment on the part, via the choosability
// calculus (same reduction as weak (f,4)-reductivity).
PartCheck check_condition1(const Graph& part_graph, const FFunction& fpart, int i) {
    auto verdict = is_weakly_reductive(part_graph, fpart, 4, /*collect_all=*/false);
    if (verdict.weak) return {};
    return {false, "fix-forb2", verdict.failures.front().witness};
}

// FORB-1 over every g-assignment on part_graph.
bool forb1_all(const Graph& part_graph, const FFunction& g) {
    bool any_positive = false, any_nonpositive = false;
    for (int v = 0; v < part_graph.n(); ++v)
        (g(v) >= 1 ? any_positive : any_nonpositive) = true;
    if (!any_positive) return true;  // no (vertex, color) pairs exist
    if (any_nonpositive) return false;
    for (int v = 0; v < part_graph.n(); ++v)
        if (!decide_choosable(part_graph, f_minus_indicator(g, {v})).choosable) return false;
    return true;
}

}  // namespace

PartCheck is_strong_part(const SubgraphPartition& p, int i) {
    p.validate();
    auto sub = induced(p.h, p.parts[i]);
    FFunction fpart = restrict_to(p.f, p.parts[i]);

    PartCheck c1 = check_condition1(sub.graph, fpart, i);
    if (!c1.ok) return c1;

    for (std::size_t j = 0; j < p.parts.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        FFunction fj = restrict_to(f_restrict(p.h, p.f, p.parts[j]), p.parts[i]);
        if (!forb1_all(sub.graph, fj))
            return {false, "forb1-under-part", {static_cast<int>(j)}};
    }

    VertexSet rest;
    for (int v = 0; v < p.h.n(); ++v)
        if (!vs_contains(p.parts[i], v)) rest.push_back(v);
    FFunction flast = restrict_to(f_restrict(p.h, p.f, rest), p.parts[i]);
    if (!decide_choosable(sub.graph, flast).choosable)
        return {false, "choosable-when-last", p.parts[i]};
    return {};
}

PartCheck is_weak_part(const SubgraphPartition& p, int i) {
    p.validate();
    auto sub = induced(p.h, p.parts[i]);
    FFunction fpart = restrict_to(p.f, p.parts[i]);

    PartCheck c1 = check_condition1(sub.graph, fpart, i);
    if (!c1.ok) return c1;

    std::vector<int> others;
    for (std::size_t j = 0; j < p.parts.size(); ++j)
        if (static_cast<int>(j) != i) others.push_back(static_cast<int>(j));

    auto colorable_after = [&](const VertexSet& blocked_parts_union) {
        FFunction fu = restrict_to(f_restrict(p.h, p.f, blocked_parts_union), p.parts[i]);
        return decide_choosable(sub.graph, fu).choosable;
    };
    if (others.empty()) {
        if (!decide_choosable(sub.graph, fpart).choosable)
            return {false, "choosable-under-pair", {}};
    } else if (others.size() == 1) {
        if (!colorable_after(p.parts[others[0]]))
            return {false, "choosable-under-pair", {others[0]}};
    } else {
        for (std::size_t a = 0; a < others.size(); ++a)
            for (std::size_t b = a + 1; b < others.size(); ++b)
                if (!colorable_after(vs_union(p.parts[others[a]], p.parts[others[b]])))
                    return {false, "choosable-under-pair", {others[a], others[b]}};
    }
    return {};
}

namespace {

// P restricted to `rest` must be a path; returns it ordered, or nullopt.
std::optional<std::vector<int>> as_path(const Graph& g, const VertexSet& rest) {
    if (rest.empty()) return std::nullopt;
    auto sub = induced(g, rest);
    if (!is_connected(sub.graph)) return std::nullopt;
    if (sub.graph.m() != sub.graph.n() - 1) return std::nullopt;
    int start = -1;
    for (int v = 0; v < sub.graph.n(); ++v) {
        if (sub.graph.degree(v) > 2) return std::nullopt;
        if (sub.graph.degree(v) <= 1 && start < 0) start = v;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < sub.graph.n()) {
        int nxt = -1;
        for (int w : sub.graph.neighbors(cur))
            if (w != prev) nxt = w;
        if (nxt < 0) return std::nullopt;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    for (auto& v : order) v = sub.to_host[v];
    return order;
}

}  // namespace

std::optional<std::string> match_part_pattern(const SubgraphPartition& p, int i) {
    p.validate();
    const Graph& h = p.h;
    const FFunction& f = p.f;
    const VertexSet& part = p.parts[i];
    auto owner = p.part_of();

    auto spare = [&](int v) { return f(v) >= h.degree(v) + 1; };
    auto tight = [&](int v) { return f(v) >= h.degree(v); };
    auto outside_parts = [&](int v) {
        VertexSet out;
        for (int w : h.neighbors(v))
            if (owner[w] != i) out.push_back(owner[w]);
        return make_vertex_set(std::move(out));
    };
    auto ends_in_distinct_parts = [&](int v1, int vt) {
        if (v1 == vt) return outside_parts(v1).size() >= 2;
        for (int j1 : outside_parts(v1))
            for (int j2 : outside_parts(vt))
                if (j1 != j2) return true;
        return false;
    };

    // petal-internal: root + path of 1..3, root sees the whole path
    for (int r : part) {
        if (!spare(r)) continue;
        VertexSet rest = vs_minus(part, {r});
        auto path = as_path(h, rest);
        if (!path || path->size() < 1 || path->size() > 3) continue;
        bool root_sees_all = true, path_ok = true;
        for (int v : *path) {
            if (!h.has_edge(r, v)) root_sees_all = false;
            if (!tight(v)) path_ok = false;
        }
        if (root_sees_all && path_ok && ends_in_distinct_parts(path->front(), path->back()))
            return "petal-internal";
    }
    // petal-end: petal plus r' adjacent to v1 only (and possibly to r)
    for (int r : part) {
        if (!spare(r)) continue;
        for (int rp : part) {
            if (rp == r || !spare(rp)) continue;
            VertexSet rest = vs_minus(part, make_vertex_set({r, rp}));
            auto path = as_path(h, rest);
            if (!path || path->size() < 1 || path->size() > 3) continue;
            for (int flip = 0; flip < 2; ++flip) {
                std::vector<int> ordered = *path;
                if (flip) std::reverse(ordered.begin(), ordered.end());
                bool ok = h.has_edge(rp, ordered.front());
                for (std::size_t t = 1; t < ordered.size() && ok; ++t)
                    if (h.has_edge(rp, ordered[t])) ok = false;
                for (int v : ordered) {
                    if (!h.has_edge(r, v)) ok = false;
                    if (!tight(v)) ok = false;
                }
                if (ok && !outside_parts(ordered.back()).empty()) return "petal-end";
            }
        }
    }
    // special-K4
    if (part.size() == 4) {
        auto sub = induced(h, part).graph;
        if (sub.m() == 6) {
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    VertexSet sp{part[a], part[b]};
                    VertexSet ti = vs_minus(part, sp);
                    bool ok = spare(sp[0]) && spare(sp[1]) && tight(ti[0]) && tight(ti[1]) &&
                              !outside_parts(ti[0]).empty() && !outside_parts(ti[1]).empty();
                    if (ok) return "special-K4";
                }
        }
    }
    // weak-petal: root adjacent to all of the path but its far end
    for (int r : part) {
        if (!spare(r)) continue;
        VertexSet rest = vs_minus(part, {r});
        auto path = as_path(h, rest);
        if (!path || path->size() < 2 || path->size() > 4) continue;
        for (int flip = 0; flip < 2; ++flip) {
            std::vector<int> ordered = *path;
            if (flip) std::reverse(ordered.begin(), ordered.end());
            bool ok = !h.has_edge(r, ordered.back());
            for (std::size_t t = 0; t + 1 < ordered.size() && ok; ++t)
                if (!h.has_edge(r, ordered[t])) ok = false;
            for (int v : ordered)
                if (!tight(v)) ok = false;
            if (ok && ends_in_distinct_parts(ordered.front(), ordered.back()))
                return "weak-petal";
        }
    }
    // weak-path (v1, v2, v3) with a spare middle
    if (part.size() == 3) {
        auto path = as_path(h, part);
        if (path && path->size() == 3 && spare((*path)[1]) && tight((*path)[0]) &&
            tight((*path)[2]) && ends_in_distinct_parts(path->front(), path->back()))
            return "weak-path";
    }
    // star-weak: center x with up to 3 leaves, edges among leaves allowed
    for (int x : part) {
        VertexSet leaves = vs_minus(part, {x});
        if (leaves.size() > 3) continue;
        bool ok = f(x) >= h.degree(x) - 1;
        for (int r : leaves) {
            if (!h.has_edge(x, r)) ok = false;
            if (!spare(r)) ok = false;
        }
        if (!ok) continue;
        int t = static_cast<int>(leaves.size());
        if (static_cast<int>(outside_parts(x).size()) >= 5 - t) return "star-weak";
    }
    return std::nullopt;
}

PartLabeling square_labeling(const SubgraphPartition& p, int b, int d) {
    p.validate();
    for (const auto& part : p.parts)
        if (static_cast<int>(part.size()) > b)
            throw PreconditionViolation("square_labeling: part larger than b", part);
    for (int v = 0; v < p.h.n(); ++v)
        if (p.h.degree(v) > d)
            throw PreconditionViolation("square_labeling: degree above d", {v});

    int mparts = static_cast<int>(p.parts.size());
    std::vector<std::vector<int>> adj(mparts);
    for (int i = 0; i < mparts; ++i)
        for (int j = i + 1; j < mparts; ++j)
            if (p.parts_adjacent(i, j)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    PartLabeling out;
    out.tau.assign(mparts, 0);
    for (int i = 0; i < mparts; ++i) {
        std::vector<char> used(mparts + 2, 0);
        for (int j : adj[i])
            if (j < i && out.tau[j]) used[out.tau[j]] = 1;
        for (int j : adj[i])  // distance two
            for (int k2 : adj[j])
                if (k2 != i && k2 < i && out.tau[k2]) used[out.tau[k2]] = 1;
        int lbl = 1;
        while (used[lbl]) ++lbl;
        out.tau[i] = lbl;
    }
    int maxlbl = 0;
    for (int t : out.tau) maxlbl = std::max(maxlbl, t);
    out.universe = std::max(b * d * b * d, maxlbl);
    // invariants: adjacent parts differ; no part sees a label twice
    for (int i = 0; i < mparts; ++i) {
        std::vector<char> seen(out.universe + 1, 0);
        for (int j : adj[i]) {
            if (out.tau[j] == out.tau[i])
                throw std::logic_error("square labeling: adjacent parts share a label");
            if (seen[out.tau[j]])
                throw std::logic_error("square labeling: repeated label in a neighborhood");
            seen[out.tau[j]] = 1;
        }
    }
    return out;
}

namespace {

// proper colorings of one part given the colors already placed on h
std::vector<std::vector<std::pair<int, int>>> part_extensions(const Graph& h,
                                                              const ListAssignment& l,
                                                              const VertexSet& part,
                                                              const Coloring& phi) {
    auto sub = induced(h, part);
    ListAssignment pl(sub.graph.n());
    for (int i = 0; i < sub.graph.n(); ++i) {
        int v = sub.to_host[i];
        for (int c : l.at(v)) {
            bool blocked = false;
            for (int w : h.neighbors(v))
                if (phi[w] == c) blocked = true;
            if (!blocked) pl.lists[i].push_back(c);
        }
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& col : enumerate_list_colorings(sub.graph, pl)) {
        std::vector<std::pair<int, int>> assign;
        for (int i = 0; i < sub.graph.n(); ++i) assign.emplace_back(sub.to_host[i], col[i]);
        out.push_back(std::move(assign));
    }
    return out;
}

}  // namespace

Procedure partition_procedure(const SubgraphPartition& p, int weak_index, const ListAssignment& l,
                              const PartLabeling& labeling) {
    // captured by value: the procedure must be re-runnable
    return [p, weak_index, l, labeling](Chooser& ch) {
        int mparts = static_cast<int>(p.parts.size());
        int T = labeling.universe;
        VertexSet used_labels = make_vertex_set(labeling.tau);
        int u = static_cast<int>(used_labels.size());

        // color every part carrying the given label, ascending part index;
        // then continue with the continuation
        std::function<void(Coloring&, int, int, const std::function<void(Coloring&)>&)>
            color_label_parts = [&](Coloring& phi, int label, int from_part,
                                    const std::function<void(Coloring&)>& done) {
                int next = -1;
                for (int i = from_part; i < mparts; ++i)
                    if (labeling.tau[i] == label) {
                        next = i;
                        break;
                    }
                if (next < 0) {
                    done(phi);
                    return;
                }
                auto exts = part_extensions(p.h, l, p.parts[next], phi);
                if (exts.empty())
                    throw std::logic_error("partition procedure: part has no proper extension");
                ch.choose(static_cast<int>(exts.size()), [&](int pick) {
                    Coloring phi2 = phi;
                    for (auto [v, c] : exts[pick]) phi2[v] = c;
                    color_label_parts(phi2, label, next + 1, done);
                });
            };

        // stage: draw a label uniformly from `remaining` slots of 1..T,
        // merging the labels used by no part into one weighted branch
        auto draw_label = [&](const VertexSet& excluded, int unused_excluded,
                              const std::function<void(int)>& k) {
            std::vector<int> opts;
            std::vector<Rational> w;
            for (int lbl : used_labels)
                if (!vs_contains(excluded, lbl)) {
                    opts.push_back(lbl);
                    w.emplace_back(1);
                }
            int unused_total = T - u - unused_excluded;
            if (unused_total > 0) {
                opts.push_back(-1);  // a label carried by no part
                w.emplace_back(unused_total);
            }
            ch.choose_weighted(w, [&](int idx) { k(opts[idx]); });
        };

        Coloring phi0(p.h.n(), -1);
        draw_label({}, 0, [&](int t1) {
            auto after_t1 = [&](Coloring& phi1) {
                VertexSet excl1 = t1 >= 0 ? VertexSet{t1} : VertexSet{};
                draw_label(excl1, t1 >= 0 ? 0 : 1, [&](int t2) {
                    auto after_t2 = [&](Coloring& phi2) {
                        int weak_label = labeling.tau[weak_index];
                        auto after_t3 = [&](Coloring& phi3) {
                            // remaining parts, ascending index
                            std::function<void(Coloring&, int)> rest = [&](Coloring& phi4,
                                                                           int from) {
                                int next = -1;
                                for (int i = from; i < mparts; ++i)
                                    if (phi4[p.parts[i][0]] < 0) {
                                        next = i;
                                        break;
                                    }
                                if (next < 0) {
                                    ch.leaf(phi4);
                                    return;
                                }
                                auto exts = part_extensions(p.h, l, p.parts[next], phi4);
                                if (exts.empty())
                                    throw std::logic_error(
                                        "partition procedure: part has no proper extension");
                                ch.choose(static_cast<int>(exts.size()), [&](int pick) {
                                    Coloring phi5 = phi4;
                                    for (auto [v, c] : exts[pick]) phi5[v] = c;
                                    rest(phi5, next + 1);
                                });
                            };
                            rest(phi3, 0);
                        };
                        if (weak_label != t1 && weak_label != t2) {
                            color_label_parts(phi2, weak_label, 0, after_t3);
                        } else {
                            VertexSet excl;
                            int unused_excl = 0;
                            for (int t : {t1, t2})
                                if (t >= 0)
                                    excl.push_back(t);
                                else
                                    ++unused_excl;
                            excl = make_vertex_set(std::move(excl));
                            draw_label(excl, unused_excl, [&](int t3) {
                                if (t3 >= 0)
                                    color_label_parts(phi2, t3, 0, after_t3);
                                else
                                    after_t3(phi2);
                            });
                        }
                    };
                    if (t2 >= 0)
                        color_label_parts(phi1, t2, 0, after_t2);
                    else
                        after_t2(phi1);
                });
            };
            if (t1 >= 0)
                color_label_parts(phi0, t1, 0, after_t1);
            else
                after_t1(phi0);
        });
    };
}

Sampler partition_sampler(const SubgraphPartition& p, int weak_index, const ListAssignment& l,
                          std::uint64_t seed, int b, int d, bool verify_parts) {
    p.validate();
    if (weak_index < 0 || weak_index >= static_cast<int>(p.parts.size()))
        throw std::out_of_range("weak_index out of range");
    if (!l.is_f_assignment(p.f))
        throw PreconditionViolation("partition_sampler: lists are not an f-assignment");
    for (int v = 0; v < p.h.n(); ++v)
        if (p.f(v) > 4) throw PreconditionViolation("partition_sampler: f exceeds 4", {v});
    int bsize = 0, dmax = 0;
    for (const auto& part : p.parts) bsize = std::max(bsize, static_cast<int>(part.size()));
    for (int v = 0; v < p.h.n(); ++v) dmax = std::max(dmax, p.h.degree(v));
    b = std::max({4, b, bsize});
    d = std::max({4, d, dmax});
    if (verify_parts) {
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            PartCheck chk = (static_cast<int>(i) == weak_index)
                                ? is_weak_part(p, static_cast<int>(i))
                                : is_strong_part(p, static_cast<int>(i));
            if (!chk.ok)
                throw PreconditionViolation("partition_sampler: part " + std::to_string(i) +
                                                " fails " + chk.condition,
                                            chk.witness);
        }
    }
    PartLabeling labeling = square_labeling(p, b, d);

    Sampler s;
    s.graph = p.h;
    s.lists = l;
    s.seed = seed;
    s.procedure = partition_procedure(p, weak_index, l, labeling);
    Rational T(labeling.universe);
    Rational fix_term = inv_pow(4, static_cast<unsigned long>(b)) / T;
    Rational forb_term =
        inv_pow(4, static_cast<unsigned long>(2 * b)) / (T * (T - 1));
    s.claimed_alpha = std::min(fix_term, forb_term);
    return s;
}

}  // namespace flexcol
