#include "flexcol/assignment.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flexcol {

bool ListAssignment::is_f_assignment(const FFunction& f) const {
    if (f.size() != size()) return false;
    for (int v = 0; v < size(); ++v)
        if (static_cast<int>(lists[v].size()) != f.clamped(v)) return false;
    return true;
}

int ListAssignment::max_color() const {
    int mx = -1;
    for (const auto& l : lists)
        for (int c : l) mx = std::max(mx, c);
    return mx;
}

FFunction ell(const Graph& g, const VertexSet& h_vertices, int k) {
    auto sub = induced(g, h_vertices);
    std::vector<int> vals(h_vertices.size());
    for (std::size_t i = 0; i < h_vertices.size(); ++i) {
        int v = h_vertices[i];
        vals[i] = k - g.degree(v) + sub.graph.degree(static_cast<int>(i));
    }
    return FFunction(std::move(vals));
}

SubgraphWithF ell_subgraph(const Graph& g, const VertexSet& h_vertices, int k) {
    SubgraphWithF out;
    out.sub = induced(g, h_vertices);
    std::vector<int> vals(h_vertices.size());
    for (std::size_t i = 0; i < h_vertices.size(); ++i)
        vals[i] = k - g.degree(h_vertices[i]) + out.sub.graph.degree(static_cast<int>(i));
    out.f = FFunction(std::move(vals));
    return out;
}

FFunction f_restrict(const Graph& g, const FFunction& f, const VertexSet& u_set) {
    FFunction out = f;
    for (int v = 0; v < g.n(); ++v) {
        if (vs_contains(u_set, v)) continue;
        int drop = 0;
        for (int w : g.neighbors(v))
            if (vs_contains(u_set, w)) ++drop;
        out.values[v] = f(v) - drop;
    }
    return out;
}

FFunction f_minus_indicator(const FFunction& f, const VertexSet& u_set) {
    FFunction out = f;
    for (int v : u_set) out.values[v] = f(v) - 1;
    return out;
}

BigInt count_canonical_assignments(const FFunction& f) {
    // classes-so-far -> count
    std::map<int, BigInt> dp{{0, BigInt(1)}};
    for (int v = 0; v < f.size(); ++v) {
        int s = f.clamped(v);
        if (s == 0) continue;
        std::map<int, BigInt> nx;
        for (const auto& [k, cnt] : dp) {
            for (int j = 0; j <= std::min(s, k); ++j) {
                // choose j slots to reuse existing classes, injectively
                BigInt ways = cnt;
                BigInt binom;
                mpz_bin_uiui(binom.get_mpz_t(), s, j);
                ways *= binom;
                for (int t = 0; t < j; ++t) ways *= (k - t);
                nx[k + (s - j)] += ways;
            }
        }
        dp = std::move(nx);
    }
    BigInt total = 0;
    for (const auto& [k, cnt] : dp) total += cnt;
    return total;
}

CanonicalAssignmentStream::CanonicalAssignmentStream(const Graph& g, const FFunction& f) {
    if (f.size() != g.n()) throw std::invalid_argument("f size mismatch");
    n_ = g.n();
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < f.clamped(v); ++i) slot_vertex_.push_back(v);
    rgs_.assign(slot_vertex_.size(), 0);
}

bool CanonicalAssignmentStream::valid_at(int i) const {
    for (int j = i - 1; j >= 0 && slot_vertex_[j] == slot_vertex_[i]; --j)
        if (rgs_[j] == rgs_[i]) return false;
    return true;
}

ListAssignment CanonicalAssignmentStream::materialize() const {
    ListAssignment l(n_);
    for (std::size_t i = 0; i < slot_vertex_.size(); ++i)
        l.lists[slot_vertex_[i]].push_back(rgs_[i]);
    for (auto& lst : l.lists) std::sort(lst.begin(), lst.end());
    return l;
}

bool CanonicalAssignmentStream::next(ListAssignment& out) {
    if (done_) return false;
    int s = static_cast<int>(rgs_.size());
    if (first_) {
        first_ = false;
        // minimal RGS: slot i of a vertex takes the smallest class unused by
        // its earlier slots
        for (int i = 0; i < s; ++i) {
            rgs_[i] = 0;
            while (!valid_at(i)) ++rgs_[i];
        }
        out = materialize();
        if (s == 0) done_ = true;
        return true;
    }
    int i = s - 1;
    for (; i >= 0; --i) {
        int mx = 0;
        for (int j = 0; j < i; ++j) mx = std::max(mx, rgs_[j] + 1);
        bool moved = false;
        for (int cand = rgs_[i] + 1; cand <= mx; ++cand) {
            rgs_[i] = cand;
            if (valid_at(i)) {
                moved = true;
                break;
            }
        }
        if (moved) break;
    }
    if (i < 0) {
        done_ = true;
        return false;
    }
    for (int j = i + 1; j < s; ++j) {
        rgs_[j] = 0;
        while (!valid_at(j)) ++rgs_[j];
    }
    out = materialize();
    return true;
}

HardAssignmentStream::HardAssignmentStream(const Graph& g, const FFunction& f, long long node_budget)
    : n_(g.n()), budget_(node_budget) {
    if (f.size() != g.n()) throw std::invalid_argument("f size mismatch");
    if (n_ > 31) throw std::invalid_argument("hard assignment stream limited to n <= 31");
    need_.resize(n_);
    for (int v = 0; v < n_; ++v) need_[v] = f.clamped(v);
}

bool HardAssignmentStream::all_done() const {
    for (int v = 0; v < n_; ++v)
        if (need_[v] > 0) return false;
    return true;
}

bool HardAssignmentStream::feasible(unsigned mask) const {
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1u) {
            if (need_[v] == 0) return false;
        }
    for (const Level& lv : stack_)
        if ((lv.mask & mask) == 0) return false;
    return true;
}

ListAssignment HardAssignmentStream::materialize() const {
    ListAssignment l(n_);
    for (std::size_t c = 0; c < stack_.size(); ++c)
        for (int v = 0; v < n_; ++v)
            if ((stack_[c].mask >> v) & 1u) l.lists[v].push_back(static_cast<int>(c));
    return l;
}

bool HardAssignmentStream::next(ListAssignment& out) {
    if (done_) return false;
    unsigned full = (n_ >= 31) ? 0x7fffffffu : ((1u << n_) - 1);
    bool backtrack = false;
    unsigned cand;
    if (stack_.empty() && nodes_ == 0) {
        if (all_done()) {  // every f(v) <= 0: the single all-empty assignment
            out = materialize();
            done_ = true;
            return true;
        }
        cand = full;
    } else {
        backtrack = true;  // resume after the previously yielded family
        cand = 0;
    }
    while (true) {
        if (backtrack) {
            if (stack_.empty()) {
                done_ = true;
                return false;
            }
            Level lv = stack_.back();
            stack_.pop_back();
            for (int v = 0; v < n_; ++v)
                if ((lv.mask >> v) & 1u) ++need_[v];
            cand = lv.mask - 1;
            backtrack = false;
        }
        while (cand >= 1 && !feasible(cand)) {
            --cand;
            if (++nodes_ > budget_) throw BudgetExceeded("hard assignment enumeration budget");
        }
        if (cand < 1) {
            backtrack = true;
            continue;
        }
        stack_.push_back({cand, 0});
        for (int v = 0; v < n_; ++v)
            if ((cand >> v) & 1u) --need_[v];
        if (++nodes_ > budget_) throw BudgetExceeded("hard assignment enumeration budget");
        if (all_done()) {
            out = materialize();
            return true;
        }
        // children may repeat the same mask
    }
}

std::string format_lists(const ListAssignment& l) {
    std::ostringstream os;
    for (int v = 0; v < l.size(); ++v) {
        os << v << ":";
        for (int c : l.at(v)) os << " " << c;
        os << "\n";
    }
    return os.str();
}

ListAssignment parse_lists(std::istream& in, int n) {
    ListAssignment l(n);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        int v = std::stoi(line.substr(0, colon));
        if (v < 0 || v >= n) throw std::invalid_argument("list vertex out of range");
        std::istringstream ls(line.substr(colon + 1));
        int c;
        std::vector<int> cs;
        while (ls >> c) cs.push_back(c);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        l.lists[v] = std::move(cs);
    }
    return l;
}

bool proper_coloring(const Graph& g, const Coloring& phi) {
    if (static_cast<int>(phi.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (phi[v] < 0) return false;
        for (int w : g.neighbors(v))
            if (phi[w] == phi[v]) return false;
    }
    return true;
}

bool proper_l_coloring(const Graph& g, const ListAssignment& l, const Coloring& phi) {
    if (!proper_coloring(g, phi)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (!std::binary_search(l.at(v).begin(), l.at(v).end(), phi[v])) return false;
    return true;
}

}  // namespace flexcol
