#include "flexcol/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace flexcol {

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    std::uint64_t bound = ~0ULL - (~0ULL % n);
    std::uint64_t r;
    do {
        r = next();
    } while (r >= bound);
    return r % n;
}

BigInt SplitMix64::below_big(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("below_big: n <= 0");
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    while (true) {
        BigInt r = 0;
        for (std::size_t got = 0; got < bits; got += 64) {
            r <<= 64;
            r += BigInt(next());
        }
        std::size_t excess = ((bits + 63) / 64) * 64 - bits;
        r >>= excess;
        if (r < n) return r;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 s(seed ^ (0xD1B54A32D192ED03ULL * (counter + 1)));
    return s.next();
}

namespace {

class SampleChooser : public Chooser {
public:
    explicit SampleChooser(std::uint64_t seed) : rng_(seed) {}

    void choose(int n, const std::function<void(int)>& k) override {
        if (n <= 0) throw std::logic_error("choose over empty option set");
        k(static_cast<int>(rng_.below(static_cast<std::uint64_t>(n))));
    }

    void choose_weighted(const std::vector<Rational>& weights,
                         const std::function<void(int)>& k) override {
        if (weights.empty()) throw std::logic_error("weighted choose over empty option set");
        BigInt denom = 1;
        for (const auto& w : weights) {
            if (w < 0) throw std::invalid_argument("negative weight");
            BigInt l;
            mpz_lcm(l.get_mpz_t(), denom.get_mpz_t(), w.get_den().get_mpz_t());
            denom = l;
        }
        std::vector<BigInt> scaled;
        BigInt total = 0;
        for (const auto& w : weights) {
            BigInt s = w.get_num() * (denom / w.get_den());
            total += s;
            scaled.push_back(s);
        }
        if (total == 0) throw std::logic_error("all weights zero");
        BigInt r = rng_.below_big(total);
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            if (r < scaled[i]) {
                k(static_cast<int>(i));
                return;
            }
            r -= scaled[i];
        }
        throw std::logic_error("weighted choose fell through");
    }

    void leaf(const Coloring& phi) override { result = phi; }

    Coloring result;

private:
    SplitMix64 rng_;
};

class ExpandChooser : public Chooser {
public:
    ExpandChooser(long long max_leaves, const std::function<void(const Coloring&, const Rational&)>& cb)
        : budget_(max_leaves), cb_(cb) {}

    void choose(int n, const std::function<void(int)>& k) override {
        if (n <= 0) throw std::logic_error("choose over empty option set");
        Rational saved = prob_;
        for (int i = 0; i < n; ++i) {
            prob_ = saved / n;
            k(i);
        }
        prob_ = saved;
    }

    void choose_weighted(const std::vector<Rational>& weights,
                         const std::function<void(int)>& k) override {
        Rational total(0);
        for (const auto& w : weights) total += w;
        if (total <= 0) throw std::logic_error("weighted choose with zero mass");
        Rational saved = prob_;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] == 0) continue;
            prob_ = saved * weights[i] / total;
            k(static_cast<int>(i));
        }
        prob_ = saved;
    }

    void leaf(const Coloring& phi) override {
        if (++leaves_ > budget_) throw BudgetExceeded("expansion branch budget");
        cb_(phi, prob_);
    }

    long long leaves() const { return leaves_; }

private:
    Rational prob_{1};
    long long leaves_ = 0;
    long long budget_;
    std::function<void(const Coloring&, const Rational&)> cb_;
};

}  // namespace

Coloring Sampler::sample() {
    SampleChooser ch(derive_seed(seed, sample_index_++));
    procedure(ch);
    if (!proper_l_coloring(graph, lists, ch.result))
        throw std::logic_error("sampler produced an improper coloring");
    return ch.result;
}

ExpansionStats Sampler::expand(long long max_leaves) const {
    ExpansionStats st;
    st.total = 0;
    st.fix.resize(graph.n());
    ExpandChooser ch(max_leaves, [&](const Coloring& phi, const Rational& p) {
        if (!proper_l_coloring(graph, lists, phi))
            throw std::logic_error("sampler produced an improper coloring");
        st.total += p;
        for (int v = 0; v < graph.n(); ++v) st.fix[v][phi[v]] += p;
        for (int u = 0; u < graph.n(); ++u)
            for (int v = u + 1; v < graph.n(); ++v)
                if (phi[u] == phi[v]) st.joint_eq[{u, v}][phi[u]] += p;
    });
    procedure(ch);
    st.leaves = ch.leaves();
    if (st.total != 1) throw std::logic_error("expansion probabilities do not sum to 1");
    return st;
}

Rational ExpansionStats::fix_prob(int v, int c) const {
    auto it = fix[v].find(c);
    return it == fix[v].end() ? Rational(0) : it->second;
}

Rational ExpansionStats::avoid_prob(const VertexSet& u, int c) const {
    if (u.size() == 1) return Rational(1) - fix_prob(u[0], c);
    if (u.size() != 2) throw std::invalid_argument("avoid_prob supports |U| <= 2");
    Rational both(0);
    auto it = joint_eq.find({u[0], u[1]});
    if (it != joint_eq.end()) {
        auto jt = it->second.find(c);
        if (jt != it->second.end()) both = jt->second;
    }
    return Rational(1) - fix_prob(u[0], c) - fix_prob(u[1], c) + both;
}

Rational ExpansionStats::min_fix(const ListAssignment& l) const {
    std::optional<Rational> best;
    for (int v = 0; v < l.size(); ++v)
        for (int c : l.at(v)) {
            Rational p = fix_prob(v, c);
            if (!best || p < *best) best = p;
        }
    return best ? *best : Rational(1);
}

Rational ExpansionStats::min_forb2(const ListAssignment& l) const {
    std::optional<Rational> best;
    auto consider = [&](const VertexSet& u) {
        VertexSet colors;
        for (int v : u)
            for (int c : l.at(v)) colors.push_back(c);
        colors = make_vertex_set(std::move(colors));
        for (int c : colors) {
            Rational p = avoid_prob(u, c);
            if (!best || p < *best) best = p;
        }
    };
    for (int v = 0; v < l.size(); ++v) consider({v});
    for (int u = 0; u < l.size(); ++u)
        for (int v = u + 1; v < l.size(); ++v) consider({u, v});
    return best ? *best : Rational(1);
}

bool ExpansionStats::per_vertex_sums_ok(const ListAssignment& l) const {
    for (int v = 0; v < l.size(); ++v) {
        Rational s(0);
        for (int c : l.at(v)) s += fix_prob(v, c);
        if (s != 1) return false;
    }
    return true;
}

WilsonInterval wilson(long long successes, long long trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace flexcol
