#include "mdim/saw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <thread>

namespace mdim {

double MomentSequence::support_radius() const {
    return degree_bound >= 2 ? 2.0 * std::sqrt(double(degree_bound - 1)) : 0.0;
}

namespace {

Int int_from_u128(unsigned __int128 v) {
    Int hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) + Int(static_cast<std::uint64_t>(v));
}
Int to_int(std::uint64_t v) { return Int(v); }
Int to_int(unsigned __int128 v) { return int_from_u128(v); }

// ---------------------------------------------------------------------------
// Navigators: state encoding, occupancy, neighbor enumeration. All walks
// start at the center of a padded dense grid, so no bounds checks are
// needed: a walk of length <= depth stays strictly inside the padding.

struct GridNav {
    using State = std::int32_t;
    int d;
    std::int64_t side;
    std::vector<std::int32_t> steps;
    std::vector<std::uint8_t> vis;
    State root;

    GridNav(int d_, int depth) : d(d_), side(2 * depth + 3) {
        double cells = std::pow(double(side), d);
        if (cells > double(1u << 31))
            throw resource_limit_error("saw: dense grid too large for this depth");
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= side;
        vis.assign(static_cast<size_t>(total), 0);
        std::int64_t stride = 1, center = 0;
        steps.clear();
        for (int i = 0; i < d; ++i) {
            steps.push_back(static_cast<std::int32_t>(stride));
            steps.push_back(static_cast<std::int32_t>(-stride));
            center += (side / 2) * stride;
            stride *= side;
        }
        root = static_cast<State>(center);
    }

    bool visited(State s) const { return vis[s]; }
    void set(State s) { vis[s] = 1; }
    void clear(State s) { vis[s] = 0; }
    template <class F>
    void for_each_neighbor(State s, F&& f) const {
        for (std::int32_t st : steps) f(s + st);
    }
};

// Brick-wall honeycomb: grid index in the low bits would force a decode of
// x+y parity, so the parity rides in bit 0 of the state.
struct HoneyNav {
    using State = std::int32_t;
    std::int32_t side;
    std::vector<std::uint8_t> vis;
    State root;

    explicit HoneyNav(int depth) : side(2 * depth + 3) {
        vis.assign(static_cast<size_t>(side) * side, 0);
        std::int32_t center = (side / 2) * side + (side / 2);
        root = (center << 1);  // parity 0
    }
    bool visited(State s) const { return vis[s >> 1]; }
    void set(State s) { vis[s >> 1] = 1; }
    void clear(State s) { vis[s >> 1] = 0; }
    template <class F>
    void for_each_neighbor(State s, F&& f) const {
        std::int32_t idx = s >> 1, par = s & 1;
        std::int32_t q = par ^ 1;
        f(((idx + side) << 1) | q);
        f(((idx - side) << 1) | q);
        f(((idx + (par == 0 ? 1 : -1)) << 1) | q);
    }
};

struct GraphNav {
    using State = int;
    const Graph* g;
    std::vector<std::uint8_t> vis;
    State root;

    GraphNav(const Graph& g_, int v) : g(&g_), vis(g_.n, 0), root(v) {}
    bool visited(State s) const { return vis[s]; }
    void set(State s) { vis[s] = 1; }
    void clear(State s) { vis[s] = 0; }
    template <class F>
    void for_each_neighbor(State s, F&& f) const {
        for (int w : g->adj[s]) f(w);
    }
};

// ---------------------------------------------------------------------------
// Series DFS. Series hold even coefficients only: w[j] = a_{2j} of the
// subtree root. Combination rule: W = 1 / (1 - x^2 sum_children W_child).

template <class C, class Nav>
struct DfsEngine {
    Nav nav;
    std::vector<std::vector<C>> acc, child;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    std::atomic<std::uint64_t>* shared_nodes = nullptr;

    DfsEngine(Nav nav_, int maxm, std::uint64_t budget_)
        : nav(std::move(nav_)), budget(budget_) {
        acc.resize(maxm + 1);
        child.resize(maxm + 1);
        for (int l = 0; l <= maxm; ++l) {
            acc[l].assign(maxm + 1, C(0));
            child[l].assign(maxm + 1, C(0));
        }
    }

    void run(typename Nav::State s, int m, C* out) {
        if (++nodes > budget) throw resource_limit_error("saw: node budget exceeded");
        out[0] = C(1);
        if (m == 0) return;
        C* a = acc[m].data();
        std::memset(a + 1, 0, sizeof(C) * m);
        nav.set(s);
        C* ch = child[m].data();
        nav.for_each_neighbor(s, [&](typename Nav::State t) {
            if (nav.visited(t)) return;
            run(t, m - 1, ch);
            for (int j = 0; j < m; ++j) a[j + 1] += ch[j];
        });
        nav.clear(s);
        for (int j = 1; j <= m; ++j) {
            C v = C(0);
            for (int i = 1; i <= j; ++i) v += a[i] * out[j - i];
            out[j] = v;
        }
    }
};

// Parallel variant: enumerate walk prefixes of length 2 (or 1 near the
// truncation depth), farm the independent subtrees out to worker threads,
// then combine in a fixed order. Output is schedule-independent.
template <class C, class Nav>
std::vector<C> root_series(const Nav& proto, int m, const SawOptions& opt,
                           std::uint64_t* nodes_out) {
    if (opt.threads <= 1 || m < 3) {
        DfsEngine<C, Nav> eng(proto, m, opt.node_budget);
        std::vector<C> w(m + 1, C(0));
        eng.run(eng.nav.root, m, w.data());
        *nodes_out = eng.nodes;
        return w;
    }
    using State = typename Nav::State;
    struct Task {
        State c, g;
        std::vector<C> series;  // of the depth-2 subtree, length m-1
    };
    Nav nav = proto;
    std::vector<State> level1;
    nav.set(nav.root);
    nav.for_each_neighbor(nav.root, [&](State t) {
        if (!nav.visited(t)) level1.push_back(t);
    });
    std::vector<std::vector<int>> kids(level1.size());
    std::vector<Task> tasks;
    for (size_t i = 0; i < level1.size(); ++i) {
        nav.set(level1[i]);
        nav.for_each_neighbor(level1[i], [&](State t) {
            if (!nav.visited(t)) {
                kids[i].push_back(static_cast<int>(tasks.size()));
                tasks.push_back({level1[i], t, {}});
            }
        });
        nav.clear(level1[i]);
    }
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> total_nodes{static_cast<std::uint64_t>(1 + level1.size())};
    std::atomic<bool> over_budget{false};
    auto worker = [&]() {
        DfsEngine<C, Nav> eng(proto, m - 2, opt.node_budget);
        eng.nav.set(eng.nav.root);
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            Task& t = tasks[i];
            eng.nav.set(t.c);
            t.series.assign(m - 1, C(0));
            std::uint64_t before = eng.nodes;
            try {
                eng.run(t.g, m - 2, t.series.data());
            } catch (const resource_limit_error&) {
                over_budget = true;
                eng.nav.clear(t.c);
                break;
            }
            eng.nav.clear(t.c);
            if (total_nodes.fetch_add(eng.nodes - before) > opt.node_budget) {
                over_budget = true;
                break;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opt.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (over_budget) throw resource_limit_error("saw: node budget exceeded");

    // combine: W_c = 1/(1 - x^2 sum_g W_cg), W = 1/(1 - x^2 sum_c W_c)
    auto reciprocal = [](const std::vector<C>& sum, int mm) {
        std::vector<C> w(mm + 1, C(0));
        w[0] = C(1);
        for (int j = 1; j <= mm; ++j) {
            C v = C(0);
            for (int i = 1; i <= j; ++i) v += sum[i] * w[j - i];
            w[j] = v;
        }
        return w;
    };
    std::vector<C> acc_root(m + 1, C(0));
    for (size_t i = 0; i < level1.size(); ++i) {
        std::vector<C> acc_c(m, C(0));
        for (int ti : kids[i])
            for (int j = 0; j < m - 1; ++j) acc_c[j + 1] += tasks[ti].series[j];
        auto wc = reciprocal(acc_c, m - 1);
        for (int j = 0; j < m; ++j) acc_root[j + 1] += wc[j];
    }
    *nodes_out = total_nodes.load();
    return reciprocal(acc_root, m);
}

template <class Nav>
WalkCountTable walk_table(const Nav& nav, int D, int K, const SawOptions& opt,
                          const std::string& desc) {
    if (K < 0) throw input_error("closed_walk_counts: K >= 0");
    int m = K / 2;
    // coefficient width from the walk bound a_k <= D (D-1)^(k-1)
    Int bound = D >= 1 ? Int(D) : Int(1);
    for (int i = 0; i < std::max(0, K - 1); ++i) bound *= std::max(1, D - 1);
    WalkCountTable t;
    t.K = K;
    t.root = desc;
    std::uint64_t nodes = 0;
    std::vector<Int> w;
    if (bound < (Int(1) << 63)) {
        auto s = root_series<std::uint64_t>(nav, m, opt, &nodes);
        for (auto c : s) w.push_back(to_int(c));
    } else if (bound < (Int(1) << 126)) {
        auto s = root_series<unsigned __int128>(nav, m, opt, &nodes);
        for (auto c : s) w.push_back(to_int(c));
    } else {
        throw resource_limit_error("saw: walk counts exceed 128-bit budget");
    }
    t.a.assign(K + 1, Int(0));
    for (int j = 0; j <= m; ++j) t.a[2 * j] = w[j];
    t.nodes_visited = nodes;
    return t;
}

// Bethe lattice: every subtree below the root is isomorphic, so the
// subtree series solves S = 1/(1 - (d-1) x^2 S) and the root series is
// W = 1/(1 - d x^2 S). Iterating the fixed point m times is exact through
// degree 2m.
WalkCountTable bethe_walk_counts(int d, int K) {
    int m = K / 2;
    std::vector<Int> s{Int(1)};
    for (int it = 0; it < m; ++it) {
        std::vector<Int> b(m + 1, Int(0));
        for (int j = 0; j < std::min<int>(m, s.size()); ++j) b[j + 1] = s[j] * (d - 1);
        std::vector<Int> ns(m + 1, Int(0));
        ns[0] = 1;
        for (int j = 1; j <= m; ++j) {
            Int v = 0;
            for (int i = 1; i <= j; ++i) v += b[i] * ns[j - i];
            ns[j] = v;
        }
        s = std::move(ns);
    }
    std::vector<Int> b(m + 1, Int(0));
    for (int j = 0; j < std::min<int>(m, s.size()); ++j) b[j + 1] = s[j] * d;
    std::vector<Int> w(m + 1, Int(0));
    w[0] = 1;
    for (int j = 1; j <= m; ++j) {
        Int v = 0;
        for (int i = 1; i <= j; ++i) v += b[i] * w[j - i];
        w[j] = v;
    }
    WalkCountTable t;
    t.K = K;
    t.root = "bethe:" + std::to_string(d);
    t.a.assign(K + 1, Int(0));
    for (int j = 0; j <= m; ++j) t.a[2 * j] = w[j];
    t.nodes_visited = 0;
    return t;
}

}  // namespace

WalkCountTable closed_walk_counts(const Graph& g, int v, int K, const SawOptions& opt) {
    if (v < 0 || v >= g.n) throw input_error("closed_walk_counts: bad vertex");
    GraphNav nav(g, v);
    return walk_table(nav, std::max(2, g.max_degree()), K, opt,
                      "graph:" + std::to_string(v));
}

WalkCountTable closed_walk_counts(const LatticeSpec& L, int K, const SawOptions& opt) {
    if (K < 0) throw input_error("closed_walk_counts: K >= 0");
    switch (L.kind) {
        case LatticeKind::Bethe: return bethe_walk_counts(L.param, K);
        case LatticeKind::Hypercubic: {
            GridNav nav(L.param, K / 2);
            return walk_table(nav, 2 * L.param, K, opt, L.name());
        }
        case LatticeKind::Honeycomb: {
            HoneyNav nav(K / 2);
            return walk_table(nav, 3, K, opt, L.name());
        }
    }
    throw input_error("closed_walk_counts: bad lattice");
}

MomentSequence lattice_moments(const LatticeSpec& L, int K, const SawOptions& opt) {
    WalkCountTable t = closed_walk_counts(L, K, opt);
    MomentSequence ms;
    ms.degree_bound = L.coordination();
    ms.source = "lattice:" + L.name();
    ms.mu.reserve(K + 1);
    for (const Int& a : t.a) ms.mu.push_back(Rat(a));
    return ms;
}

MomentSequence average_finite_moments(const Graph& g, int K, const SawOptions& opt) {
    if (g.n == 0) throw input_error("average_finite_moments: empty graph");
    std::vector<Int> sums(K + 1, Int(0));
    for (int v = 0; v < g.n; ++v) {
        WalkCountTable t = closed_walk_counts(g, v, K, opt);
        for (int k = 0; k <= K; ++k) sums[k] += t.a[k];
    }
    MomentSequence ms;
    ms.degree_bound = std::max(2, g.max_degree());
    ms.source = "finite";
    ms.mu.reserve(K + 1);
    for (const Int& s : sums) ms.mu.push_back(Rat(s, g.n));
    return ms;
}

RootedGraph build_saw_tree(const Graph& g, int v, int depth, std::uint64_t node_budget) {
    if (g.n > 64) throw resource_limit_error("build_saw_tree: graphs up to 64 vertices");
    if (v < 0 || v >= g.n) throw input_error("build_saw_tree: bad vertex");
    struct Node {
        int endpoint;
        std::uint64_t occupied;
        int depth;
    };
    std::vector<Node> nodes{{v, std::uint64_t(1) << v, 0}};
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < nodes.size(); ++i) {
        Node nd = nodes[i];
        if (nd.depth == depth) continue;
        for (int w : g.adj[nd.endpoint]) {
            if ((nd.occupied >> w) & 1) continue;
            int id = static_cast<int>(nodes.size());
            if (nodes.size() >= node_budget)
                throw resource_limit_error("build_saw_tree: node budget exceeded");
            nodes.push_back({w, nd.occupied | (std::uint64_t(1) << w), nd.depth + 1});
            es.emplace_back(static_cast<int>(i), id);
        }
    }
    return {make_graph(static_cast<int>(nodes.size()), std::move(es)), 0};
}

bool hankel_positive(const std::vector<Rat>& mu) {
    if (mu.empty()) return true;
    int K = static_cast<int>(mu.size()) - 1;
    int m = K / 2;
    std::vector<std::vector<Rat>> H(m + 1, std::vector<Rat>(m + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) H[i][j] = mu[i + j];
    // symmetric Gaussian elimination; PSD iff all pivots are nonnegative
    // and zero pivots have zero rows
    for (int k = 0; k <= m; ++k) {
        if (H[k][k] < 0) return false;
        if (H[k][k] == 0) {
            for (int j = k + 1; j <= m; ++j)
                if (H[k][j] != 0) return false;
            continue;
        }
        for (int i = k + 1; i <= m; ++i) {
            Rat f = H[i][k] / H[k][k];
            for (int j = k; j <= m; ++j) H[i][j] -= f * H[k][j];
        }
    }
    return true;
}

}  // namespace mdim
