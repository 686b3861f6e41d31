#include "mdim/matching.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "mdim/saw.hpp"

namespace mdim {

IPoly MatchingPolynomial::signed_poly() const {
    IPoly f(n + 1, Int(0));
    for (int k = 0; k <= nu(); ++k) f[n - 2 * k] = (k % 2 == 0) ? m[k] : -m[k];
    return ipoly_trim(std::move(f));
}

Rat MatchingPolynomial::partition_at(const Rat& t) const {
    Rat s = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) s = s * t + Rat(*it);
    return s;
}

Rat MatchingPolynomial::partition_derivative_at(const Rat& t) const {
    Rat s = 0;
    for (int k = nu(); k >= 1; --k) s = s * t + Rat(m[k] * k);
    return s * t;
}

// ---------------------------------------------------------------------------
// Matching generating polynomials in t, as coefficient vectors.

using TPoly = std::vector<Int>;

static TPoly tpoly_add(const TPoly& a, const TPoly& b) {
    TPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

static TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// m_k(P_n): path on n vertices.
static TPoly path_counts(int n) {
    TPoly a{Int(1)}, b{Int(1)};  // P_0, P_1
    if (n == 0) return a;
    for (int i = 2; i <= n; ++i) {
        // P_i = P_{i-1} + t * P_{i-2}
        TPoly c(std::max(b.size(), a.size() + 1), Int(0));
        for (size_t j = 0; j < b.size(); ++j) c[j] += b[j];
        for (size_t j = 0; j < a.size(); ++j) c[j + 1] += a[j];
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

// m_k(C_n): cycle, n >= 3.  C_n = P_n + t * P_{n-2}.
static TPoly cycle_counts(int n) {
    TPoly p = path_counts(n), q = path_counts(n - 2);
    TPoly r(std::max(p.size(), q.size() + 1), Int(0));
    for (size_t j = 0; j < p.size(); ++j) r[j] += p[j];
    for (size_t j = 0; j < q.size(); ++j) r[j + 1] += q[j];
    return r;
}

// ---------------------------------------------------------------------------
// Edge recursion with isomorphism-keyed memoization.

namespace {

struct MemoEntry {
    Graph g;
    TPoly counts;
};

struct MatchCtx {
    const MatchingOptions& opt;
    std::unordered_map<std::string, std::vector<MemoEntry>> memo;
    std::size_t entries = 0;

    TPoly counts(const Graph& g);
    TPoly counts_connected(const Graph& g);
};

TPoly MatchCtx::counts(const Graph& g) {
    if (g.edges.empty()) return {Int(1)};
    auto comps = connected_components(g);
    if (comps.size() == 1) return counts_connected(g);
    TPoly r{Int(1)};
    for (auto& c : comps) r = tpoly_mul(r, counts_connected(induced_subgraph(g, c)));
    return r;
}

TPoly MatchCtx::counts_connected(const Graph& g) {
    if (g.edges.empty()) return {Int(1)};
    int dmax = g.max_degree();
    if (dmax <= 2) {
        // connected with max degree <= 2: a path or a cycle
        if (g.edge_count() == g.n) return cycle_counts(g.n);
        return path_counts(g.n);
    }
    std::string key = refinement_key(g);
    auto it = memo.find(key);
    if (it != memo.end())
        for (auto& e : it->second)
            if (isomorphic(e.g, g)) return e.counts;

    // edge incident to a maximum-degree vertex, partner of largest degree
    int u = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > g.degree(u)) u = v;
    int v = g.adj[u][0];
    for (int w : g.adj[u])
        if (g.degree(w) > g.degree(v)) v = w;

    TPoly a = counts(remove_edge(g, u, v));
    TPoly b = counts(remove_vertices(g, u, v));
    TPoly r(std::max(a.size(), b.size() + 1), Int(0));
    for (size_t j = 0; j < a.size(); ++j) r[j] += a[j];
    for (size_t j = 0; j < b.size(); ++j) r[j + 1] += b[j];

    if (++entries > opt.memo_limit)
        throw resource_limit_error("matching_counts: memo table limit exceeded");
    memo[key].push_back({g, r});
    return r;
}

}  // namespace

MatchingPolynomial matching_counts(const Graph& g, const MatchingOptions& opt) {
    MatchCtx ctx{opt, {}, 0};
    TPoly c = ctx.counts(g);
    return {g.n, std::move(c)};
}

MatchingPolynomial brute_force_matching_counts(const Graph& g) {
    std::vector<Int> m{Int(1)};
    std::vector<char> used(g.n, 0);
    // backtracking over edges in order; counts each matching once
    auto rec = [&](auto&& self, size_t i, int size) -> void {
        for (size_t j = i; j < g.edges.size(); ++j) {
            auto [u, v] = g.edges[j];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            if (static_cast<int>(m.size()) <= size + 1) m.push_back(Int(0));
            m[size + 1] += 1;
            self(self, j + 1, size + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return {g.n, std::move(m)};
}

// ---------------------------------------------------------------------------
// Transfer matrix for C_m x P_n and C_m x C_n.

namespace {

// matching generating polynomials of the cycle C_m with a vertex subset
// removed, for every subset mask
std::vector<TPoly> cycle_minus_table(int m) {
    std::vector<TPoly> path(m + 1);
    for (int i = 0; i <= m; ++i) path[i] = path_counts(i);
    std::vector<TPoly> N(size_t(1) << m);
    for (uint32_t mask = 0; mask < N.size(); ++mask) {
        if (mask == 0) {
            N[0] = cycle_counts(m);
            continue;
        }
        // decompose free vertices into circular runs
        int anchor = 0;
        while (!((mask >> anchor) & 1)) ++anchor;
        TPoly r{Int(1)};
        int run = 0;
        for (int s = 1; s <= m; ++s) {
            int v = (anchor + s) % m;
            if ((mask >> v) & 1) {
                if (run > 0) r = tpoly_mul(r, path[run]);
                run = 0;
            } else {
                ++run;
            }
        }
        if (run > 0) r = tpoly_mul(r, path[run]);
        N[mask] = std::move(r);
    }
    return N;
}

// newg[S'] = sum over S disjoint from S' of g[S] * t^{|S'|} * N[S|S']
std::vector<TPoly> transfer_step(const std::vector<TPoly>& g, const std::vector<TPoly>& N,
                                 int m) {
    uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1);
    std::vector<TPoly> out(g.size());
    for (uint32_t sp = 0; sp <= full; ++sp) {
        TPoly acc;
        uint32_t comp = full & ~sp;
        uint32_t s = comp;
        while (true) {
            if (!g[s].empty()) acc = tpoly_add(acc, tpoly_mul(g[s], N[s | sp]));
            if (s == 0) break;
            s = (s - 1) & comp;
        }
        int shift = __builtin_popcount(sp);
        if (!acc.empty() && shift > 0) {
            TPoly shifted(acc.size() + shift, Int(0));
            for (size_t j = 0; j < acc.size(); ++j) shifted[j + shift] = acc[j];
            acc = std::move(shifted);
        }
        out[sp] = std::move(acc);
    }
    return out;
}

}  // namespace

MatchingPolynomial strip_matching_counts(int m, int n) {
    if (m < 3 || n < 1) throw input_error("strip: m >= 3, n >= 1");
    if (m > 16) throw resource_limit_error("strip: width limit m <= 16");
    auto N = cycle_minus_table(m);
    std::vector<TPoly> g(size_t(1) << m);
    g[0] = {Int(1)};
    for (int col = 0; col < n; ++col) g = transfer_step(g, N, m);
    return {m * n, std::move(g[0])};
}

MatchingPolynomial torus_matching_counts(int m, int n) {
    if (m < 3 || n < 3) throw input_error("torus: m, n >= 3");
    if (m > 12) throw resource_limit_error("torus: width limit m <= 12");
    auto N = cycle_minus_table(m);
    uint32_t full = (1u << m) - 1;
    TPoly total;
    for (uint32_t seam = 0; seam <= full; ++seam) {
        std::vector<TPoly> g(size_t(1) << m);
        g[seam] = {Int(1)};
        for (int col = 0; col < n - 1; ++col) g = transfer_step(g, N, m);
        // last column: incoming S, forward dimers are exactly the seam set
        TPoly acc;
        uint32_t comp = full & ~seam;
        uint32_t s = comp;
        while (true) {
            if (!g[s].empty()) acc = tpoly_add(acc, tpoly_mul(g[s], N[s | seam]));
            if (s == 0) break;
            s = (s - 1) & comp;
        }
        int shift = __builtin_popcount(seam);
        if (!acc.empty() && shift > 0) {
            TPoly shifted(acc.size() + shift, Int(0));
            for (size_t j = 0; j < acc.size(); ++j) shifted[j + shift] = acc[j];
            acc = std::move(shifted);
        }
        total = tpoly_add(total, acc);
    }
    return {m * n, std::move(total)};
}

// ---------------------------------------------------------------------------
// Root isolation.

std::vector<double> RootMeasure::midpoints_with_multiplicity() const {
    std::vector<double> out;
    for (const auto& r : roots) {
        double x = static_cast<double>(Rat((r.lo + r.hi) / 2).convert_to<double>());
        for (int i = 0; i < r.mult; ++i) out.push_back(x);
    }
    return out;
}

namespace {

// isolating intervals of the distinct real roots of a squarefree polynomial
std::vector<std::pair<Rat, Rat>> isolate_squarefree(const IPoly& f, const Rat& width) {
    std::vector<std::pair<Rat, Rat>> out;
    int deg = ipoly_degree(f);
    if (deg < 1) return out;
    auto chain = sturm_chain(f);
    // Cauchy bound
    Rat bound = 0;
    for (int i = 0; i < deg; ++i) {
        Rat c = Rat(boost::multiprecision::abs(f[i]), boost::multiprecision::abs(f.back()));
        bound = std::max(bound, c);
    }
    bound += 1;
    struct Box {
        Rat lo, hi;
        int count;
    };
    std::vector<Box> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
    while (!stack.empty()) {
        Box b = stack.back();
        stack.pop_back();
        if (b.count == 0) continue;
        if (b.count == 1) {
            // refine to width, keeping exactly one root inside (lo, hi]
            while (b.hi - b.lo > width) {
                Rat mid = (b.lo + b.hi) / 2;
                if (ipoly_eval(f, mid) == 0) {
                    b.lo = b.hi = mid;
                    break;
                }
                if (sturm_count(chain, b.lo, mid) == 1)
                    b.hi = mid;
                else
                    b.lo = mid;
            }
            out.emplace_back(b.lo, b.hi);
            continue;
        }
        Rat mid = (b.lo + b.hi) / 2;
        if (ipoly_eval(f, mid) == 0) {
            out.emplace_back(mid, mid);  // exact rational root; refine later passes
            // count roots strictly on each side via slight insets is handled
            // by the Sturm counts below: (lo, mid] includes mid, subtract it.
            int left = sturm_count(chain, b.lo, mid) - 1;
            int right = sturm_count(chain, mid, b.hi);
            if (left > 0) stack.push_back({b.lo, mid, left});
            if (right > 0) stack.push_back({mid, b.hi, right});
            continue;
        }
        int left = sturm_count(chain, b.lo, mid);
        stack.push_back({b.lo, mid, left});
        stack.push_back({mid, b.hi, b.count - left});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RootMeasure isolate_roots(const MatchingPolynomial& p, const Rat& width) {
    IPoly f = p.signed_poly();
    auto factors = ipoly_squarefree_decomposition(f);
    Rat w = width;
    for (int pass = 0; pass < 128; ++pass) {
        std::vector<IsolatedRoot> roots;
        for (size_t i = 0; i < factors.size(); ++i) {
            for (auto& [lo, hi] : isolate_squarefree(factors[i], w))
                roots.push_back({lo, hi, static_cast<int>(i) + 1});
        }
        std::sort(roots.begin(), roots.end(),
                  [](const IsolatedRoot& a, const IsolatedRoot& b) {
                      return std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
                  });
        // intervals are (lo, hi]; a shared endpoint is fine
        bool disjoint = true;
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            if (roots[i + 1].lo < roots[i].hi) disjoint = false;
        if (disjoint) {
            int total = 0;
            for (auto& r : roots) total += r.mult;
            if (total != p.n)
                throw invariant_error("isolate_roots: root count does not match degree");
            return {std::move(roots), p.n, w};
        }
        w /= 16;  // overlapping intervals from different factors: refine more
    }
    throw invariant_error("isolate_roots: failed to separate roots");
}

// ---------------------------------------------------------------------------

std::vector<Rat> finite_moments(const MatchingPolynomial& p, int K) {
    if (K < 0) throw input_error("finite_moments: K >= 0");
    int n = p.n;
    // elementary symmetric functions of the roots: e_{2k} = (-1)^k m_k
    std::vector<Int> e(K + 1, Int(0));
    for (int k = 0; 2 * k <= K && k <= p.nu(); ++k)
        e[2 * k] = (k % 2 == 0) ? p.m[k] : -p.m[k];
    if (K >= 0) e[0] = 1;
    // Newton's identities: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}
    //                           + (-1)^{k-1} k e_k      (e_i = 0 for i > n)
    std::vector<Int> ps(K + 1, Int(0));
    ps[0] = n;
    for (int k = 1; k <= K; ++k) {
        Int s = 0;
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            Int term = e[i] * ps[k - i];
            s += (i % 2 == 1) ? term : -term;
        }
        if (k <= n) {
            Int term = e[k] * k;
            s += (k % 2 == 1) ? term : -term;
        }
        ps[k] = s;
    }
    std::vector<Rat> mu(K + 1);
    for (int k = 0; k <= K; ++k) mu[k] = Rat(ps[k], n);
    return mu;
}

bool godsil_ratio_check(const Graph& g, int v, int K) {
    if (v < 0 || v >= g.n) throw input_error("godsil_ratio_check: bad vertex");
    MatchingPolynomial P = matching_counts(g);
    MatchingPolynomial Q = matching_counts(remove_vertex(g, v));
    // reversed polynomials in u = 1/x: revP(u) = sum (-1)^k m_k u^{2k}
    std::vector<Int> revP(K + 1, Int(0)), revQ(K + 1, Int(0));
    revP[0] = 1;
    for (int k = 1; k <= P.nu() && 2 * k <= K; ++k) revP[2 * k] = (k % 2 == 0) ? P.m[k] : -P.m[k];
    revQ[0] = 1;
    for (int k = 1; k <= Q.nu() && 2 * k <= K; ++k) revQ[2 * k] = (k % 2 == 0) ? Q.m[k] : -Q.m[k];
    // series s = revQ / revP mod u^{K+1}; constant term of revP is 1
    std::vector<Int> s(K + 1, Int(0));
    for (int k = 0; k <= K; ++k) {
        Int acc = revQ[k];
        for (int i = 1; i <= k; ++i) acc -= revP[i] * s[k - i];
        s[k] = acc;
    }
    WalkCountTable walks = closed_walk_counts(g, v, K);
    for (int k = 0; k <= K; ++k)
        if (s[k] != walks.a[k]) return false;
    return true;
}

}  // namespace mdim
