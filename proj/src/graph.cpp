#include "mdim/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mdim/numbers.hpp"

namespace mdim {

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw input_error("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw input_error("graph: self-loop");
        if (u < 0 || v >= n) throw input_error("graph: vertex label out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("graph: parallel edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

static Graph relabel_subset(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> newid(g.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (newid[u] >= 0 && newid[v] >= 0) es.emplace_back(newid[u], newid[v]);
    return make_graph(static_cast<int>(keep.size()), std::move(es));
}

Graph remove_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    for (int i = 0; i < g.n; ++i)
        if (i != v) keep.push_back(i);
    return relabel_subset(g, keep);
}

Graph remove_vertices(const Graph& g, int u, int v) {
    std::vector<int> keep;
    for (int i = 0; i < g.n; ++i)
        if (i != u && i != v) keep.push_back(i);
    return relabel_subset(g, keep);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> es;
    for (auto e : g.edges)
        if (e != std::make_pair(u, v)) es.push_back(e);
    if (es.size() == g.edges.size()) throw input_error("remove_edge: no such edge");
    return make_graph(g.n, std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges;
    for (auto [u, v] : b.edges) es.emplace_back(u + a.n, v + a.n);
    return make_graph(a.n + b.n, std::move(es));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    return relabel_subset(g, verts);
}

Graph build_box(int d, const std::vector<int>& sides, bool periodic) {
    if (d < 1 || static_cast<int>(sides.size()) != d)
        throw input_error("build_box: need one side length per dimension");
    long total = 1;
    for (int s : sides) {
        if (s < 1) throw input_error("build_box: side < 1");
        if (periodic && s < 3) throw input_error("build_box: periodic side < 3");
        total *= s;
        if (total > 1'000'000) throw resource_limit_error("build_box: too many vertices");
    }
    int n = static_cast<int>(total);
    std::vector<int> stride(d);
    stride[0] = 1;
    for (int i = 1; i < d; ++i) stride[i] = stride[i - 1] * sides[i - 1];
    std::vector<std::pair<int, int>> es;
    std::vector<int> coord(d, 0);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < d; ++i) {
            if (coord[i] + 1 < sides[i])
                es.emplace_back(v, v + stride[i]);
            else if (periodic)
                es.emplace_back(v, v - (sides[i] - 1) * stride[i]);
        }
        for (int i = 0; i < d; ++i) {
            if (++coord[i] < sides[i]) break;
            coord[i] = 0;
        }
    }
    return make_graph(n, std::move(es));
}

// Brick-wall coordinates: vertex (x,y), horizontal edges to (x+-1,y),
// vertical edge to (x, y+1) when x+y is even. A hexagon cell (i,j) has its
// lower-left corner at (2i + (j mod 2), j) and occupies {x..x+2} x {y,y+1}.
Graph build_honeycomb_patch(int rows, int cols, bool periodic) {
    if (rows < 1 || cols < 1) throw input_error("honeycomb: rows, cols >= 1");
    if (periodic && (rows % 2 != 0 || cols < 2))
        throw input_error("honeycomb: periodic needs even rows and cols >= 2");
    if (periodic) {
        int W = 2 * cols, H = rows;
        auto id = [&](int x, int y) { return x * H + y; };
        std::vector<std::pair<int, int>> es;
        for (int x = 0; x < W; ++x)
            for (int y = 0; y < H; ++y) {
                es.emplace_back(id(x, y), id((x + 1) % W, y));
                if ((x + y) % 2 == 0 && H >= 2) es.emplace_back(id(x, y), id(x, (y + 1) % H));
            }
        return make_graph(W * H, std::move(es));
    }
    std::set<std::pair<int, int>> verts;
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            int x0 = 2 * i + (j % 2), y0 = j;
            for (int dx = 0; dx <= 2; ++dx)
                for (int dy = 0; dy <= 1; ++dy) verts.insert({x0 + dx, y0 + dy});
        }
    std::map<std::pair<int, int>, int> id;
    int n = 0;
    for (auto& p : verts) id[p] = n++;
    std::vector<std::pair<int, int>> es;
    for (auto& [p, v] : id) {
        auto [x, y] = p;
        if (id.count({x + 1, y})) es.emplace_back(v, id[{x + 1, y}]);
        if ((x + y) % 2 == 0 && id.count({x, y + 1})) es.emplace_back(v, id[{x, y + 1}]);
    }
    return make_graph(n, std::move(es));
}

Graph build_cycle(int n) {
    if (n < 3) throw input_error("build_cycle: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(es));
}

Graph build_path(int n) {
    if (n < 1) throw input_error("build_path: n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, std::move(es));
}

Graph build_cycle_path(int m, int n) {
    if (m < 3 || n < 1) throw input_error("build_cycle_path: m >= 3, n >= 1");
    auto id = [&](int col, int row) { return col * m + row; };
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r) {
            es.emplace_back(id(c, r), id(c, (r + 1) % m));
            if (c + 1 < n) es.emplace_back(id(c, r), id(c + 1, r));
        }
    return make_graph(m * n, std::move(es));
}

Graph build_cycle_cycle(int m, int n) {
    if (m < 3 || n < 3) throw input_error("build_cycle_cycle: m, n >= 3");
    auto id = [&](int col, int row) { return col * m + row; };
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r) {
            es.emplace_back(id(c, r), id(c, (r + 1) % m));
            es.emplace_back(id(c, r), id((c + 1) % n, r));
        }
    return make_graph(m * n, std::move(es));
}

Graph build_circulant(int n, const std::vector<int>& offsets) {
    std::set<std::pair<int, int>> es;
    for (int off : offsets) {
        int o = ((off % n) + n) % n;
        if (o == 0) throw input_error("circulant: zero offset");
        for (int i = 0; i < n; ++i) {
            int j = (i + o) % n;
            es.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return make_graph(n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

// ---------------------------------------------------------------------------
// Color refinement and isomorphism.

static std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.adj[v].size());
            for (int w : g.adj[v]) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> code;
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; ++v) {
            auto it = code.find(sig[v]);
            if (it == code.end()) it = code.emplace(sig[v], static_cast<int>(code.size())).first;
            next[v] = it->second;
        }
        bool stable = std::set<int>(next.begin(), next.end()).size() ==
                      std::set<int>(color.begin(), color.end()).size();
        color = std::move(next);
        if (stable) break;
    }
    return color;
}

std::string refinement_key(const Graph& g) {
    std::vector<int> color(g.n, 0);
    for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
    color = refine_colors(g, std::move(color));
    // Invariant signature: per-vertex (color, sorted neighbor colors), sorted.
    std::vector<std::string> lines(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::ostringstream os;
        os << color[v] << ':';
        std::vector<int> nb;
        for (int w : g.adj[v]) nb.push_back(color[w]);
        std::sort(nb.begin(), nb.end());
        for (int c : nb) os << c << ',';
        lines[v] = os.str();
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream os;
    os << g.n << '|' << g.edges.size() << '|';
    for (auto& l : lines) os << l << ';';
    return os.str();
}

namespace {

struct IsoSearch {
    const Graph &a, &b;
    std::vector<int> ca, cb;   // stable colors
    std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
    std::vector<char> used_b;

    bool compatible(int va, int vb) const {
        if (ca[va] != cb[vb]) return false;
        for (int w : a.adj[va]) {
            int m = map_ab[w];
            if (m >= 0 && !std::binary_search(b.adj[vb].begin(), b.adj[vb].end(), m))
                return false;
        }
        // mapped neighbors of vb must be neighbors of va
        for (int x : b.adj[vb]) {
            if (!used_b[x]) continue;
            // find preimage
            for (int w = 0; w < a.n; ++w)
                if (map_ab[w] == x && !std::binary_search(a.adj[va].begin(), a.adj[va].end(), w))
                    return false;
        }
        return true;
    }

    bool extend(int va) {
        if (va == a.n) return true;
        for (int vb = 0; vb < b.n; ++vb) {
            if (used_b[vb] || !compatible(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = 1;
            if (extend(va + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = 0;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> ca(a.n), cb(b.n);
    for (int v = 0; v < a.n; ++v) ca[v] = a.degree(v);
    for (int v = 0; v < b.n; ++v) cb[v] = b.degree(v);
    ca = refine_colors(a, std::move(ca));
    cb = refine_colors(b, std::move(cb));
    // Color class sizes must agree. Refinement codes are order-dependent,
    // so compare class-size histograms keyed by the invariant signature.
    auto hist = [](const std::vector<int>& c) {
        std::map<int, int> h;
        for (int x : c) ++h[x];
        std::vector<int> sizes;
        for (auto& [k, v] : h) sizes.push_back(v);
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (hist(ca) != hist(cb)) return false;
    // Refinement codes from refine_colors are not aligned between the two
    // graphs; recolor both with a common scheme (degree only) and refine
    // jointly on the disjoint union so codes are comparable.
    Graph u = disjoint_union(a, b);
    std::vector<int> cu(u.n);
    for (int v = 0; v < u.n; ++v) cu[v] = u.degree(v);
    cu = refine_colors(u, std::move(cu));
    IsoSearch s{a, b, {}, {}, {}, {}};
    s.ca.assign(cu.begin(), cu.begin() + a.n);
    s.cb.assign(cu.begin() + a.n, cu.end());
    if (hist(s.ca) != hist(s.cb)) return false;
    s.map_ab.assign(a.n, -1);
    s.used_b.assign(b.n, 0);
    return s.extend(0);
}

}  // namespace mdim
