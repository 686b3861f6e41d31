#include "mdim/lattice.hpp"

#include <map>
#include <queue>

#include "mdim/numbers.hpp"

namespace mdim {

int LatticeSpec::coordination() const {
    switch (kind) {
        case LatticeKind::Hypercubic: return 2 * param;
        case LatticeKind::Honeycomb: return 3;
        case LatticeKind::Bethe: return param;
    }
    return 0;
}

std::string LatticeSpec::name() const {
    switch (kind) {
        case LatticeKind::Hypercubic: return "z" + std::to_string(param);
        case LatticeKind::Honeycomb: return "hex";
        case LatticeKind::Bethe: return "bethe:" + std::to_string(param);
    }
    return "?";
}

LatticeSpec hypercubic(int d) {
    if (d < 1) throw input_error("hypercubic: d >= 1");
    return {LatticeKind::Hypercubic, d};
}
LatticeSpec honeycomb() { return {LatticeKind::Honeycomb, 0}; }
LatticeSpec bethe(int d) {
    if (d < 2) throw input_error("bethe: d >= 2");
    return {LatticeKind::Bethe, d};
}

LatticeSpec parse_lattice(const std::string& name) {
    if (name == "hex") return honeycomb();
    if (name.size() >= 2 && name[0] == 'z') return hypercubic(std::stoi(name.substr(1)));
    if (name.rfind("bethe:", 0) == 0) return bethe(std::stoi(name.substr(6)));
    throw input_error("unknown lattice: " + name);
}

Site origin(const LatticeSpec& L) {
    switch (L.kind) {
        case LatticeKind::Hypercubic: return {std::vector<int>(L.param, 0)};
        case LatticeKind::Honeycomb: return {{0, 0}};
        case LatticeKind::Bethe: return {{}};
    }
    return {};
}

std::vector<Site> neighbors(const LatticeSpec& L, const Site& s) {
    std::vector<Site> out;
    switch (L.kind) {
        case LatticeKind::Hypercubic: {
            if (static_cast<int>(s.data.size()) != L.param)
                throw input_error("site: wrong dimension");
            for (int i = 0; i < L.param; ++i)
                for (int step : {+1, -1}) {
                    Site t = s;
                    t.data[i] += step;
                    out.push_back(std::move(t));
                }
            break;
        }
        case LatticeKind::Honeycomb: {
            if (s.data.size() != 2) throw input_error("site: honeycomb needs (x,y)");
            int x = s.data[0], y = s.data[1];
            out.push_back({{x + 1, y}});
            out.push_back({{x - 1, y}});
            bool even = ((x + y) % 2 + 2) % 2 == 0;
            out.push_back({{x, even ? y + 1 : y - 1}});
            break;
        }
        case LatticeKind::Bethe: {
            int d = L.param;
            if (s.data.empty()) {
                for (int c = 0; c < d; ++c) out.push_back({{c}});
            } else {
                Site parent = s;
                parent.data.pop_back();
                out.push_back(std::move(parent));
                for (int c = 0; c < d - 1; ++c) {
                    Site t = s;
                    t.data.push_back(c);
                    out.push_back(std::move(t));
                }
            }
            break;
        }
    }
    return out;
}

RootedGraph ball(const LatticeSpec& L, int r) {
    if (r < 0) throw input_error("ball: r >= 0");
    std::map<Site, int> id;
    std::vector<Site> sites;
    auto intern = [&](const Site& s) {
        auto it = id.find(s);
        if (it != id.end()) return it->second;
        int k = static_cast<int>(sites.size());
        if (k > 5'000'000) throw resource_limit_error("ball: too many sites");
        id.emplace(s, k);
        sites.push_back(s);
        return k;
    };
    Site o = origin(L);
    intern(o);
    std::vector<int> dist{0};
    std::queue<int> q;
    q.push(0);
    std::vector<std::pair<int, int>> es;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Site& t : neighbors(L, sites[v])) {
            if (dist[v] == r) {
                // boundary vertex: record edges to already known sites only
                auto it = id.find(t);
                if (it != id.end() && v < it->second) es.emplace_back(v, it->second);
                continue;
            }
            bool known = id.count(t) > 0;
            int w = intern(t);
            if (!known) {
                dist.push_back(dist[v] + 1);
                q.push(w);
            }
            if (v < w) es.emplace_back(v, w);
        }
    }
    return {make_graph(static_cast<int>(sites.size()), std::move(es)), 0};
}

}  // namespace mdim
