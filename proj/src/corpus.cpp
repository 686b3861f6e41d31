#include "mdim/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "mdim/numbers.hpp"

namespace mdim {

Graph pyramid() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});          // outer pentagon
        e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        e.push_back({i, 5 + i});                // spokes
    }
    return make_graph(10, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return make_graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return make_graph(a + b, std::move(e));
}

Graph hypercube(int d) {
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
    return make_graph(n, std::move(e));
}

Graph wheel(int rim) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.push_back({i, (i + 1) % rim});
        e.push_back({i, rim});
    }
    return make_graph(rim + 1, std::move(e));
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return make_graph(leaves + 1, std::move(e));
}

namespace {

// splitmix64, fixed-stream so corpora are platform independent
std::uint64_t mix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

Graph random_graph(int n, int num, int den, std::uint64_t seed) {
    std::uint64_t s = seed;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mix(s) % static_cast<std::uint64_t>(den) < static_cast<std::uint64_t>(num))
                e.push_back({i, j});
    return make_graph(n, std::move(e));
}

const std::vector<NamedGraph>& small_corpus() {
    static const std::vector<NamedGraph> corpus = [] {
        std::vector<NamedGraph> c;
        auto add = [&](std::string name, Graph g) { c.push_back({std::move(name), std::move(g)}); };
        for (int n = 1; n <= 10; ++n) add("path:" + std::to_string(n), build_path(n));
        for (int n = 3; n <= 10; ++n) add("cycle:" + std::to_string(n), build_cycle(n));
        for (int n = 2; n <= 7; ++n) add("complete:" + std::to_string(n), complete_graph(n));
        add("bipartite:1,3", complete_bipartite(1, 3));
        add("bipartite:2,2", complete_bipartite(2, 2));
        add("bipartite:2,3", complete_bipartite(2, 3));
        add("bipartite:2,4", complete_bipartite(2, 4));
        add("bipartite:3,3", complete_bipartite(3, 3));
        add("box:2,2", build_box(2, {2, 2}, false));
        add("box:2,3", build_box(2, {2, 3}, false));
        add("box:2,4", build_box(2, {2, 4}, false));
        add("box:2,5", build_box(2, {2, 5}, false));
        add("box:3,3", build_box(2, {3, 3}, false));
        add("hypercube:3", hypercube(3));
        add("pyramid", pyramid());
        add("petersen", petersen());
        for (int n = 5; n <= 10; ++n)
            add("circulant:" + std::to_string(n) + ";1,2", build_circulant(n, {1, 2}));
        for (int r = 4; r <= 7; ++r) add("wheel:" + std::to_string(r), wheel(r));
        add("star:9", star(9));
        add("hex:1,1", build_honeycomb_patch(1, 1, false));
        add("paw", make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
        return c;
    }();
    return corpus;
}

const std::vector<NamedGraph>& circulant_corpus() {
    static const std::vector<NamedGraph> corpus = [] {
        std::vector<NamedGraph> c;
        for (int n = 3; n <= 12; ++n) {
            int half = n / 2;
            for (int mask = 1; mask < (1 << half); ++mask) {
                std::vector<int> offsets;
                for (int b = 0; b < half; ++b)
                    if (mask & (1 << b)) offsets.push_back(b + 1);
                Graph g = build_circulant(n, offsets);
                if (connected_components(g).size() != 1) continue;
                std::ostringstream name;
                name << "circulant:" << n << ";";
                for (size_t i = 0; i < offsets.size(); ++i)
                    name << (i ? "," : "") << offsets[i];
                c.push_back({name.str(), std::move(g)});
            }
        }
        return c;
    }();
    return corpus;
}

const std::vector<NamedGraph>& random_corpus() {
    static const std::vector<NamedGraph> corpus = [] {
        std::vector<NamedGraph> c;
        for (int i = 0; i < 20; ++i) {
            int n = 5 + i % 6;
            Graph g = random_graph(n, 1, 2, 0xabcdef00u + i);
            c.push_back({"random:" + std::to_string(i), std::move(g)});
        }
        return c;
    }();
    return corpus;
}

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) {
        if (tok.empty()) throw input_error("malformed graph name parameter: " + s);
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

Graph corpus_graph(const std::string& name) {
    for (const auto& ng : small_corpus())
        if (ng.name == name) return ng.g;
    for (const auto& ng : circulant_corpus())
        if (ng.name == name) return ng.g;
    for (const auto& ng : random_corpus())
        if (ng.name == name) return ng.g;

    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : name.substr(colon + 1);
    try {
        if (kind == "path") return build_path(std::stoi(rest));
        if (kind == "cycle") return build_cycle(std::stoi(rest));
        if (kind == "complete") return complete_graph(std::stoi(rest));
        if (kind == "star") return star(std::stoi(rest));
        if (kind == "wheel") return wheel(std::stoi(rest));
        if (kind == "hypercube") return hypercube(std::stoi(rest));
        if (kind == "box" || kind == "torus") {
            auto sides = parse_ints(rest, ',');
            return build_box(static_cast<int>(sides.size()), sides, kind == "torus");
        }
        if (kind == "cycle_path") {
            auto p = parse_ints(rest, ',');
            if (p.size() == 2) return build_cycle_path(p[0], p[1]);
        }
        if (kind == "cycle_cycle") {
            auto p = parse_ints(rest, ',');
            if (p.size() == 2) return build_cycle_cycle(p[0], p[1]);
        }
        if (kind == "hex") {
            auto p = parse_ints(rest, ',');
            if (p.size() == 2) return build_honeycomb_patch(p[0], p[1], false);
        }
        if (kind == "bipartite") {
            auto p = parse_ints(rest, ',');
            if (p.size() == 2) return complete_bipartite(p[0], p[1]);
        }
    } catch (const std::invalid_argument&) {
        throw input_error("malformed graph name: " + name);
    }
    throw input_error("unknown graph name: " + name);
}

}  // namespace mdim
