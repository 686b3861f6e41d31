#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

Graph pyramid();
Graph petersen();
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int d);
Graph wheel(int rim);
Graph star(int leaves);

/// Deterministic Erdos-Renyi-style graph; each edge kept with probability
/// num/den using a fixed PRNG stream, identical on every platform.
Graph random_graph(int n, int num, int den, std::uint64_t seed);

struct NamedGraph {
    std::string name;
    Graph g;
};

/// Fifty named graphs, each on at most 10 vertices.
const std::vector<NamedGraph>& small_corpus();

/// Every connected circulant graph on 3..12 vertices (one representative
/// per generating set).
const std::vector<NamedGraph>& circulant_corpus();

/// Twenty deterministic random graphs on 5..10 vertices.
const std::vector<NamedGraph>& random_corpus();

/// Lookup by name across all corpora plus the parametric builders
/// ("path:n", "cycle:n", "complete:n", "box:a,b", "torus:a,b",
/// "cycle_path:m,n", "hex:r,c"). Throws input_error when unknown.
Graph corpus_graph(const std::string& name);

}  // namespace mdim
