#pragma once

#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class LatticeKind { Hypercubic, Honeycomb, Bethe };

/// Infinite vertex-transitive lattice given by a local neighbor rule.
struct LatticeSpec {
    LatticeKind kind;
    int param = 0;  // dimension d for hypercubic, branching d for bethe

    int coordination() const;
    std::string name() const;
};

LatticeSpec hypercubic(int d);
LatticeSpec honeycomb();
LatticeSpec bethe(int d);

/// Parse lattice names of the CLI: z2..z7, hex, bethe:d.
LatticeSpec parse_lattice(const std::string& name);

/// Canonical lattice vertex address.
///  hypercubic(d): d integer coordinates
///  honeycomb:     brick-wall coordinates (x, y); parity of x+y selects
///                 the direction of the vertical edge
///  bethe(d):      backtrack-free word; first letter in 0..d-1, later
///                 letters in 0..d-2
struct Site {
    std::vector<int> data;
    bool operator==(const Site&) const = default;
    auto operator<=>(const Site&) const = default;
};

Site origin(const LatticeSpec& L);
std::vector<Site> neighbors(const LatticeSpec& L, const Site& s);

struct RootedGraph {
    Graph graph;
    int root = 0;
};

/// Induced subgraph on sites within distance r of the origin.
RootedGraph ball(const LatticeSpec& L, int r);

}  // namespace mdim
