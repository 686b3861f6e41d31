#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/lattice.hpp"
#include "mdim/numbers.hpp"

namespace mdim {

struct SawOptions {
    std::uint64_t node_budget = 1'000'000'000;
    int threads = 1;
};

/// Closed-walk counts a_0..a_K at the root of a tree of self-avoiding
/// walks. a_k = 0 for odd k.
struct WalkCountTable {
    std::vector<Int> a;
    std::string root;
    int K = 0;
    std::uint64_t nodes_visited = 0;
};

/// Root walk counts of T_v(G) by depth-first traversal to depth floor(K/2),
/// combining children through the truncated series W = 1/(1 - x^2 sum W_c).
WalkCountTable closed_walk_counts(const Graph& g, int v, int K, const SawOptions& opt = {});

/// Same at any site of a vertex-transitive lattice. Bethe lattices are
/// handled by the closed subtree recursion instead of traversal.
WalkCountTable closed_walk_counts(const LatticeSpec& L, int K, const SawOptions& opt = {});

/// Moment sequence of a matching measure. Exact integers for lattices,
/// rationals for finite graphs.
struct MomentSequence {
    std::vector<Rat> mu;  // mu_0..mu_K
    int degree_bound = 0;
    std::string source;

    int order() const { return static_cast<int>(mu.size()) - 1; }
    double support_radius() const;  // 2 sqrt(D-1)
};

MomentSequence lattice_moments(const LatticeSpec& L, int K, const SawOptions& opt = {});

/// mu_k = (1/|G|) sum_v a_k(T_v(G), v).
MomentSequence average_finite_moments(const Graph& g, int K, const SawOptions& opt = {});

/// Explicit tree of self-avoiding walks of length <= depth. Oracle use.
RootedGraph build_saw_tree(const Graph& g, int v, int depth,
                           std::uint64_t node_budget = 10'000'000);

/// Exact positive-semidefiniteness of the Hankel matrices [mu_{i+j}].
bool hankel_positive(const std::vector<Rat>& mu);

}  // namespace mdim
