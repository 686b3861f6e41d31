#pragma once

#include <cstddef>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/numbers.hpp"
#include "mdim/poly.hpp"

namespace mdim {

/// Exact matching counts m_0..m_nu of a graph; m[k] = number of
/// k-matchings, m[0] = 1, nu = matching number.
struct MatchingPolynomial {
    int n = 0;          // |G|
    std::vector<Int> m;  // m_0..m_nu

    int nu() const { return static_cast<int>(m.size()) - 1; }
    /// mu(G,x) = sum_k (-1)^k m_k x^(n-2k) as an integer polynomial in x.
    IPoly signed_poly() const;
    /// M(G,t) = sum_k m_k t^k at rational activity t.
    Rat partition_at(const Rat& t) const;
    /// t*M'(G,t)
    Rat partition_derivative_at(const Rat& t) const;
};

struct MatchingOptions {
    std::size_t memo_limit = 1u << 22;  // distinct cached subgraphs
};

/// Exact matching counts via the edge recursion
/// M(G,t) = M(G-e,t) + t*M(G-u-v,t), memoized on refinement keys with an
/// exact isomorphism confirmation on hash hits.
MatchingPolynomial matching_counts(const Graph& g, const MatchingOptions& opt = {});

/// Independent reference: enumerate matchings directly by scanning edges.
/// Exponential; intended for graphs of at most ~14 vertices.
MatchingPolynomial brute_force_matching_counts(const Graph& g);

/// Matching counts of the strip C_m x P_n by a transfer matrix over
/// interface matchings (2^m states). m <= 16.
MatchingPolynomial strip_matching_counts(int m, int n);

/// Matching counts of the torus C_m x C_n (seam-summed transfer matrix).
/// m <= 12, n >= 3.
MatchingPolynomial torus_matching_counts(int m, int n);

/// One real root: isolating rational interval [lo, hi] (lo == hi for exact
/// rational roots) and its multiplicity.
struct IsolatedRoot {
    Rat lo, hi;
    int mult = 1;
};

/// All n real roots of mu(G,x) with multiplicity, pairwise-disjoint
/// isolating intervals refined to the requested width.
struct RootMeasure {
    std::vector<IsolatedRoot> roots;  // sorted by interval
    int n = 0;                        // total count with multiplicity
    Rat width;                        // refinement bound actually used

    std::vector<double> midpoints_with_multiplicity() const;
};

RootMeasure isolate_roots(const MatchingPolynomial& p, const Rat& width = Rat(1, 1000000));

/// Exact moments mu_0..mu_K of the matching measure of the finite graph,
/// from Newton's identities on the coefficients (no root finding).
std::vector<Rat> finite_moments(const MatchingPolynomial& p, int K);

/// Godsil's identity: the 1/x-series of mu(G-v,x)/mu(G,x) must equal the
/// closed-walk series at the root of the self-avoiding-walk tree T_v(G).
bool godsil_ratio_check(const Graph& g, int v, int K);

}  // namespace mdim
