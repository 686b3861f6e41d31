#pragma once

#include <string>
#include <vector>

#include "mdim/approx.hpp"
#include "mdim/graph.hpp"
#include "mdim/matching.hpp"
#include "mdim/numbers.hpp"
#include "mdim/saw.hpp"

namespace mdim {

/// Evaluation context for the monomer-dimer thermodynamic functions.
/// Finite graphs carry their exact matching polynomial; lattices carry a
/// moment sequence and go through certified polynomial integration.
struct ThermoContext {
    bool finite = true;
    MatchingPolynomial mp;  // finite path
    MomentSequence mu;      // lattice path
    int approx_degree = 0;  // degree used for lattice minimax fits (in z)

    double p_star() const;  // 2*nu/n finite, 1 for lattices
};

ThermoContext make_finite_context(const MatchingPolynomial& mp);
ThermoContext make_finite_context(const Graph& g);
/// degree < 0 means "largest even degree the moments support".
ThermoContext make_lattice_context(const MomentSequence& mu, int degree = -1);

/// Dimer density p(t) = 2t M'/(n M), or the moment integral of
/// t z^2/(1+t z^2). Finite path is exact up to output rounding.
CertifiedValue pressure(const ThermoContext& ctx, double t);

/// ln M(t)/n, or the moment integral of 1/2 ln(1+t z^2).
CertifiedValue log_partition_density(const ThermoContext& ctx, double t);

/// F(t) = ln M(t)/n - (p(t)/2) ln t.
CertifiedValue free_energy_at(const ThermoContext& ctx, double t);

/// The free energy F(., 1).
CertifiedValue free_energy(const ThermoContext& ctx);

/// Monotone bisection for t with pressure(t) = p_target; requires
/// 0 <= p_target < p_star.
double invert_pressure(const ThermoContext& ctx, double p_target, double tol = 1e-10);

/// Entropy function lambda(p) = F(t(p)). For finite graphs: 0 when
/// p > p_star, ln m_nu / n at p_star. For lattices at p = 1 the value is
/// a one-sided limit estimate; its eps is a convergence heuristic, not a
/// certified bound, and the provenance says so.
CertifiedValue lambda_of_p(const ThermoContext& ctx, double p);

/// Mayer series <-> moments: mu_{2n} = (-1)^{n+1} a_n, odd moments zero.
/// Rejects inputs whose implied even moments are not positive.
MomentSequence mayer_to_moments(const std::vector<Rat>& a, int degree_bound,
                                const std::string& source);
std::vector<Rat> moments_to_mayer(const MomentSequence& mu);

/// |lambda(2k/n) - ln m_k / n| <= ln n / n, decided with certified
/// enclosures (exactly true at k = nu).
bool darroch_bounds_check(const Graph& g, int k);
bool darroch_bounds_check(const MatchingPolynomial& mp, int k);

}  // namespace mdim
