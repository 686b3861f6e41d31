#pragma once

#include <string>
#include <vector>

#include "mdim/interval.hpp"
#include "mdim/numbers.hpp"
#include "mdim/saw.hpp"

namespace mdim {

/// Integrand families of the monomer-dimer functionals:
///   HalfLog(t):           z |-> 1/2 ln(1 + t z^2)
///   RationalPressure(t):  z |-> t z^2 / (1 + t z^2)
enum class ApproxTarget { HalfLog, RationalPressure };

std::string target_name(ApproxTarget t);
ApproxTarget parse_target(const std::string& s);

/// Even polynomial approximation of a target on [-R, R] with a certified
/// sup-norm error bound. Coefficients are monomial in z (odd ones zero),
/// stored as decimal strings so certified evaluation can re-read them
/// exactly. The domain is carried as usq = R^2, which is an exact integer
/// for the lattice radii R = 2 sqrt(D-1).
struct PolyApprox {
    ApproxTarget target = ApproxTarget::HalfLog;
    double t = 1.0;
    double usq = 0.0;       // R^2
    int degree = 0;         // in z
    std::vector<std::string> coeff;  // c_0..c_degree
    double eps = 0.0;             // certified sup bound, never an undershoot
    double remez_residual = 0.0;  // equioscillation amplitude reported by the fit
    bool exchange_converged = true;

    double radius() const;
};

/// Near-minimax fit of degree <= N (in z) via Chebyshev interpolation in
/// the even variable u = z^2 followed by Remez exchange. On exchange
/// failure falls back to the Chebyshev interpolant; either way eps is
/// filled by certify_error and is sound independently of convergence.
PolyApprox minimax_fit(ApproxTarget target, double t, double usq, int N);

/// Rigorous sup bound of |target - polynomial| on the domain, by adaptive
/// branch-and-bound with interval arithmetic: per box, |r(mid)| plus a
/// derivative bound times the box radius.
double certify_error(const PolyApprox& pa);

struct CertifiedValue {
    double value = 0.0;
    double eps = 0.0;
    std::string provenance;
};

/// sum_k c_k mu_k with certified rounding; eps adds the approximation
/// bound of pa to the summation enclosure width. Requires deg <= moment
/// order and pa covering the support radius of mu.
CertifiedValue integrate_against_moments(const PolyApprox& pa, const MomentSequence& mu);

}  // namespace mdim
