#pragma once

#include <vector>

#include "mdim/numbers.hpp"

namespace mdim {

/// Dense univariate polynomials, coefficient of x^i at index i.
/// Normalized form has a nonzero leading coefficient (or is empty = zero).
using IPoly = std::vector<Int>;

IPoly ipoly_trim(IPoly p);
IPoly ipoly_add(const IPoly& a, const IPoly& b);
IPoly ipoly_sub(const IPoly& a, const IPoly& b);
IPoly ipoly_mul(const IPoly& a, const IPoly& b);
IPoly ipoly_scale(const IPoly& a, const Int& c);
IPoly ipoly_derivative(const IPoly& a);
int ipoly_degree(const IPoly& a);  // -1 for zero

Int ipoly_content(const IPoly& a);
IPoly ipoly_primitive(const IPoly& a);

/// Exact gcd of integer polynomials (primitive, positive leading coeff),
/// via a primitive pseudo-remainder sequence.
IPoly ipoly_gcd(IPoly a, IPoly b);

/// Yun squarefree decomposition: returns f_1, f_2, ... with
/// a = content * prod f_i^i, each f_i squarefree and primitive.
std::vector<IPoly> ipoly_squarefree_decomposition(const IPoly& a);

Rat ipoly_eval(const IPoly& a, const Rat& x);
int ipoly_sign_at(const IPoly& a, const Rat& x);

/// Sturm chain of a squarefree polynomial; entries are primitive.
std::vector<IPoly> sturm_chain(const IPoly& a);
/// Number of real roots of the chain's polynomial in (lo, hi].
int sturm_count(const std::vector<IPoly>& chain, const Rat& lo, const Rat& hi);

/// Exact multiplicity of the rational root x0 (0 if not a root).
int rational_root_multiplicity(const IPoly& a, const Rat& x0);

}  // namespace mdim
