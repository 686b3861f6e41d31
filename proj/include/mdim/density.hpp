#pragma once

#include <vector>

#include "mdim/matching.hpp"
#include "mdim/numbers.hpp"
#include "mdim/saw.hpp"

namespace mdim {

/// Sampled density estimate on an increasing grid. Kernel mode keeps
/// values nonnegative; projection mode may dip below zero, flagged by
/// may_be_negative.
struct DensitySamples {
    std::vector<double> grid;
    std::vector<double> values;
    double mass = 0.0;  // Simpson integral over the grid
    bool may_be_negative = false;
};

/// Silverman-style default bandwidth 1.06 * sigma * n^(-1/5).
double default_bandwidth(const RootMeasure& rm);

/// Triweight kernel smoothing of a finite root measure:
/// density(x) = (1/n) sum_roots (1/h) K((x - lambda)/h),
/// K(u) = (35/32)(1 - u^2)^3 on |u| <= 1. h <= 0 selects the default
/// bandwidth. grid_size is rounded up to an odd count for Simpson.
DensitySamples kernel_smooth(const RootMeasure& rm, double h = 0.0, int grid_size = 2001);

/// L2 projection of the measure onto polynomials of degree <= N on
/// [-R, R], R = 2 sqrt(degree_bound - 1), via orthonormal Legendre
/// polynomials; the coefficients are exact rational functions of the
/// moments. Returns samples on a uniform grid over [-R, R].
DensitySamples l2_projection(const MomentSequence& mu, int N, int grid_size = 2001);

/// Pointwise value of the same projection.
double l2_projection_at(const MomentSequence& mu, int N, double x);

/// Kesten-McKay density (d / 2 pi) sqrt(4(d-1) - t^2) / (d^2 - t^2) on
/// |t| <= 2 sqrt(d-1), zero outside.
double bethe_density(int d, double t);

/// Exact atom masses mult(G, x)/|G| of the matching measures of a graph
/// family at a rational point x.
std::vector<Rat> atom_probe(const std::vector<MatchingPolynomial>& family, const Rat& x);

}  // namespace mdim
