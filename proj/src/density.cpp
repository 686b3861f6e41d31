#include "mdim/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mdim {

namespace {

double simpson_mass(const std::vector<double>& grid, const std::vector<double>& v) {
    size_t n = grid.size();
    if (n < 3 || n % 2 == 0) {
        double m = 0;  // trapezoid fallback
        for (size_t i = 0; i + 1 < n; ++i)
            m += 0.5 * (v[i] + v[i + 1]) * (grid[i + 1] - grid[i]);
        return m;
    }
    double h = (grid.back() - grid.front()) / (n - 1);
    double m = v.front() + v.back();
    for (size_t i = 1; i + 1 < n; ++i) m += (i % 2 ? 4.0 : 2.0) * v[i];
    return m * h / 3.0;
}

double triweight(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    double w = 1.0 - u * u;
    return 35.0 / 32.0 * w * w * w;
}

// Legendre polynomials as exact rational monomial coefficients.
std::vector<std::vector<Rat>> legendre_table(int N) {
    std::vector<std::vector<Rat>> L(N + 1);
    L[0] = {Rat(1)};
    if (N >= 1) L[1] = {Rat(0), Rat(1)};
    for (int j = 1; j < N; ++j) {
        std::vector<Rat> next(j + 2, Rat(0));
        for (int k = 0; k <= j; ++k) next[k + 1] += Rat(2 * j + 1, j + 1) * L[j][k];
        for (size_t k = 0; k < L[j - 1].size(); ++k) next[k] -= Rat(j, j + 1) * L[j - 1][k];
        L[j + 1] = std::move(next);
    }
    return L;
}

}  // namespace

double default_bandwidth(const RootMeasure& rm) {
    std::vector<double> roots = rm.midpoints_with_multiplicity();
    double n = static_cast<double>(roots.size());
    double mean = 0;
    for (double r : roots) mean += r;
    mean /= n;
    double var = 0;
    for (double r : roots) var += (r - mean) * (r - mean);
    var /= n;
    double h = 1.06 * std::sqrt(var) * std::pow(n, -0.2);
    return h > 0 ? h : 0.1;
}

DensitySamples kernel_smooth(const RootMeasure& rm, double h, int grid_size) {
    if (h <= 0) h = default_bandwidth(rm);
    std::vector<double> roots = rm.midpoints_with_multiplicity();
    if (roots.empty()) throw input_error("kernel_smooth: empty root measure");
    if (grid_size < 3) grid_size = 3;
    if (grid_size % 2 == 0) ++grid_size;

    auto [mn, mx] = std::minmax_element(roots.begin(), roots.end());
    double lo = *mn - h, hi = *mx + h;

    DensitySamples out;
    out.grid.resize(grid_size);
    out.values.resize(grid_size);
    double n = static_cast<double>(roots.size());
    for (int i = 0; i < grid_size; ++i) {
        double x = lo + (hi - lo) * i / (grid_size - 1);
        double v = 0;
        for (double r : roots) v += triweight((x - r) / h);
        out.grid[i] = x;
        out.values[i] = v / (n * h);
    }
    out.mass = simpson_mass(out.grid, out.values);
    return out;
}

double l2_projection_at(const MomentSequence& mu, int N, double x) {
    if (N > mu.order()) throw input_error("l2_projection: degree exceeds moment order");
    static thread_local std::vector<std::vector<Rat>> L;
    if (static_cast<int>(L.size()) <= N) L = legendre_table(N);

    double Rsq = 4.0 * (mu.degree_bound - 1);
    double R = std::sqrt(Rsq);
    Rat Rsq_rat(4 * (mu.degree_bound - 1));

    double s = x / R;
    // Legendre values at s by recurrence
    std::vector<double> P(N + 1);
    P[0] = 1;
    if (N >= 1) P[1] = s;
    for (int j = 1; j < N; ++j)
        P[j + 1] = ((2 * j + 1) * s * P[j] - j * P[j - 1]) / (j + 1);

    // c_j = (2j+1)/(2R) * sum_k l_{j,k} mu_k / R^k; only even j survives,
    // and then only even k appears, so mu_k / R^k is exactly rational.
    double v = 0;
    for (int j = 0; j <= N; j += 2) {
        Rat q = 0;
        Rat rpow = 1;  // R^k for even k
        for (int k = 0; k <= j; k += 2) {
            q += L[j][k] * mu.mu[k] / rpow;
            rpow *= Rsq_rat;
        }
        v += (2 * j + 1) / (2.0 * R) * static_cast<double>(q) * P[j];
    }
    return v;
}

DensitySamples l2_projection(const MomentSequence& mu, int N, int grid_size) {
    if (grid_size < 3) grid_size = 3;
    if (grid_size % 2 == 0) ++grid_size;
    double R = mu.support_radius();
    DensitySamples out;
    out.may_be_negative = true;
    out.grid.resize(grid_size);
    out.values.resize(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        double x = -R + 2 * R * i / (grid_size - 1);
        out.grid[i] = x;
        out.values[i] = l2_projection_at(mu, N, x);
    }
    out.mass = simpson_mass(out.grid, out.values);
    return out;
}

double bethe_density(int d, double t) {
    if (d < 2) throw input_error("bethe_density: d >= 2 required");
    double supp = 4.0 * (d - 1) - t * t;
    if (supp <= 0) return 0.0;
    return d / (2.0 * std::numbers::pi) * std::sqrt(supp) / (d * d - t * t);
}

std::vector<Rat> atom_probe(const std::vector<MatchingPolynomial>& family, const Rat& x) {
    std::vector<Rat> out;
    out.reserve(family.size());
    for (const auto& mp : family) {
        int mult = rational_root_multiplicity(mp.signed_poly(), x);
        out.emplace_back(Rat(mult) / Rat(mp.n));
    }
    return out;
}

}  // namespace mdim
