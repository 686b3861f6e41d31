#include <doctest.h>

#include <cmath>

#include "mdim/corpus.hpp"
#include "mdim/density.hpp"
#include "mdim/saw.hpp"

using namespace mdim;

TEST_CASE("kernel peak and mass") {
    RootMeasure single;
    single.n = 1;
    single.roots.push_back({Rat(0), Rat(0), 1});
    DensitySamples ds = kernel_smooth(single, 1.0, 4001);
    double peak = 0;
    for (double v : ds.values) peak = std::max(peak, v);
    CHECK(peak == doctest::Approx(35.0 / 32.0).epsilon(1e-6));
    CHECK(std::abs(ds.mass - 1.0) < 1e-6);
}

TEST_CASE("two-atom smoothing is symmetric") {
    RootMeasure k2;
    k2.n = 2;
    k2.roots.push_back({Rat(-1), Rat(-1), 1});
    k2.roots.push_back({Rat(1), Rat(1), 1});
    DensitySamples ds = kernel_smooth(k2, 0.5, 2001);
    CHECK(std::abs(ds.mass - 1.0) < 1e-6);
    size_t n = ds.values.size();
    for (size_t i = 0; i < n / 2; ++i)
        CHECK(ds.values[i] == doctest::Approx(ds.values[n - 1 - i]).epsilon(1e-9));
}

TEST_CASE("strip smoothing matches the expected shape") {
    RootMeasure rm = isolate_roots(strip_matching_counts(10, 8));
    DensitySamples ds = kernel_smooth(rm, 0.15, 4001);
    CHECK(std::abs(ds.mass - 1.0) < 1e-6);
    double peak = 0;
    for (double v : ds.values) peak = std::max(peak, v);
    CHECK(peak < 0.3);
    CHECK(peak > 0.1);
    double bound = 2.0 * std::sqrt(3.0);  // supp within [-2 sqrt(D-1), ...]
    CHECK(ds.grid.front() > -bound - 0.2);
    CHECK(ds.grid.back() < bound + 0.2);
}

TEST_CASE("bethe density closed form") {
    CHECK(bethe_density(4, 0.0) == doctest::Approx(std::sqrt(3.0) / (4 * M_PI)).epsilon(1e-12));
    CHECK(bethe_density(4, 2 * std::sqrt(3.0)) < 1e-6);  // fp endpoint may land just inside
    CHECK(bethe_density(4, 5.0) == 0.0);
    // unit mass by quadrature
    int n = 200000;
    double R = 2 * std::sqrt(3.0), sum = 0;
    for (int i = 0; i < n; ++i) sum += bethe_density(4, -R + 2 * R * (i + 0.5) / n);
    CHECK(std::abs(sum * 2 * R / n - 1.0) < 1e-5);
}

TEST_CASE("l2 projection basics") {
    MomentSequence mu;
    mu.degree_bound = 2;  // R = 2
    mu.source = "test";
    mu.mu = {Rat(1), Rat(0), Rat(1)};
    // N = 0: constant 1/(2R)
    CHECK(l2_projection_at(mu, 0, 0.7) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("projection of bethe moments approaches Kesten-McKay") {
    MomentSequence mu = lattice_moments(bethe(4), 24);
    double prev_err = 1e9;
    for (int N : {8, 16, 24}) {
        double err = 0;
        for (int i = 0; i <= 600; ++i) {
            double x = -3.0 + 6.0 * i / 600;
            err = std::max(err, std::abs(l2_projection_at(mu, N, x) - bethe_density(4, x)));
        }
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 0.02);
}

TEST_CASE("atom probe") {
    std::vector<MatchingPolynomial> fam;
    for (int n : {4, 6, 8}) fam.push_back(torus_matching_counts(n, n));
    auto at0 = atom_probe(fam, Rat(0));
    for (const Rat& f : at0) CHECK(f == 0);  // tori have perfect matchings
    auto at1 = atom_probe(fam, Rat(1));
    for (const Rat& f : at1) CHECK(f == 0);

    // star K_{1,4}: atom of mass 3/5 at zero
    auto star_probe = atom_probe({matching_counts(star(4))}, Rat(0));
    CHECK(star_probe[0] == Rat(3, 5));
}
