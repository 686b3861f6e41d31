#include <doctest.h>

#include <cmath>

#include "mdim/corpus.hpp"
#include "mdim/thermo.hpp"

using namespace mdim;

TEST_CASE("K_2 closed forms") {
    ThermoContext k2 = make_finite_context(complete_graph(2));
    CHECK(pressure(k2, 1.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(log_partition_density(k2, 1.0).value ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(log_partition_density(k2, 1.0).eps < 1e-12);
    CHECK(free_energy(k2).value == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(std::abs(invert_pressure(k2, 0.5) - 1.0) < 1e-8);
    CHECK(std::abs(invert_pressure(k2, 2.0 / 3.0) - 2.0) < 1e-8);
    CHECK_THROWS_AS(invert_pressure(k2, 1.0), input_error);
}

TEST_CASE("empty graph and C_4") {
    ThermoContext empty = make_finite_context(make_graph(3, {}));
    CHECK(log_partition_density(empty, 5.0).value == 0.0);

    ThermoContext c4 = make_finite_context(build_cycle(4));
    CHECK(log_partition_density(c4, 1.0).value ==
          doctest::Approx(std::log(7.0) / 4).epsilon(1e-12));
    // lambda at p* = 1: ln m_2 / 4 = ln(2)/4
    CertifiedValue lam = lambda_of_p(c4, 1.0);
    CHECK(lam.value == doctest::Approx(std::log(2.0) / 4).epsilon(1e-12));
    CHECK(lambda_of_p(c4, 1.5).value == 0.0);
}

TEST_CASE("pressure is monotone and inversion is its inverse") {
    ThermoContext ctx = make_finite_context(pyramid());
    double prev = -1;
    for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        double p = pressure(ctx, t).value;
        CHECK(p > prev);
        prev = p;
        if (t > 0) CHECK(std::abs(invert_pressure(ctx, p) - t) < 1e-6 * (1 + t));
    }
}

TEST_CASE("derivative identity dlambda/dp = -ln(t)/2") {
    for (const auto& name : {"complete:2", "cycle:4", "cycle:6", "pyramid"}) {
        ThermoContext ctx = make_finite_context(corpus_graph(name));
        double p = 0.5 * ctx.p_star();
        double h = 1e-4;
        double d = (lambda_of_p(ctx, p + h).value - lambda_of_p(ctx, p - h).value) / (2 * h);
        double t = invert_pressure(ctx, p);
        CHECK(std::abs(d + 0.5 * std::log(t)) < 1e-4);
    }
}

TEST_CASE("concavity of lambda on a grid") {
    ThermoContext ctx = make_finite_context(build_cycle(6));
    std::vector<double> vals;
    for (int i = 1; i <= 9; ++i) vals.push_back(lambda_of_p(ctx, i / 10.0).value);
    for (size_t i = 1; i + 1 < vals.size(); ++i)
        CHECK(vals[i] >= 0.5 * (vals[i - 1] + vals[i + 1]) - 1e-9);
}

TEST_CASE("disjoint union invariance") {
    Graph g = pyramid();
    Graph g2 = disjoint_union(g, g);
    Graph g3 = disjoint_union(g2, g);
    MatchingPolynomial m1 = matching_counts(g);
    MatchingPolynomial m2 = matching_counts(g2);
    MatchingPolynomial m3 = matching_counts(g3);
    // M(nG, t) = M(G, t)^n exactly, hence all thermodynamics per site agree
    for (const Rat& t : {Rat(1), Rat(1, 3), Rat(7, 2)}) {
        Rat M = m1.partition_at(t);
        CHECK(m2.partition_at(t) == M * M);
        CHECK(m3.partition_at(t) == M * M * M);
    }
    CHECK(m2.m.back() == m1.m.back() * m1.m.back());
    ThermoContext c1 = make_finite_context(m1), c3 = make_finite_context(m3);
    CHECK(lambda_of_p(c1, 0.6).value == doctest::Approx(lambda_of_p(c3, 0.6).value).epsilon(1e-9));
}

TEST_CASE("darroch bounds") {
    CHECK(darroch_bounds_check(complete_graph(2), 1));
    CHECK(darroch_bounds_check(pyramid(), 1));
    CHECK(darroch_bounds_check(pyramid(), 2));
    for (int k = 1; k <= 5; ++k) CHECK(darroch_bounds_check(petersen(), k));
    CHECK_THROWS_AS(darroch_bounds_check(pyramid(), 3), input_error);
}

TEST_CASE("mayer conversions") {
    std::vector<Rat> a = {Rat(4), Rat(-28), Rat(232)};
    MomentSequence mu = mayer_to_moments(a, 4, "z2 test");
    CHECK(mu.mu[2] == 4);
    CHECK(mu.mu[4] == 28);
    CHECK(mu.mu[6] == 232);
    CHECK(mu.mu[3] == 0);
    CHECK(moments_to_mayer(mu) == a);

    std::vector<Rat> bad = {Rat(4), Rat(28)};  // a_2 must be negative
    CHECK_THROWS_AS(mayer_to_moments(bad, 4, "bad"), input_error);
}

TEST_CASE("lattice pressure from moments") {
    // K_2 measure disguised as a lattice: atoms at +-1, D = 2
    MomentSequence mu;
    mu.degree_bound = 2;
    mu.source = "k2";
    for (int k = 0; k <= 12; ++k) mu.mu.push_back(k % 2 == 0 ? 1 : 0);
    ThermoContext ctx = make_lattice_context(mu);
    CertifiedValue p = pressure(ctx, 1.0);
    CHECK(std::abs(p.value - 0.5) <= p.eps);
    CertifiedValue F = free_energy(ctx);
    CHECK(std::abs(F.value - 0.5 * std::log(2.0)) <= F.eps);
}
