#include <doctest.h>

#include "mdim/corpus.hpp"
#include "mdim/matching.hpp"
#include "mdim/reference.hpp"
#include "mdim/saw.hpp"

using namespace mdim;

TEST_CASE("path end walk counts") {
    // T_v(P_3) from an end vertex is P_3 itself; A^2(0,0)=1, A^4(0,0)=2
    WalkCountTable w = closed_walk_counts(build_path(3), 0, 4);
    CHECK(w.a == std::vector<Int>{1, 0, 1, 0, 2});
}

TEST_CASE("z2 walk counts") {
    WalkCountTable w = closed_walk_counts(hypercubic(2), 12);
    CHECK(w.a[2] == 4);
    CHECK(w.a[4] == 28);
    CHECK(w.a[6] == 232);
    CHECK(w.a[8] == 2084);
    CHECK(w.a[10] == 19624);
    CHECK(w.a[12] == 190576);
}

TEST_CASE("bethe walk counts are Catalan-weighted") {
    // d-regular tree: a_2 = d, a_4 = d(2d-1), a_6 = d(5d^2-6d+2)
    for (int d : {3, 4, 5}) {
        WalkCountTable w = closed_walk_counts(bethe(d), 6);
        CHECK(w.a[2] == d);
        CHECK(w.a[4] == d * (2 * d - 1));
        CHECK(w.a[6] == d * (5 * d * d - 6 * d + 2));
    }
}

TEST_CASE("honeycomb moments against the stored reference") {
    MomentSequence mu = lattice_moments(honeycomb(), 16);
    const auto& ref = hex_reference_moment_strings();
    for (int k = 0; k <= 16; ++k) CHECK(mu.mu[k] == Rat(Int(ref[k])));
}

TEST_CASE("average finite moments equal exact moments") {
    for (const auto& name : {"pyramid", "cycle:5", "path:6", "petersen", "box:2,3"}) {
        Graph g = corpus_graph(name);
        MomentSequence avg = average_finite_moments(g, 10);
        auto exact = finite_moments(matching_counts(g), 10);
        CHECK(avg.mu == exact);
    }
}

TEST_CASE("multithreaded enumeration is deterministic") {
    SawOptions serial, parallel;
    parallel.threads = 4;
    WalkCountTable a = closed_walk_counts(hypercubic(2), 16, serial);
    WalkCountTable b = closed_walk_counts(hypercubic(2), 16, parallel);
    CHECK(a.a == b.a);

    MomentSequence ma = lattice_moments(hypercubic(3), 12, serial);
    MomentSequence mb = lattice_moments(hypercubic(3), 12, parallel);
    CHECK(ma.mu == mb.mu);
}

TEST_CASE("node budget is enforced") {
    SawOptions tight;
    tight.node_budget = 100;
    CHECK_THROWS_AS(closed_walk_counts(hypercubic(2), 20, tight), resource_limit_error);
}

TEST_CASE("hankel positivity of moment sequences") {
    CHECK(hankel_positive(lattice_moments(hypercubic(2), 12).mu));
    CHECK(hankel_positive(lattice_moments(honeycomb(), 12).mu));
    CHECK(hankel_positive(finite_moments(matching_counts(petersen()), 10)));
    // not a moment sequence: mu_2 = 1 but mu_4 < mu_2^2
    CHECK_FALSE(hankel_positive(std::vector<Rat>{1, 0, 1, 0, Rat(1, 2)}));
}

TEST_CASE("saw tree construction") {
    RootedGraph t = build_saw_tree(build_cycle(4), 0, 3);
    // walks of length 0..3 from a C_4 vertex: 1 + 2 + 2 + 2
    CHECK(t.graph.n == 7);
    CHECK(t.graph.edges.size() == 6);
}
