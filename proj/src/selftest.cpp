#include "mdim/selftest.hpp"

#include <cmath>
#include <sstream>

#include "mdim/corpus.hpp"
#include "mdim/density.hpp"
#include "mdim/matching.hpp"
#include "mdim/reference.hpp"
#include "mdim/saw.hpp"
#include "mdim/thermo.hpp"

namespace mdim {

namespace {

void check(std::vector<SelftestResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

bool handshake(const Graph& g) {
    size_t total = 0;
    for (const auto& nb : g.adj) total += nb.size();
    return total == 2 * g.edges.size();
}

bool root_bound_holds(const Graph& g) {
    MatchingPolynomial mp = matching_counts(g);
    RootMeasure rm = isolate_roots(mp);
    if (rm.n != g.n) return false;
    int maxdeg = 0;
    for (const auto& nb : g.adj) maxdeg = std::max(maxdeg, static_cast<int>(nb.size()));
    Rat bound_sq(4 * std::max(maxdeg - 1, 1));
    for (const auto& r : rm.roots) {
        Rat edge = std::max(abs(r.lo), abs(r.hi));
        if (edge * edge > bound_sq && edge > 1) return false;
    }
    return true;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
    std::vector<SelftestResult> out;

    // graph-core: handshakes and ball consistency
    {
        bool ok = true;
        std::string bad;
        for (const auto& [name, g] : small_corpus())
            if (!handshake(g)) { ok = false; bad = name; break; }
        check(out, "graph-core/handshake", ok, bad);

        RootedGraph b = ball(bethe(3), 2);
        check(out, "graph-core/bethe-ball", b.graph.n == 10 && b.graph.edges.size() == 9);

        RootedGraph hx = ball(honeycomb(), 1);
        check(out, "graph-core/honeycomb-ball", hx.graph.n == 4 && hx.graph.edges.size() == 3);
    }

    // matching-engine: recursion vs brute force, root bounds
    {
        bool ok = true;
        std::string bad;
        for (const auto& [name, g] : small_corpus()) {
            if (g.n > 9) continue;
            MatchingPolynomial a = matching_counts(g);
            MatchingPolynomial b = brute_force_matching_counts(g);
            if (a.m != b.m) { ok = false; bad = name; break; }
        }
        check(out, "matching/recursion-vs-bruteforce", ok, bad);

        ok = true;
        for (const auto& name : {"pyramid", "cycle:7", "petersen", "box:3,3"})
            if (!root_bound_holds(corpus_graph(name))) { ok = false; bad = name; break; }
        check(out, "matching/root-bound", ok, bad);

        MatchingPolynomial strip = strip_matching_counts(4, 5);
        MatchingPolynomial direct = matching_counts(build_cycle_path(4, 5));
        check(out, "matching/transfer-strip", strip.m == direct.m);

        MatchingPolynomial torus = torus_matching_counts(4, 4);
        MatchingPolynomial direct2 = matching_counts(build_box(2, {4, 4}, true));
        check(out, "matching/transfer-torus", torus.m == direct2.m);
    }

    // saw-walker: Godsil identity, lattice moment cross-checks
    {
        bool ok = godsil_ratio_check(pyramid(), 0, 10) &&
                  godsil_ratio_check(build_cycle(5), 0, 10) &&
                  godsil_ratio_check(petersen(), 0, 10);
        check(out, "saw/godsil-identity", ok);

        MomentSequence hexm = lattice_moments(honeycomb(), 12);
        const auto& ref = hex_reference_moment_strings();
        ok = true;
        for (int k = 0; k <= 12; ++k)
            if (hexm.mu[k] != Rat(Int(ref[k]))) { ok = false; break; }
        check(out, "saw/honeycomb-moments-K12", ok);

        MomentSequence z2 = lattice_moments(hypercubic(2), 8);
        ok = z2.mu[2] == 4 && z2.mu[4] == 28 && hankel_positive(z2.mu);
        check(out, "saw/z2-moments-hankel", ok);

        MomentSequence b4 = lattice_moments(bethe(4), 8);
        ok = b4.mu[4] == 28 && b4.mu[6] == 232;
        check(out, "saw/bethe4-moments", ok);
    }

    // measure-calculus: identities on small graphs
    {
        ThermoContext k2 = make_finite_context(corpus_graph("complete:2"));
        CertifiedValue p = pressure(k2, 1.0);
        check(out, "thermo/k2-pressure", std::abs(p.value - 0.5) < 1e-12);

        CertifiedValue F = free_energy(k2);
        check(out, "thermo/k2-free-energy", std::abs(F.value - 0.5 * std::log(2.0)) < 1e-12);

        double t = invert_pressure(k2, 2.0 / 3.0);
        check(out, "thermo/k2-inversion", std::abs(t - 2.0) < 1e-8);

        check(out, "thermo/darroch-pyramid", darroch_bounds_check(pyramid(), 2));
    }

    // density-tools
    {
        RootMeasure rm = isolate_roots(matching_counts(build_cycle_path(4, 6)));
        DensitySamples ds = kernel_smooth(rm, 0.0, 4001);
        check(out, "density/kernel-mass", std::abs(ds.mass - 1.0) < 1e-6,
              "mass=" + std::to_string(ds.mass));

        double at0 = bethe_density(4, 0.0);
        check(out, "density/kesten-mckay", std::abs(at0 - std::sqrt(3.0) / (4 * M_PI)) < 1e-12);
    }

    // circulant squarefree property (small slice; full sweep in tests)
    {
        bool ok = true;
        std::string bad;
        for (const auto& [name, g] : circulant_corpus()) {
            if (g.n > 8) continue;
            IPoly p = matching_counts(g).signed_poly();
            IPoly gcd = ipoly_gcd(p, ipoly_derivative(p));
            if (ipoly_degree(gcd) > 0) { ok = false; bad = name; break; }
        }
        check(out, "matching/circulant-squarefree", ok, bad);
    }

    return out;
}

}  // namespace mdim
