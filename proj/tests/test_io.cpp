#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "mdim/io.hpp"
#include "mdim/reference.hpp"

using namespace mdim;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/mdim_io_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph json round trip") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    TempFile f("graph.json", graph_to_json(g));
    Graph h = read_graph_json(f.path);
    CHECK(h.n == g.n);
    CHECK(h.edges == g.edges);
}

TEST_CASE("graph json rejects malformed input") {
    TempFile f1("bad1.json", "{\"edges\": []}");
    CHECK_THROWS_AS(read_graph_json(f1.path), input_error);
    TempFile f2("bad2.json", "{\"n\": 2, \"edges\": [[0]]}");
    CHECK_THROWS_AS(read_graph_json(f2.path), input_error);
    TempFile f3("bad3.json", "not json");
    CHECK_THROWS_AS(read_graph_json(f3.path), input_error);
    CHECK_THROWS_AS(read_graph_json("/nonexistent/q.json"), input_error);
}

TEST_CASE("moments json round trip") {
    MomentSequence mu;
    mu.degree_bound = 3;
    mu.source = "hex";
    mu.mu = {Rat(1), Rat(0), Rat(3), Rat(1, 2)};
    TempFile f("moments.json", moments_to_json(mu));
    MomentSequence back = read_moments_json(f.path);
    CHECK(back.degree_bound == 3);
    CHECK(back.mu == mu.mu);
}

TEST_CASE("reference data file matches the embedded table") {
    MomentSequence mu = read_moments_json(std::string(MDIM_DATA_DIR) + "/hex.json");
    const auto& ref = hex_reference_moment_strings();
    REQUIRE(mu.mu.size() == ref.size());
    for (size_t k = 0; k < ref.size(); ++k) CHECK(mu.mu[k] == Rat(Int(ref[k])));
    CHECK(mu.degree_bound == 3);
}

TEST_CASE("mayer csv") {
    TempFile f("mayer.csv", "1,4\n2,-28\n3,232\n");
    auto a = read_mayer_csv(f.path, false);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == 4);
    CHECK(a[1] == -28);

    TempFile h("mayer_halved.csv", "# d_n = a_n / 2\n1,2\n2,-14\n");
    auto b = read_mayer_csv(h.path, true);
    CHECK(b[0] == 4);
    CHECK(b[1] == -28);

    TempFile bad("mayer_bad.csv", "1;4\n");
    CHECK_THROWS_AS(read_mayer_csv(bad.path, false), input_error);
    TempFile gap("mayer_gap.csv", "1,4\n3,232\n");
    CHECK_THROWS_AS(read_mayer_csv(gap.path, false), input_error);
}

TEST_CASE("poly approx json round trip") {
    PolyApprox pa;
    pa.target = ApproxTarget::RationalPressure;
    pa.t = 2.0;
    pa.usq = 12.0;
    pa.degree = 2;
    pa.coeff = {"1.5e-01", "0", "2.25e-02"};
    pa.eps = 1e-3;
    TempFile f("pa.json", poly_approx_to_json(pa));
    PolyApprox back = read_poly_approx_json(f.path);
    CHECK(back.target == pa.target);
    CHECK(back.coeff == pa.coeff);
    CHECK(back.eps == pa.eps);
}
