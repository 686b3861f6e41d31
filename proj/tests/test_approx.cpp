#include <doctest.h>

#include <cmath>

#include "mdim/approx.hpp"
#include "mdim/saw.hpp"

using namespace mdim;

namespace {

double eval_fit(const PolyApprox& pa, double z) {
    double v = 0, zp = 1;
    for (const auto& c : pa.coeff) {
        v += std::stod(c) * zp;
        zp *= z;
    }
    return v;
}

double target_at(const PolyApprox& pa, double z) {
    double u = pa.t * z * z;
    return pa.target == ApproxTarget::HalfLog ? 0.5 * std::log1p(u) : u / (1 + u);
}

}  // namespace

TEST_CASE("degree zero is the best constant") {
    // on [0, 12]: (f(0)+f(12))/2 with sup error (f(12)-f(0))/2 = ln(13)/4
    PolyApprox pa = minimax_fit(ApproxTarget::HalfLog, 1.0, 12.0, 0);
    CHECK(std::stod(pa.coeff[0]) == doctest::Approx(0.25 * std::log(13.0)).epsilon(1e-6));
    CHECK(pa.eps == doctest::Approx(0.25 * std::log(13.0)).epsilon(1e-3));
    CHECK(pa.eps >= 0.25 * std::log(13.0));  // soundness, never an undershoot
}

TEST_CASE("odd coefficients vanish") {
    PolyApprox pa = minimax_fit(ApproxTarget::HalfLog, 1.0, 8.0, 10);
    for (size_t k = 1; k < pa.coeff.size(); k += 2) CHECK(pa.coeff[k] == "0");
}

TEST_CASE("eps decreases with degree and stays sound") {
    double prev = 1e9;
    for (int N : {0, 2, 6, 12, 20}) {
        PolyApprox pa = minimax_fit(ApproxTarget::HalfLog, 1.0, 12.0, N);
        CHECK(pa.eps <= prev * 1.0001);
        prev = pa.eps;
        CHECK(pa.eps >= pa.remez_residual * 0.99);  // certified >= reported
        double R = pa.radius();
        for (int i = 0; i <= 2000; ++i) {
            double z = -R + 2 * R * i / 2000.0;
            CHECK(std::abs(target_at(pa, z) - eval_fit(pa, z)) <= pa.eps * 1.0000001 + 1e-14);
        }
    }
}

TEST_CASE("pressure target") {
    PolyApprox pa = minimax_fit(ApproxTarget::RationalPressure, 1.0, 8.0, 20);
    CHECK(pa.eps < 1e-3);
    for (int i = 0; i <= 500; ++i) {
        double z = -pa.radius() + 2 * pa.radius() * i / 500.0;
        CHECK(std::abs(target_at(pa, z) - eval_fit(pa, z)) <= pa.eps * 1.0000001 + 1e-14);
    }
}

TEST_CASE("integrate against moments") {
    MomentSequence mu;
    mu.degree_bound = 4;
    mu.source = "test";
    mu.mu = {Rat(1), Rat(0), Rat(4), Rat(0), Rat(28)};

    PolyApprox one;  // q(z) = 1
    one.target = ApproxTarget::HalfLog;
    one.usq = 12.0;
    one.degree = 4;
    one.coeff = {"1", "0", "0", "0", "0"};
    one.eps = 0;
    CertifiedValue cv = integrate_against_moments(one, mu);
    CHECK(cv.value == doctest::Approx(1.0).epsilon(1e-14));

    PolyApprox zsq = one;  // q(z) = z^2
    zsq.coeff = {"0", "0", "1", "0", "0"};
    CHECK(integrate_against_moments(zsq, mu).value == doctest::Approx(4.0).epsilon(1e-14));

    PolyApprox toodeep = one;
    toodeep.degree = 8;
    toodeep.coeff.resize(9, "0");
    CHECK_THROWS_AS(integrate_against_moments(toodeep, mu), input_error);

    PolyApprox narrow = one;  // fitted on a smaller interval than the support
    narrow.usq = 4.0;
    CHECK_THROWS_AS(integrate_against_moments(narrow, mu), input_error);
}

TEST_CASE("integration error includes the fit eps") {
    MomentSequence mu;
    mu.degree_bound = 2;
    mu.source = "k2";
    mu.mu = {Rat(1), Rat(0), Rat(1)};  // K_2 measure: atoms at +-1
    PolyApprox pa = minimax_fit(ApproxTarget::HalfLog, 1.0, 4.0, 2);
    CertifiedValue cv = integrate_against_moments(pa, mu);
    // true integral is ln(2)/2
    CHECK(std::abs(cv.value - 0.5 * std::log(2.0)) <= cv.eps);
    CHECK(cv.eps >= pa.eps);
}
