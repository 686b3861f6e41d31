#include "mdim/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace mdim {

namespace {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw input_error("non-finite parameter");
    return Rat(x);  // doubles are dyadic rationals
}

CertifiedValue from_interval(const Interval& iv, std::string provenance) {
    CertifiedValue cv;
    cv.value = iv.mid();
    cv.eps = iv.eps_around(cv.value);
    cv.provenance = std::move(provenance);
    return cv;
}

Rat pressure_exact(const MatchingPolynomial& mp, const Rat& t) {
    Rat M = mp.partition_at(t);
    return Rat(2) * mp.partition_derivative_at(t) / (Rat(mp.n) * M);
}

Interval log_partition_iv(const MatchingPolynomial& mp, const Rat& t) {
    Rat M = mp.partition_at(t);
    return Interval::from_rat(M).log() / Interval::from_int(mp.n);
}

// F(t) = ln M/n - (p/2) ln t, exact rational inputs.
Interval free_energy_iv(const MatchingPolynomial& mp, const Rat& t) {
    Interval F = log_partition_iv(mp, t);
    if (t == 1) return F;
    Interval half_p = Interval::from_rat(pressure_exact(mp, t) / 2);
    return F - half_p * Interval::from_rat(t).log();
}

int lattice_fit_degree(const ThermoContext& ctx) {
    int N = ctx.approx_degree;
    if (N > ctx.mu.order()) N = ctx.mu.order();
    return N - (N % 2);
}

CertifiedValue lattice_integral(const ThermoContext& ctx, ApproxTarget tg, double t) {
    double usq = 4.0 * (ctx.mu.degree_bound - 1);
    PolyApprox pa = minimax_fit(tg, t, usq, lattice_fit_degree(ctx));
    return integrate_against_moments(pa, ctx.mu);
}

// ln m_nu / n (Prop-style endpoint value lambda(p*) for finite graphs).
Interval lambda_at_pstar_iv(const MatchingPolynomial& mp) {
    return Interval::from_rat(Rat(mp.m.back())).log() / Interval::from_int(mp.n);
}

}  // namespace

double ThermoContext::p_star() const {
    if (!finite) return 1.0;
    return 2.0 * mp.nu() / mp.n;
}

ThermoContext make_finite_context(const MatchingPolynomial& mp) {
    if (mp.n <= 0 || mp.m.empty() || mp.m[0] != 1)
        throw input_error("invalid matching polynomial");
    ThermoContext ctx;
    ctx.finite = true;
    ctx.mp = mp;
    return ctx;
}

ThermoContext make_finite_context(const Graph& g) {
    return make_finite_context(matching_counts(g));
}

ThermoContext make_lattice_context(const MomentSequence& mu, int degree) {
    if (mu.mu.empty() || mu.mu[0] != 1)
        throw input_error("moment sequence must start with mu_0 = 1");
    if (mu.degree_bound < 2) throw input_error("degree bound must be >= 2");
    ThermoContext ctx;
    ctx.finite = false;
    ctx.mu = mu;
    ctx.approx_degree = degree >= 0 ? degree : mu.order();
    if (ctx.approx_degree > mu.order())
        throw input_error("requested degree exceeds available moment order");
    return ctx;
}

CertifiedValue pressure(const ThermoContext& ctx, double t) {
    if (t < 0) throw input_error("pressure: t >= 0 required");
    if (ctx.finite) {
        Rat p = pressure_exact(ctx.mp, rat_from_double(t));
        return from_interval(Interval::from_rat(p), "exact rational 2tM'/(nM)");
    }
    return lattice_integral(ctx, ApproxTarget::RationalPressure, t);
}

CertifiedValue log_partition_density(const ThermoContext& ctx, double t) {
    if (t < 0) throw input_error("log_partition_density: t >= 0 required");
    if (ctx.finite)
        return from_interval(log_partition_iv(ctx.mp, rat_from_double(t)),
                             "interval ln of exact rational M(t)");
    return lattice_integral(ctx, ApproxTarget::HalfLog, t);
}

CertifiedValue free_energy_at(const ThermoContext& ctx, double t) {
    if (t < 0) throw input_error("free_energy_at: t >= 0 required");
    if (t == 0) {
        CertifiedValue cv;
        cv.provenance = "F(0) = 0";
        return cv;
    }
    if (ctx.finite)
        return from_interval(free_energy_iv(ctx.mp, rat_from_double(t)),
                             "exact rational F(t) evaluated in intervals");
    CertifiedValue F = log_partition_density(ctx, t);
    if (t == 1.0) return F;
    CertifiedValue p = pressure(ctx, t);
    Interval Fi = Interval::hull(F.value - F.eps, F.value + F.eps);
    Interval pi = Interval::hull(p.value - p.eps, p.value + p.eps);
    Interval out = Fi - pi * Interval::from_double(t).log() / Interval::from_int(2);
    CertifiedValue cv = from_interval(out, "moment integrals for ln M/n and p, combined");
    return cv;
}

CertifiedValue free_energy(const ThermoContext& ctx) { return free_energy_at(ctx, 1.0); }

double invert_pressure(const ThermoContext& ctx, double p_target, double tol) {
    if (p_target < 0) throw input_error("invert_pressure: p >= 0 required");
    if (p_target >= ctx.p_star()) throw input_error("invert_pressure: p >= p_star");
    if (p_target == 0) return 0.0;

    if (ctx.finite) {
        Rat target = rat_from_double(p_target);
        Rat lo = 0, hi = 1;
        while (pressure_exact(ctx.mp, hi) < target) {
            lo = hi;
            hi *= 2;
            if (hi > Rat(Int(1) << 80)) throw invariant_error("pressure bracket runaway");
        }
        Rat tolr = rat_from_double(tol);
        while (hi - lo > tolr) {
            Rat mid = (lo + hi) / 2;
            (pressure_exact(ctx.mp, mid) < target ? lo : hi) = mid;
        }
        return static_cast<double>((lo + hi) / 2);
    }

    // lattice: bisection on certified evaluations, conservative when the
    // interval straddles the target
    double lo = 0, hi = 1;
    auto above = [&](double t) {
        CertifiedValue p = pressure(ctx, t);
        return p.value - p.eps > p_target;
    };
    while (!above(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1e20) throw invariant_error("pressure bracket runaway");
    }
    double tstep = std::max(tol, 1e-12);
    while (hi - lo > tstep * std::max(1.0, lo)) {
        double mid = 0.5 * (lo + hi);
        CertifiedValue p = pressure(ctx, mid);
        if (p.value + p.eps < p_target)
            lo = mid;
        else if (p.value - p.eps > p_target)
            hi = mid;
        else
            break;  // mid is within certification width of the target
    }
    return 0.5 * (lo + hi);
}

CertifiedValue lambda_of_p(const ThermoContext& ctx, double p) {
    if (p < 0) throw input_error("lambda_of_p: p >= 0 required");
    double ps = ctx.p_star();

    if (ctx.finite) {
        if (p > ps) {
            CertifiedValue cv;
            cv.provenance = "p above p_star: lambda = 0 by definition";
            return cv;
        }
        if (p == ps)
            return from_interval(lambda_at_pstar_iv(ctx.mp), "endpoint value ln m_nu / n");
        if (p == 0) {
            CertifiedValue cv;
            cv.provenance = "lambda(0) = 0";
            return cv;
        }
        // enclose t(p) by an exact rational bracket, then hull F over it;
        // F is monotone in t on either side of t = 1
        Rat target = rat_from_double(p);
        Rat lo = 0, hi = 1;
        while (pressure_exact(ctx.mp, hi) < target) {
            lo = hi;
            hi *= 2;
        }
        for (int i = 0; i < 60; ++i) {
            Rat mid = (lo + hi) / 2;
            (pressure_exact(ctx.mp, mid) < target ? lo : hi) = mid;
        }
        Interval a = free_energy_iv(ctx.mp, lo);
        Interval b = free_energy_iv(ctx.mp, hi);
        Interval out = Interval::hull(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
        if (lo < 1 && 1 < hi) {
            Interval c = free_energy_iv(ctx.mp, Rat(1));
            out = Interval::hull(std::min(out.lo(), c.lo()), std::max(out.hi(), c.hi()));
        }
        return from_interval(out, "F hulled over an exact rational bracket of t(p)");
    }

    if (p >= 1.0) {
        // limit estimate by geometric activity escalation; not certified
        CertifiedValue prev = free_energy_at(ctx, 1.0);
        double delta = 1.0;
        for (double t = 4.0, steps = 0; steps < 20; t *= 4, ++steps) {
            CertifiedValue cur = free_energy_at(ctx, t);
            delta = std::abs(cur.value - prev.value);
            prev = cur;
            if (delta < 1e-6) break;
        }
        prev.eps = std::max(prev.eps, delta);
        prev.provenance = "one-sided limit estimate at p = 1 (eps heuristic, not certified)";
        return prev;
    }
    double t = invert_pressure(ctx, p, 1e-10);
    return free_energy_at(ctx, t);
}

MomentSequence mayer_to_moments(const std::vector<Rat>& a, int degree_bound,
                                const std::string& source) {
    MomentSequence mu;
    mu.degree_bound = degree_bound;
    mu.source = source;
    mu.mu.assign(2 * a.size() + 1, Rat(0));
    mu.mu[0] = 1;
    for (size_t n = 1; n <= a.size(); ++n) {
        Rat m = (n % 2 == 1) ? a[n - 1] : -a[n - 1];
        if (m <= 0)
            throw input_error("Mayer coefficient a_" + std::to_string(n) +
                              " violates the moment sign pattern");
        mu.mu[2 * n] = m;
    }
    return mu;
}

std::vector<Rat> moments_to_mayer(const MomentSequence& mu) {
    std::vector<Rat> a;
    for (int n = 1; 2 * n <= mu.order(); ++n)
        a.push_back(n % 2 == 1 ? mu.mu[2 * n] : -mu.mu[2 * n]);
    return a;
}

bool darroch_bounds_check(const MatchingPolynomial& mp, int k) {
    if (k < 1 || k > mp.nu()) throw input_error("darroch_bounds_check: 1 <= k <= nu");
    ThermoContext ctx = make_finite_context(mp);
    Interval lam;
    if (k == mp.nu()) {
        lam = lambda_at_pstar_iv(mp);
    } else {
        CertifiedValue cv = lambda_of_p(ctx, 2.0 * k / mp.n);
        lam = Interval::hull(cv.value - cv.eps, cv.value + cv.eps);
    }
    Interval n_iv = Interval::from_int(mp.n);
    Interval ref = Interval::from_rat(Rat(mp.m[k])).log() / n_iv;
    Interval diff = (lam - ref).abs();
    Interval bound = n_iv.log() / n_iv;
    return diff.hi() <= bound.lo();
}

bool darroch_bounds_check(const Graph& g, int k) {
    return darroch_bounds_check(matching_counts(g), k);
}

}  // namespace mdim
