#include "mdim/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>

namespace mdim {

std::string target_name(ApproxTarget t) {
    return t == ApproxTarget::HalfLog ? "halflog" : "pressure";
}

ApproxTarget parse_target(const std::string& s) {
    if (s == "halflog") return ApproxTarget::HalfLog;
    if (s == "pressure") return ApproxTarget::RationalPressure;
    throw input_error("unknown approximation target: " + s);
}

double PolyApprox::radius() const { return std::sqrt(usq); }

namespace {

double eval_target(ApproxTarget tg, double t, double u) {
    if (tg == ApproxTarget::HalfLog) return 0.5 * std::log1p(t * u);
    return t * u / (1.0 + t * u);
}

// ---------------------------------------------------------------------------
// Remez exchange on s in [-1,1], u = usq*(s+1)/2, Chebyshev basis.

double cheb_eval(const std::vector<double>& b, double s) {
    // Clenshaw
    double y1 = 0, y2 = 0;
    for (size_t i = b.size(); i-- > 1;) {
        double y0 = 2 * s * y1 - y2 + b[i];
        y2 = y1;
        y1 = y0;
    }
    return s * y1 - y2 + (b.empty() ? 0.0 : b[0]);
}

struct RemezResult {
    std::vector<double> b;  // Chebyshev coefficients on [-1,1]
    double amplitude = 0.0;
    bool converged = false;
};

RemezResult remez(ApproxTarget tg, double t, double usq, int n_u) {
    auto f = [&](double s) { return eval_target(tg, t, usq * (s + 1.0) / 2.0); };
    int m = n_u + 2;  // reference size
    std::vector<double> ref(m);
    for (int i = 0; i < m; ++i) ref[i] = -std::cos(M_PI * i / (m - 1));

    RemezResult res;
    const int grid_n = std::max(4096, 64 * (n_u + 1));
    std::vector<double> grid(grid_n + 1);
    for (int i = 0; i <= grid_n; ++i) grid[i] = -std::cos(M_PI * i / grid_n);

    for (int iter = 0; iter < 60; ++iter) {
        Eigen::MatrixXd A(m, m);
        Eigen::VectorXd rhs(m);
        for (int i = 0; i < m; ++i) {
            double Tprev = 1, Tcur = ref[i];
            A(i, 0) = 1;
            if (n_u >= 1) A(i, 1) = ref[i];
            for (int j = 2; j <= n_u; ++j) {
                double Tnext = 2 * ref[i] * Tcur - Tprev;
                A(i, j) = Tnext;
                Tprev = Tcur;
                Tcur = Tnext;
            }
            A(i, n_u + 1) = (i % 2 == 0) ? 1.0 : -1.0;
            rhs(i) = f(ref[i]);
        }
        Eigen::VectorXd sol = A.fullPivLu().solve(rhs);
        if (!sol.allFinite()) break;
        std::vector<double> b(sol.data(), sol.data() + n_u + 1);

        // residual extrema on the dense grid, one per sign interval
        auto resid = [&](double s) { return f(s) - cheb_eval(b, s); };
        std::vector<std::pair<double, double>> extrema;  // (s, r(s))
        double cur_best_s = grid[0], cur_best_r = resid(grid[0]);
        int cur_sign = cur_best_r >= 0 ? 1 : -1;
        for (int i = 1; i <= grid_n; ++i) {
            double r = resid(grid[i]);
            int sg = r >= 0 ? 1 : -1;
            if (sg != cur_sign) {
                extrema.emplace_back(cur_best_s, cur_best_r);
                cur_best_s = grid[i];
                cur_best_r = r;
                cur_sign = sg;
            } else if (std::abs(r) > std::abs(cur_best_r)) {
                cur_best_s = grid[i];
                cur_best_r = r;
            }
        }
        extrema.emplace_back(cur_best_s, cur_best_r);

        // trim to m alternating extrema, dropping the weakest
        while (static_cast<int>(extrema.size()) > m) {
            size_t weakest = 0;
            for (size_t i = 1; i < extrema.size(); ++i)
                if (std::abs(extrema[i].second) < std::abs(extrema[weakest].second))
                    weakest = i;
            if (weakest == 0 || weakest + 1 == extrema.size()) {
                extrema.erase(extrema.begin() + weakest);
            } else {
                // interior removal merges equal signs; drop the weaker neighbor too
                size_t nb = std::abs(extrema[weakest - 1].second) <
                                    std::abs(extrema[weakest + 1].second)
                                ? weakest - 1
                                : weakest + 1;
                size_t a = std::min(weakest, nb), bidx = std::max(weakest, nb);
                extrema.erase(extrema.begin() + bidx);
                extrema.erase(extrema.begin() + a);
            }
        }
        if (static_cast<int>(extrema.size()) < m) {
            res.b = b;
            res.amplitude = std::abs(sol(n_u + 1));
            break;
        }
        double maxAmp = 0, minAmp = INFINITY;
        for (auto& [s, r] : extrema) {
            maxAmp = std::max(maxAmp, std::abs(r));
            minAmp = std::min(minAmp, std::abs(r));
        }
        res.b = b;
        res.amplitude = maxAmp;
        for (int i = 0; i < m; ++i) ref[i] = extrema[i].first;
        if (maxAmp > 0 && (maxAmp - minAmp) / maxAmp < 1e-3) {
            res.converged = true;
            break;
        }
    }
    return res;
}

// Chebyshev interpolation at n_u+1 nodes; fallback when the exchange fails.
std::vector<double> chebyshev_interpolant(ApproxTarget tg, double t, double usq, int n_u) {
    auto f = [&](double s) { return eval_target(tg, t, usq * (s + 1.0) / 2.0); };
    int N = n_u + 1;
    std::vector<double> fx(N), b(N, 0.0);
    for (int k = 0; k < N; ++k) fx[k] = f(std::cos(M_PI * (k + 0.5) / N));
    for (int j = 0; j < N; ++j) {
        double s = 0;
        for (int k = 0; k < N; ++k) s += fx[k] * std::cos(M_PI * j * (k + 0.5) / N);
        b[j] = 2.0 * s / N * (j == 0 ? 0.5 : 1.0);
    }
    return b;
}

// Chebyshev-in-s coefficients -> monomial-in-z decimal strings, done at
// extended precision so the conversion itself adds no measurable error.
std::vector<std::string> to_monomial_strings(const std::vector<double>& b, double usq,
                                             int degree_z) {
    mpfr_prec_t prec = 512;
    int n_u = static_cast<int>(b.size()) - 1;
    // integer Chebyshev coefficient table tau[j][k]
    std::vector<std::vector<Int>> tau(n_u + 1);
    tau[0] = {Int(1)};
    if (n_u >= 1) tau[1] = {Int(0), Int(1)};
    for (int j = 2; j <= n_u; ++j) {
        tau[j].assign(j + 1, Int(0));
        for (int k = 0; k < j; ++k) tau[j][k + 1] += 2 * tau[j - 1][k];
        for (int k = 0; k <= j - 2; ++k) tau[j][k] -= tau[j - 2][k];
    }
    // a_k = sum_j b_j tau[j][k]  (monomials in s)
    std::vector<mpfr_t> a(n_u + 1);
    for (auto& x : a) mpfr_init2(x, prec);
    mpfr_t tmp, bj;
    mpfr_init2(tmp, prec);
    mpfr_init2(bj, prec);
    for (int k = 0; k <= n_u; ++k) mpfr_set_zero(a[k], 1);
    for (int j = 0; j <= n_u; ++j) {
        mpfr_set_d(bj, b[j], MPFR_RNDN);
        for (int k = 0; k <= j; ++k) {
            mpfr_set_z(tmp, Int(tau[j][k]).backend().data(), MPFR_RNDN);
            mpfr_mul(tmp, tmp, bj, MPFR_RNDN);
            mpfr_add(a[k], a[k], tmp, MPFR_RNDN);
        }
    }
    // s = alpha*u + beta with alpha = 2/usq, beta = -1
    // c_i = sum_{k>=i} a_k C(k,i) alpha^i beta^{k-i};  beta^{k-i} = (-1)^{k-i}
    mpfr_t alpha, apow, term;
    mpfr_init2(alpha, prec);
    mpfr_init2(apow, prec);
    mpfr_init2(term, prec);
    mpfr_set_d(alpha, usq, MPFR_RNDN);
    mpfr_ui_div(alpha, 2, alpha, MPFR_RNDN);
    std::vector<std::string> out(degree_z + 1, "0");
    for (int i = 0; i <= n_u; ++i) {
        mpfr_t ci;
        mpfr_init2(ci, prec);
        mpfr_set_zero(ci, 1);
        for (int k = i; k <= n_u; ++k) {
            Int binom = 1;
            for (int x = 0; x < i; ++x) binom = binom * (k - x) / (x + 1);
            mpfr_set_z(term, binom.backend().data(), MPFR_RNDN);
            mpfr_mul(term, term, a[k], MPFR_RNDN);
            if ((k - i) % 2 == 1) mpfr_neg(term, term, MPFR_RNDN);
            mpfr_add(ci, ci, term, MPFR_RNDN);
        }
        mpfr_pow_ui(apow, alpha, i, MPFR_RNDN);
        mpfr_mul(ci, ci, apow, MPFR_RNDN);
        if (2 * i <= degree_z) {
            char* s = nullptr;
            mpfr_asprintf(&s, "%.45Re", ci);
            out[2 * i] = s;
            mpfr_free_str(s);
        }
        mpfr_clear(ci);
    }
    for (auto& x : a) mpfr_clear(x);
    mpfr_clear(tmp);
    mpfr_clear(bj);
    mpfr_clear(alpha);
    mpfr_clear(apow);
    mpfr_clear(term);
    return out;
}

Interval target_iv(ApproxTarget tg, const Interval& t, const Interval& u) {
    Interval tu = t * u;
    if (tg == ApproxTarget::HalfLog)
        return tu.log1p() * Interval::from_rat(Rat(1, 2));
    return tu / (tu + Interval::from_int(1));
}

Interval target_deriv_iv(ApproxTarget tg, const Interval& t, const Interval& u) {
    Interval one = Interval::from_int(1);
    Interval den = one + t * u;
    if (tg == ApproxTarget::HalfLog) return (t / den) * Interval::from_rat(Rat(1, 2));
    return t / (den * den);
}

// sup |f''| on [0, usq] for t >= 0
double target_second_bound(ApproxTarget tg, double t) {
    return tg == ApproxTarget::HalfLog ? 0.5 * t * t : 2.0 * t * t;
}

// "%.45Re"-style decimal to an exact rational
Rat rat_from_decimal(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    Int digits = 0;
    long frac = 0, exp10 = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            seen_dot = true;
            continue;
        }
        digits = digits * 10 + (s[i] - '0');
        seen_digit = true;
        if (seen_dot) ++frac;
    }
    if (!seen_digit) throw input_error("malformed decimal: " + s);
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) exp10 = std::stol(s.substr(i + 1));
    else if (i != s.size()) throw input_error("malformed decimal: " + s);
    Rat v(digits);
    long shift = exp10 - frac;
    Int pow10 = 1;
    for (long k = 0; k < std::labs(shift); ++k) pow10 *= 10;
    if (shift >= 0) v *= pow10;
    else v /= pow10;
    return neg ? -v : v;
}

// exact Chebyshev coefficients (over s in [-1,1], u = usq(s+1)/2) of the
// stored even-monomial polynomial; certification runs in this basis
// because the monomial one is hopelessly conditioned on [0, usq]
std::vector<Rat> chebyshev_from_monomial(const PolyApprox& pa) {
    std::vector<Rat> c;
    for (size_t k = 0; k < pa.coeff.size(); k += 2) c.push_back(rat_from_decimal(pa.coeff[k]));
    Rat half_usq = Rat(pa.usq) / 2;

    std::vector<Rat> b(c.size(), Rat(0));
    std::vector<Rat> pw = {Rat(1)};  // u^k in the T basis
    for (size_t k = 0; k < c.size(); ++k) {
        for (size_t j = 0; j < pw.size(); ++j) b[j] += c[k] * pw[j];
        if (k + 1 == c.size()) break;
        // multiply by u = half_usq*(T_0 + T_1); T_1 T_j = (T_{j+1}+T_{|j-1|})/2
        std::vector<Rat> next(pw.size() + 1, Rat(0));
        for (size_t j = 0; j < pw.size(); ++j) {
            next[j] += half_usq * pw[j];
            next[j + 1] += half_usq / 2 * pw[j];
            next[j == 0 ? 1 : j - 1] += half_usq / 2 * pw[j];
        }
        pw = std::move(next);
    }
    return b;
}

// Clenshaw over T_j at an interval point
Interval clenshaw_t(const std::vector<Interval>& b, const Interval& s) {
    Interval y1, y2;
    Interval two_s = s + s;
    for (size_t j = b.size(); j-- > 1;) {
        Interval y0 = two_s * y1 - y2 + b[j];
        y2 = y1;
        y1 = y0;
    }
    return s * y1 - y2 + (b.empty() ? Interval() : b[0]);
}

// Clenshaw over U_j; result is y_0 since U_1 - 2s U_0 = 0
Interval clenshaw_u(const std::vector<Interval>& e, const Interval& s) {
    Interval y1, y2;
    Interval two_s = s + s;
    for (size_t j = e.size(); j-- > 0;) {
        Interval y0 = two_s * y1 - y2 + e[j];
        y2 = y1;
        y1 = y0;
    }
    return y1;
}

}  // namespace

double certify_error(const PolyApprox& pa) {
    std::vector<Rat> b_exact = chebyshev_from_monomial(pa);
    size_t n = b_exact.size();
    std::vector<Interval> b(n);
    for (size_t j = 0; j < n; ++j) b[j] = Interval::from_rat(b_exact[j]);

    // q'_s = sum_j j b_j U_{j-1}
    std::vector<Interval> d(n > 0 ? n - 1 : 0);
    for (size_t j = 1; j < n; ++j) d[j - 1] = b[j] * Interval::from_int(static_cast<long>(j));

    // |T_j''| <= j^2 (j^2 - 1)/3 on [-1,1]
    double B2 = 0;
    for (size_t j = 2; j < n; ++j) {
        double jj = static_cast<double>(j);
        B2 += std::abs(Interval::from_rat(b_exact[j]).hi()) * jj * jj * (jj * jj - 1) / 3.0;
    }
    double du_ds = 2.0 / pa.usq;  // ds/du
    double S2 = target_second_bound(pa.target, pa.t) + B2 * du_ds * du_ds;

    Interval t = Interval::from_double(pa.t);
    Interval scale = Interval::from_double(du_ds);  // q'_u = q'_s * 2/usq

    struct Box {
        double a, b;
        double upper;
        bool operator<(const Box& o) const { return upper < o.upper; }
    };
    std::priority_queue<Box> pq;
    double lower = 0.0;
    auto push = [&](double a, double bb) {
        double m = 0.5 * (a + bb);
        double h = 0.5 * (bb - a);
        Interval mid = Interval::from_double(m);
        Interval s = mid * scale - Interval::from_int(1);
        Interval rm = (target_iv(pa.target, t, mid) - clenshaw_t(b, s)).abs();
        Interval rd = (target_deriv_iv(pa.target, t, mid) - clenshaw_u(d, s) * scale).abs();
        double upper = rm.hi() + rd.hi() * h + 0.5 * S2 * h * h;
        lower = std::max(lower, rm.lo());
        pq.push({a, bb, upper * 1.0000000001});
    };
    const int initial = 256;
    for (int i = 0; i < initial; ++i)
        push(pa.usq * i / initial, pa.usq * (i + 1) / initial);
    for (int iter = 0; iter < 500000 && !pq.empty(); ++iter) {
        Box top = pq.top();
        if (top.upper <= lower * 1.02 + 1e-17) return top.upper;
        pq.pop();
        double m = 0.5 * (top.a + top.b);
        push(top.a, m);
        push(m, top.b);
    }
    return pq.empty() ? lower : pq.top().upper;  // still a sound upper bound
}

PolyApprox minimax_fit(ApproxTarget target, double t, double usq, int N) {
    if (N < 0 || usq <= 0 || t < 0) throw input_error("minimax_fit: N >= 0, usq > 0, t >= 0");
    int n_u = N / 2;
    PolyApprox pa;
    pa.target = target;
    pa.t = t;
    pa.usq = usq;
    pa.degree = N;
    RemezResult rr = remez(target, t, usq, n_u);
    if (rr.b.empty()) {
        rr.b = chebyshev_interpolant(target, t, usq, n_u);
        rr.converged = false;
        rr.amplitude = 0.0;
    }
    pa.exchange_converged = rr.converged;
    pa.remez_residual = rr.amplitude;
    pa.coeff = to_monomial_strings(rr.b, usq, N);
    pa.eps = certify_error(pa);
    return pa;
}

CertifiedValue integrate_against_moments(const PolyApprox& pa, const MomentSequence& mu) {
    if (pa.degree > mu.order())
        throw input_error("integrate_against_moments: degree exceeds moment order");
    double support_sq = mu.degree_bound >= 2 ? 4.0 * (mu.degree_bound - 1) : 0.0;
    if (pa.usq < support_sq - 1e-9)
        throw input_error("integrate_against_moments: approximation domain smaller than support");
    Interval sum;
    for (size_t k = 0; k < pa.coeff.size(); k += 2) {
        Interval c = Interval::from_decimal(pa.coeff[k]);
        Interval m = Interval::from_rat(mu.mu[k]);
        sum = sum + c * m;
    }
    CertifiedValue cv;
    cv.value = sum.mid();
    cv.eps = pa.eps + sum.eps_around(cv.value);
    cv.provenance = "minimax(" + target_name(pa.target) + ",t=" + std::to_string(pa.t) +
                    ",N=" + std::to_string(pa.degree) + ") integrated against " + mu.source;
    return cv;
}

}  // namespace mdim
