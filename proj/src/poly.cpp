#include "mdim/poly.hpp"

#include <algorithm>

namespace mdim {

IPoly ipoly_trim(IPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int ipoly_degree(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

IPoly ipoly_add(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return ipoly_trim(std::move(r));
}

IPoly ipoly_sub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return ipoly_trim(std::move(r));
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ipoly_trim(std::move(r));
}

IPoly ipoly_scale(const IPoly& a, const Int& c) {
    if (c == 0) return {};
    IPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

IPoly ipoly_derivative(const IPoly& a) {
    if (a.size() <= 1) return {};
    IPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(i);
    return ipoly_trim(std::move(r));
}

Int ipoly_content(const IPoly& a) {
    Int g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

IPoly ipoly_primitive(const IPoly& a) {
    Int g = ipoly_content(a);
    if (g == 0) return {};
    if (!a.empty() && a.back() < 0) g = -g;
    IPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}

// Sign-preserving pseudo-remainder: a positive multiple of rem(a, b).
// Each elimination step scales a by |lc(b)| > 0, so polynomial value signs
// are preserved everywhere.
static IPoly pseudo_rem(IPoly a, const IPoly& b) {
    int db = ipoly_degree(b);
    const Int& lb = b.back();
    Int abs_lb = boost::multiprecision::abs(lb);
    int sgn_lb = lb > 0 ? 1 : -1;
    while (!a.empty() && ipoly_degree(a) >= db) {
        int da = ipoly_degree(a);
        Int la = a.back();
        for (auto& c : a) c *= abs_lb;
        Int m = la * sgn_lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= m * b[i];
        a = ipoly_trim(std::move(a));
    }
    return a;
}

// Divide by the positive content, keeping the sign of the polynomial.
static IPoly ipoly_reduce_keep_sign(IPoly a) {
    Int g = ipoly_content(a);
    if (g == 0) return {};
    for (auto& c : a) c /= g;
    return a;
}

IPoly ipoly_gcd(IPoly a, IPoly b) {
    a = ipoly_primitive(a);
    b = ipoly_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (ipoly_degree(a) < ipoly_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IPoly r = ipoly_primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return ipoly_primitive(a);
}

// Exact division a / b, assuming divisibility.
static IPoly ipoly_divexact(IPoly a, const IPoly& b) {
    if (b.empty()) throw invariant_error("ipoly_divexact: by zero");
    IPoly q;
    int db = ipoly_degree(b);
    while (ipoly_degree(a) >= db) {
        int da = ipoly_degree(a);
        Int c = a.back() / b.back();
        if (c * b.back() != a.back()) throw invariant_error("ipoly_divexact: not divisible");
        if (static_cast<int>(q.size()) < da - db + 1) q.resize(da - db + 1, Int(0));
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        a = ipoly_trim(std::move(a));
    }
    if (!a.empty()) throw invariant_error("ipoly_divexact: nonzero remainder");
    return q;
}

std::vector<IPoly> ipoly_squarefree_decomposition(const IPoly& a) {
    std::vector<IPoly> out;
    IPoly f = ipoly_primitive(a);
    if (ipoly_degree(f) < 1) return out;
    IPoly fp = ipoly_derivative(f);
    IPoly c = ipoly_gcd(f, fp);
    IPoly w = ipoly_divexact(f, c);
    IPoly y = ipoly_divexact(fp, c);
    IPoly z = ipoly_sub(y, ipoly_derivative(w));
    while (!(ipoly_degree(w) == 0)) {
        IPoly g = ipoly_gcd(w, z);
        out.push_back(g);
        w = ipoly_divexact(w, g);
        z = ipoly_divexact(z, g);
        z = ipoly_sub(z, ipoly_derivative(w));
    }
    return out;
}

Rat ipoly_eval(const IPoly& a, const Rat& x) {
    Rat r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

int ipoly_sign_at(const IPoly& a, const Rat& x) {
    Rat v = ipoly_eval(a, x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::vector<IPoly> sturm_chain(const IPoly& a) {
    std::vector<IPoly> chain;
    IPoly p0 = ipoly_primitive(a);
    if (p0.empty()) return chain;
    chain.push_back(p0);
    IPoly p1 = ipoly_primitive(ipoly_derivative(p0));
    if (p1.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        IPoly r = pseudo_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(ipoly_reduce_keep_sign(std::move(r)));
    }
    return chain;
}

static int sign_variations(const std::vector<IPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = ipoly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_count(const std::vector<IPoly>& chain, const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int rational_root_multiplicity(const IPoly& a, const Rat& x0) {
    IPoly f = ipoly_trim(a);
    int mult = 0;
    while (!f.empty() && ipoly_degree(f) >= 1 && ipoly_eval(f, x0) == 0) {
        // deflate by (x - x0) over Q, then clear denominators
        int d = ipoly_degree(f);
        std::vector<Rat> g(d);
        Rat acc = 0;
        for (int i = d; i >= 1; --i) {
            acc = acc * x0 + Rat(f[i]);
            g[i - 1] = acc;
        }
        Int l = 1;
        for (auto& c : g) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
        IPoly g2(g.size());
        for (size_t i = 0; i < g.size(); ++i)
            g2[i] = boost::multiprecision::numerator(g[i]) *
                    (l / boost::multiprecision::denominator(g[i]));
        f = ipoly_trim(std::move(g2));
        ++mult;
    }
    return mult;
}

}  // namespace mdim
