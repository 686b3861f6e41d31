#include "mdim/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

namespace mdim {

static std::atomic<mpfr_prec_t> g_default_prec{256};

mpfr_prec_t Interval::default_precision() { return g_default_prec.load(); }
void Interval::set_default_precision(mpfr_prec_t prec) { g_default_prec.store(prec); }

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_int(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const Rat& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.backend().data(), MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0)
        throw input_error("malformed decimal number: " + s);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

Interval Interval::hull(double lo, double hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, std::min(lo, hi), MPFR_RNDD);
    mpfr_set_d(r.hi_, std::max(lo, hi), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    // min/max over the four endpoint products, rounded outward
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        const mpfr_t& a = (i & 1) ? hi_ : lo_;
        const mpfr_t& b = (i & 2) ? o.hi_ : o.lo_;
        mpfr_mul(t, a, b, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw invariant_error("interval division by zero-containing interval");
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        const mpfr_t& a = (i & 1) ? hi_ : lo_;
        const mpfr_t& b = (i & 2) ? o.hi_ : o.lo_;
        mpfr_div(t, a, b, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a, b, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::neg() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return neg();
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw invariant_error("interval log of nonpositive value");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log1p() const {
    Interval r(prec_);
    mpfr_log1p(r.lo_, lo_, MPFR_RNDD);
    mpfr_log1p(r.hi_, hi_, MPFR_RNDU);
    if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_))
        throw invariant_error("interval log1p out of domain");
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw invariant_error("interval sqrt of negative value");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

double Interval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    double v = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return v;
}

double Interval::rad() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    mpfr_div_ui(t, t, 2, MPFR_RNDU);
    double v = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    // outward double rounding: mid() is itself rounded, pad by one ulp scale
    return std::nextafter(std::max(v, 0.0), INFINITY);
}

double Interval::eps_around(double center) const {
    // based on the outward-rounded double endpoints, so the contract also
    // holds against lo()/hi() as seen by callers
    double v = std::max(hi() - center, center - lo());
    v = std::nextafter(std::max(v, 0.0), std::numeric_limits<double>::infinity());
    return v;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(double x) const {
    return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Interval::strictly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

std::string Interval::str(int digits) const {
    char* s1 = nullptr;
    char* s2 = nullptr;
    mpfr_asprintf(&s1, "%.*Rg", digits, lo_);
    mpfr_asprintf(&s2, "%.*Rg", digits, hi_);
    std::string out = std::string("[") + s1 + ", " + s2 + "]";
    mpfr_free_str(s1);
    mpfr_free_str(s2);
    return out;
}

}  // namespace mdim
