#pragma once

#include <mpfr.h>

#include <string>

#include "mdim/numbers.hpp"

namespace mdim {

/// Closed interval [lo, hi] with directed-rounding MPFR endpoints. All
/// operations produce enclosures of the exact result.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = default_precision());
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t prec);

    static Interval from_int(long v, mpfr_prec_t prec = default_precision());
    static Interval from_double(double v, mpfr_prec_t prec = default_precision());
    static Interval from_rat(const Rat& v, mpfr_prec_t prec = default_precision());
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec = default_precision());
    static Interval hull(double lo, double hi, mpfr_prec_t prec = default_precision());

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // requires 0 not in o
    Interval neg() const;
    Interval abs() const;
    Interval log() const;    // requires lo > 0
    Interval log1p() const;  // requires lo > -1
    Interval sqrt() const;

    double lo() const;  // rounded down
    double hi() const;  // rounded up
    double mid() const;
    double rad() const;  // rounded up
    /// Certified bound on |x - center| for every x in the interval.
    double eps_around(double center) const;
    bool contains_zero() const;
    bool contains(double x) const;
    bool strictly_less(const Interval& o) const;  // hi < o.lo

    std::string str(int digits = 20) const;

    mpfr_prec_t precision() const { return prec_; }

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    friend Interval make_raw(mpfr_prec_t);
};

}  // namespace mdim
