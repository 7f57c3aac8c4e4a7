// Validated interval arithmetic with outward rounding and verified
// elementary functions.  Every certified quantity in this project is carried
// by the Interval type defined here.
//
// Rounding model: endpoints are computed in round-to-nearest double
// arithmetic and then widened to the adjacent representable values
// (portable outward rounding; no FPU mode switching).  Elementary functions
// are computed by argument reduction plus truncated series with explicit
// remainder enclosures; no accuracy assumption is made on libm beyond the
// IEEE-754 basic operations (+,-,*,/) and sqrt, whose result is additionally
// verified by squaring.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pcert {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------
struct IntervalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZeroInterval : IntervalError {
  DivisionByZeroInterval() : IntervalError("interval division by interval containing zero") {}
};
struct OverflowError : IntervalError {
  OverflowError() : IntervalError("interval endpoint left the supported finite range (~1e300)") {}
};
struct DomainError : IntervalError {
  using IntervalError::IntervalError;
};
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-range policy: endpoints beyond this magnitude are an error, not a
// saturation.  The certification inputs never approach this.
inline constexpr double kFiniteRange = 1e300;

namespace detail {
inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  explicit Interval(double v) : lo_(v), hi_(v) { validate(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { validate(); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool strictly_positive() const { return lo_ > 0.0; }
  bool strictly_negative() const { return hi_ < 0.0; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  // Widen both endpoints outward by one representable step.
  Interval widened() const {
    return Interval(detail::next_down(lo_), detail::next_up(hi_));
  }

 private:
  void validate() const {
    if (!(lo_ <= hi_))
      throw IntervalError("invalid interval endpoints (lo > hi or NaN)");
    if (std::abs(lo_) > kFiniteRange || std::abs(hi_) > kFiniteRange)
      throw OverflowError();
  }
  double lo_, hi_;
};

inline double width(const Interval& a) {
  // Rounded up so the reported width never understates the true width.
  return detail::next_up(a.hi() - a.lo());
}
inline bool contains(const Interval& a, const Interval& b) { return a.contains(b); }

namespace detail {
// Build an interval from a round-to-nearest result of a single basic
// operation: the exact value lies within one ulp of r, so [pred(r),succ(r)]
// contains it.
inline Interval widen1(double r) { return Interval(next_down(r), next_up(r)); }
inline Interval widen2(double lo, double hi) {
  return Interval(next_down(lo), next_up(hi));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------
inline Interval operator+(const Interval& a, const Interval& b) {
  return detail::widen2(a.lo() + b.lo(), a.hi() + b.hi());
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return detail::widen2(a.lo() - b.hi(), a.hi() - b.lo());
}
inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
  return detail::widen2(std::min(std::min(p1, p2), std::min(p3, p4)),
                        std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZeroInterval();
  const double q1 = a.lo() / b.lo(), q2 = a.lo() / b.hi();
  const double q3 = a.hi() / b.lo(), q4 = a.hi() / b.hi();
  return detail::widen2(std::min(std::min(q1, q2), std::min(q3, q4)),
                        std::max(std::max(q1, q2), std::max(q3, q4)));
}

// Mixed double operands (treated as exact point intervals).
inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

// ---------------------------------------------------------------------------
// Lattice / set operations (exact; no widening needed)
// ---------------------------------------------------------------------------
inline Interval abs(const Interval& a) {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  return Interval(0.0, std::max(-a.lo(), a.hi()));
}
inline Interval sqr(const Interval& a) {
  const Interval m = abs(a);
  return detail::widen2(m.lo() * m.lo(), m.hi() * m.hi());
}
inline Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}
inline Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}
inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// ---------------------------------------------------------------------------
// Verified elementary functions
// ---------------------------------------------------------------------------
namespace detail {

// ln 2 bracket: the nearest double to ln 2 widened one step each way.
inline Interval ln2_interval() {
  const double ln2 = 0.6931471805599453094172321214581766;  // rounds to nearest
  return widen1(ln2);
}

// exp at a point, by range reduction x = k ln2 + r, |r| <= ln2/2 + slack,
// degree-13 Taylor with Lagrange remainder, then exact scaling by 2^k.
inline Interval exp_point(double x) {
  if (x > 690.0) throw OverflowError();
  if (x < -745.13) {
    // exp(x) underflows; [0, smallest positive step above the true value].
    return Interval(0.0, 5e-324);
  }
  const Interval L2 = ln2_interval();
  const double k = std::nearbyint(x / 0.6931471805599453);
  Interval r = Interval(x) - Interval(k) * L2;
  // |r| <= ln2/2 up to reduction rounding; assert a safe cap.
  if (std::max(std::abs(r.lo()), std::abs(r.hi())) > 0.35)
    throw IntervalError("exp range reduction failed");
  // Horner evaluation of sum_{i=0}^{13} r^i / i!.
  Interval s(1.0);
  for (int i = 13; i >= 1; --i) s = Interval(1.0) + r * s / Interval(static_cast<double>(i));
  // Remainder: |R| <= |r|^14 / 14! * exp(|r|) <= |r|^14 / 14! * 1.5.
  const double rm = std::max(std::abs(r.lo()), std::abs(r.hi()));
  double rem = 1.5 * std::pow(rm, 14) / 87178291200000.0;  // 14! = 87178291200000
  rem = next_up(next_up(rem));
  s = s + Interval(-rem, rem);
  const int ki = static_cast<int>(k);
  return Interval(std::ldexp(s.lo(), ki), std::ldexp(s.hi(), ki));
}

// log at a point x > 0: x = m 2^e with m in [1/sqrt2, sqrt2), atanh series
// log m = 2 sum t^{2i+1}/(2i+1), t = (m-1)/(m+1), |t| <= 0.1716.
inline Interval log_point(double x) {
  if (!(x > 0.0)) throw DomainError("log of non-positive value");
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0.7071067811865476) {
    m *= 2.0;
    e -= 1;
  }
  const Interval mi(m);
  const Interval t = (mi - 1.0) / (mi + 1.0);
  const Interval t2 = sqr(t);
  Interval s(0.0);
  // sum_{i<=13} t^{2i+1}/(2i+1), Horner in t^2.
  for (int i = 13; i >= 0; --i) s = Interval(1.0 / (2.0 * i + 1.0)).widened() + t2 * s;
  s = Interval(2.0) * t * s;
  // Remainder: 2|t|^29/(29(1-t^2)).
  const double tm = std::max(std::abs(t.lo()), std::abs(t.hi()));
  double rem = 2.0 * std::pow(tm, 29) / (29.0 * (1.0 - tm * tm));
  rem = next_up(next_up(rem));
  s = s + Interval(-rem, rem);
  return s + Interval(static_cast<double>(e)) * ln2_interval();
}

}  // namespace detail

inline Interval exp(const Interval& x) {
  const Interval lo = detail::exp_point(x.lo());
  const Interval hi = detail::exp_point(x.hi());
  return Interval(lo.lo(), hi.hi());
}

inline Interval log(const Interval& x) {
  if (!(x.lo() > 0.0)) throw DomainError("log of interval touching (-inf,0]");
  const Interval lo = detail::log_point(x.lo());
  const Interval hi = detail::log_point(x.hi());
  return Interval(lo.lo(), hi.hi());
}

inline Interval sqrt(const Interval& x) {
  if (x.lo() < 0.0) throw DomainError("sqrt of interval with negative part");
  // std::sqrt is IEEE-correctly rounded, but verify by squaring anyway.
  double lo = detail::next_down(std::sqrt(x.lo()));
  double hi = detail::next_up(std::sqrt(x.hi()));
  if (lo < 0.0) lo = 0.0;
  while (lo > 0.0 && detail::next_up(lo * lo) > x.lo()) lo = detail::next_down(lo);
  while (detail::next_down(hi * hi) < x.hi()) hi = detail::next_up(hi);
  return Interval(lo, hi);
}

namespace detail {
// tanh at a point via 1 - 2/(e^{2x}+1) for x >= 0, odd reflection otherwise.
inline Interval tanh_point(double x) {
  if (x < 0.0) {
    const Interval p = tanh_point(-x);
    return Interval(-p.hi(), -p.lo());
  }
  if (x >= 20.0) {
    // 1 - 2 e^{-2x} <= tanh(x) <= 1 for x >= 0.
    const Interval t = exp_point(-2.0 * x);
    return Interval((Interval(1.0) - Interval(2.0) * t).lo(), 1.0);
  }
  const Interval e = exp_point(2.0 * x);
  Interval r = Interval(1.0) - Interval(2.0) / (e + 1.0);
  return Interval(std::max(0.0, r.lo()), std::min(1.0, r.hi()));
}
}  // namespace detail

inline Interval tanh(const Interval& x) {
  const Interval lo = detail::tanh_point(x.lo());
  const Interval hi = detail::tanh_point(x.hi());
  return Interval(lo.lo(), hi.hi());
}

inline Interval cosh(const Interval& x) {
  const Interval m = abs(x);  // cosh is even, increasing on [0, inf)
  const Interval el = detail::exp_point(m.lo());
  const Interval eh = detail::exp_point(m.hi());
  const Interval lo = (el + Interval(1.0) / el) / 2.0;
  const Interval hi = (eh + Interval(1.0) / eh) / 2.0;
  return Interval(std::max(1.0, lo.lo()), hi.hi());
}

// sech^2(x) = 1/cosh^2(x); even, decreasing in |x|.
inline Interval sech2(const Interval& x) {
  const Interval c = cosh(x);
  Interval r = Interval(1.0) / sqr(c);
  return Interval(std::max(0.0, r.lo()), std::min(1.0, r.hi()));
}

inline Interval pow_int(const Interval& x, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return Interval(1.0) / pow_int(x, -n);
  if (n % 2 == 0) {
    const Interval h = pow_int(x, n / 2);
    return sqr(h);
  }
  return x * pow_int(x, n - 1);
}

// ---------------------------------------------------------------------------
// Common verified constants
// ---------------------------------------------------------------------------
inline const Interval& pi_interval() {
  static const Interval v = detail::widen1(3.14159265358979323846);
  return v;
}
inline const Interval& sqrt_2pi() {
  static const Interval v = sqrt(Interval(2.0) * pi_interval());
  return v;
}
inline const Interval& inv_sqrt_2pi() {
  static const Interval v = Interval(1.0) / sqrt_2pi();
  return v;
}

// ---------------------------------------------------------------------------
// Scalar abstraction helpers.  Generic numerical code is written against a
// template parameter S that is either double or Interval; these shims give
// the two realizations a common vocabulary.
// ---------------------------------------------------------------------------
inline double midpoint(double x) { return x; }
inline double midpoint(const Interval& x) { return x.mid(); }

inline double scalar_cast(double x) { return x; }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double from(double v) { return v; }
  static constexpr bool is_interval = false;
};
template <>
struct ScalarTraits<Interval> {
  static Interval from(double v) { return Interval(v); }
  static constexpr bool is_interval = true;
};

}  // namespace pcert
