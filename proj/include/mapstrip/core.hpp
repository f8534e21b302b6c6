#pragma once

// Value types for horizontal strips, points of the Riemann sphere,
// finite exponential sums and their quotients, plus the chordal metric
// and grid-sampled sup estimates used everywhere else in the library.

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "mapstrip/errors.hpp"

namespace mapstrip {

using Complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Horizontal strip {z : lower < Im z < upper}; bounds may be infinite.
struct Strip {
  double lower;
  double upper;

  Strip(double lo, double hi) : lower(lo), upper(hi) {
    if (!(lo < hi)) throw BadArgument("strip requires lower < upper");
  }
  static Strip whole_plane() { return Strip(-kInfinity, kInfinity); }

  bool bounded() const {
    return lower > -kInfinity && upper < kInfinity;
  }
  double width() const { return upper - lower; }
  bool contains(Complex z) const {
    return lower < z.imag() && z.imag() < upper;
  }
  /// Compact inclusion sub ⊂⊂ *this (strictly interior bounds).
  bool contains_compactly(const Strip& sub) const {
    return lower < sub.lower && sub.upper < upper;
  }
};

/// Closed real interval, used for Re-windows and shift windows.
struct Interval {
  double lo;
  double hi;

  Interval(double a, double b) : lo(a), hi(b) {
    if (!(a <= b)) throw BadArgument("interval requires lo <= hi");
  }
  double length() const { return hi - lo; }
};

/// Axis-aligned rectangle [x0,x1] x [y0,y1] in the plane.
struct Rectangle {
  double x0, x1, y0, y1;

  Rectangle(double x0_, double x1_, double y0_, double y1_)
      : x0(x0_), x1(x1_), y0(y0_), y1(y1_) {
    if (!(x0 < x1 && y0 < y1))
      throw BadArgument("rectangle requires x0 < x1 and y0 < y1");
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  double diameter() const { return std::hypot(width(), height()); }
  bool contains(Complex z, double slack = 0.0) const {
    return z.real() >= x0 - slack && z.real() <= x1 + slack &&
           z.imag() >= y0 - slack && z.imag() <= y1 + slack;
  }
  bool intersects(const Rectangle& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
};

/// A point of the Riemann sphere C ∪ {∞}.
class SpherePoint {
 public:
  SpherePoint(Complex v) : value_(v), infinite_(false) {}  // NOLINT(implicit)
  SpherePoint(double v) : value_(v, 0.0), infinite_(false) {}
  static SpherePoint infinity() {
    SpherePoint p{Complex{0.0, 0.0}};
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }
  /// Finite value; meaningless when is_infinity().
  Complex value() const { return value_; }

 private:
  Complex value_;
  bool infinite_;
};

/// Chordal metric on the sphere, normalized to diameter 1:
/// rho(p,q) = |p-q| / sqrt((1+|p|^2)(1+|q|^2)), rho(p,∞) = 1/sqrt(1+|p|^2).
double spherical_distance(const SpherePoint& p, const SpherePoint& q);

/// One term c * e^{i*lambda*z} of an exponential sum.
struct Term {
  double frequency;     // lambda, real
  Complex coefficient;  // c, nonzero after normalization
};

/// Finite sum  sum_k c_k e^{i*lambda_k*z}  with strictly increasing real
/// frequencies. The empty sum is the zero function. Analytic on all of C
/// and almost periodic on every horizontal strip.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(std::vector<Term> terms);

  static ExponentialSum constant(Complex c);
  /// c * e^{i*lambda*z}
  static ExponentialSum harmonic(double lambda, Complex c);
  /// sin(a*z + b), a real, b complex.
  static ExponentialSum sine(double a, Complex b = 0.0);
  /// cos(a*z + b), a real, b complex.
  static ExponentialSum cosine(double a, Complex b = 0.0);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Complex eval(Complex z) const;
  /// Sum of term magnitudes at z: sum |c_k| e^{-lambda_k * Im z}.
  /// Scale reference for relative zero tests; depends only on Im z.
  double magnitude_scale(double im) const;
  double max_frequency() const;  // max |lambda_k|, 0 for constants

  /// Term-wise exact derivative: (lambda, c) -> (lambda, i*lambda*c).
  ExponentialSum derivative() const;

  ExponentialSum operator-() const;
  friend ExponentialSum operator+(const ExponentialSum& a, const ExponentialSum& b);
  friend ExponentialSum operator-(const ExponentialSum& a, const ExponentialSum& b);
  friend ExponentialSum operator*(const ExponentialSum& a, const ExponentialSum& b);
  friend ExponentialSum operator*(Complex s, const ExponentialSum& a);

  /// Values at z = x0 + j*dx + i*y for j = 0..count-1 (rotor recurrence,
  /// re-anchored periodically).
  void eval_row(double x0, double dx, std::size_t count, double y,
                std::vector<Complex>& out) const;

 private:
  std::vector<Term> terms_;
};

/// Rectangular sampling density for grid scans. `margin` insets the
/// sampled rows from the strip edges.
struct GridSpec {
  double re_step;
  double im_step;
  double margin = 0.0;

  GridSpec(double rs, double is, double m = 0.0)
      : re_step(rs), im_step(is), margin(m) {
    if (!(rs > 0.0) || !(is > 0.0)) throw BadArgument("grid steps must be positive");
    if (m < 0.0) throw BadArgument("grid margin must be nonnegative");
  }
};

/// Meromorphic function on a strip, represented as a quotient of two
/// exponential sums. Poles and zeros are carried by the representation;
/// evaluation lands on the Riemann sphere.
class MeromorphicAP {
 public:
  MeromorphicAP(ExponentialSum numerator, ExponentialSum denominator, Strip domain);

  const ExponentialSum& numerator() const { return num_; }
  const ExponentialSum& denominator() const { return den_; }
  const Strip& domain() const { return domain_; }

  /// Value at z as a sphere point. Common zeros of numerator and
  /// denominator cancel through exact derivatives (order <= 8).
  /// Throws OutsideDomain, IndeterminatePoint.
  SpherePoint eval(Complex z) const;

  /// |f(z)| in [0, +inf]; +inf at poles. Same cancellation rules as eval.
  double abs_at(Complex z) const;

  MeromorphicAP reciprocal() const;
  static MeromorphicAP product(const MeromorphicAP& f, const MeromorphicAP& g);
  static MeromorphicAP sum(const MeromorphicAP& f, const MeromorphicAP& g);

 private:
  ExponentialSum num_;
  ExponentialSum den_;
  Strip domain_;
};

/// Row-by-row sphere values of f over a scan grid, with indeterminate
/// points flagged rather than thrown.
struct GridValues {
  std::vector<double> xs;
  std::vector<double> ys;
  // values[row*xs.size() + col]; skip[..] true where eval was indeterminate
  std::vector<SpherePoint> values;
  std::vector<char> skip;
  long skipped = 0;
};

/// Sample grid for (strip, window, grid); throws EmptyGrid when no rows
/// or columns fit (including unbounded strips).
GridValues evaluate_grid(const MeromorphicAP& f, const Strip& strip,
                         const Interval& window, const GridSpec& grid);

struct SupResult {
  double value = 0.0;
  long skipped = 0;
};

/// Grid-sampled sup of rho(f(z), g(z)) over strip x window.
SupResult sup_spherical_diff(const MeromorphicAP& f, const MeromorphicAP& g,
                             const Strip& strip, const Interval& window,
                             const GridSpec& grid);

/// Grid-sampled sup of rho(f(z+tau), f(z)).
SupResult sup_translate_diff(const MeromorphicAP& f, double tau,
                             const Strip& strip, const Interval& window,
                             const GridSpec& grid);

/// Max of rho(f(z), f(z')) over sampled pairs with |z-z'| < delta.
SupResult modulus_of_continuity(const MeromorphicAP& f, const Strip& strip,
                                const Interval& window, double delta,
                                const GridSpec& grid);

}  // namespace mapstrip
