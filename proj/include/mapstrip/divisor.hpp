#pragma once

// Divisors as finite charge distributions on a window: signed integer
// multiplicities at distinct points, plus the bump-convolution and
// bijection-based machinery that makes their almost-periodicity testable.

#include <vector>

#include "mapstrip/core.hpp"
#include "mapstrip/wedge.hpp"

namespace mapstrip {

struct DivisorEntry {
  Complex point;
  int multiplicity;  // nonzero
};

/// Finite list of (point, multiplicity) pairs valid inside a window.
/// Entries are kept sorted by (Re, Im); coincident points are merged on
/// construction and entries whose multiplicities cancel are removed.
class Divisor {
 public:
  Divisor(std::vector<DivisorEntry> entries, Rectangle window,
          double merge_radius = kDefaultMergeRadius);

  static constexpr double kDefaultMergeRadius = 1e-9;

  const std::vector<DivisorEntry>& entries() const { return entries_; }
  const Rectangle& window() const { return window_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool is_positive() const;

  /// Zeros part: entries with k > 0, kept with multiplicity |k|.
  Divisor positive_part() const;
  /// Poles part: entries with k < 0, kept with multiplicity |k|.
  Divisor negative_part() const;
  /// Total variation: |k| everywhere.
  Divisor abs_divisor() const;
  Divisor negated() const;

  /// Sum of charges; the result lives on the window intersection.
  /// Throws DisjointWindows.
  static Divisor add(const Divisor& a, const Divisor& b,
                     double merge_radius = kDefaultMergeRadius);

  bool same_entries(const Divisor& o) const;

 private:
  std::vector<DivisorEntry> entries_;
  Rectangle window_;
};

/// Canonical smooth bump: chi(z) = exp(1 - 1/(1-t^2)) for
/// t = |z-center|/radius < 1, zero outside; peak value 1 at the center.
struct BumpFunction {
  Complex center;
  double radius;

  BumpFunction(Complex c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw BadArgument("bump radius must be positive");
  }
  double eval(Complex z) const;
};

/// (d * chi)(t) = sum_n k_n chi(a_n + t). Throws WindowOverrun when the
/// translated support leaves the divisor's window (unseen mass would
/// corrupt the sum).
double convolve(const Divisor& d, const BumpFunction& chi, double t);

/// Uniformly sampled scalar function of the shift t.
struct Track {
  double t0 = 0.0;
  double step = 1.0;
  std::vector<double> values;

  double t_at(std::size_t i) const { return t0 + static_cast<double>(i) * step; }
};

Track convolution_track(const Divisor& d, const BumpFunction& chi,
                        const Interval& t_window, double step);

/// Max over t samples of |(d+ * phi)(t) - max{(d * phi)(t), 0}|.
/// Requires 2*phi.radius < separation of d (PreconditionViolated).
double positive_part_identity_check(const Divisor& d, const BumpFunction& phi,
                                    const std::vector<double>& t_samples);

/// Unit-multiplicity divisor on (lambda + i*mu)^{-1} (Z + iZ).
/// The pair carries exact basis coordinates next to float approximations.
struct LatticeDivisorSpec {
  RationalVector lambda;
  RationalVector mu;

  LatticeDivisorSpec(RationalVector l, RationalVector m);
  double lambda_value() const { return lambda.approx(); }
  double mu_value() const { return mu.approx(); }
};

Divisor lattice_divisor(const LatticeDivisorSpec& spec, const Rectangle& window);

/// Strictly increasing piecewise-linear map of the Im axis, given by
/// breakpoints; linear extrapolation beyond the ends.
class PiecewiseLinearMap {
 public:
  PiecewiseLinearMap(std::vector<double> y, std::vector<double> gamma);
  double operator()(double y) const;

 private:
  std::vector<double> y_;
  std::vector<double> g_;
};

/// (x + iy, k) -> (x + i*gamma(y), k); the window's Im range is mapped too.
Divisor transform_strip(const Divisor& d, const PiecewiseLinearMap& gamma);

struct SequenceAPResult {
  bool almost_period;     // matching exists at distance < epsilon
  double bottleneck;      // best achievable max pair distance (+inf if none)
  std::size_t matched;    // points that had to be matched
};

/// Bijection-style test for a positive divisor: every translated point
/// b_m + t that lands well inside the window (Re margin epsilon, inner
/// strip) must pair injectively with a point of the divisor within
/// epsilon. Decided by bottleneck bipartite matching.
SequenceAPResult sequence_ap_check(const Divisor& d, double t, double epsilon,
                                   const Strip& inner, const Strip& outer,
                                   const Interval& window);

}  // namespace mapstrip
