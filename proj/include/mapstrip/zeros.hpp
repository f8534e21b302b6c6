#pragma once

// Zero location and counting for exponential sums via the argument
// principle (adaptive boundary walk + quadrisection + Newton), and the
// derived divisor / separation / boundedness estimates for quotients.

#include <utility>
#include <vector>

#include "mapstrip/core.hpp"
#include "mapstrip/divisor.hpp"

namespace mapstrip {

struct Root {
  Complex location;
  int multiplicity;
};

struct RootList {
  std::vector<Root> roots;

  int total_multiplicity() const {
    int n = 0;
    for (const Root& r : roots) n += r.multiplicity;
    return n;
  }
};

/// Number of zeros of g inside rect, counted with multiplicity, from the
/// winding of g along the boundary. The boundary is required to stay
/// away from zeros; on a suspected boundary zero the rectangle is
/// perturbed outward by 1e-6 once, then BoundaryZero is thrown.
/// Throws NonIntegerWinding when the quadrature does not settle.
int count_zeros(const ExponentialSum& g, const Rectangle& rect);

/// All zeros of g inside rect, isolated by recursive quadrisection and
/// refined by Newton with the exact derivative to |g| < tol * scale.
/// Multiplicity of a cluster cell is its winding count.
RootList locate_zeros(const ExponentialSum& g, const Rectangle& rect, double tol);

/// Divisor of f on rect: zeros of the numerator (k>0) merged with zeros
/// of the denominator (k<0); coincident locations within 2*tol cancel.
Divisor divisor_of(const MeromorphicAP& f, const Rectangle& rect, double tol);

/// inf over pairs (zero in strip, pole in strip) of |z - z'|; +infinity
/// when either side is empty.
double separation_distance(const Divisor& d, const Strip& strip);

struct BoundedOffResult {
  double sup = 0.0;      // max |f| over kept grid points
  long kept = 0;
  long excluded = 0;     // grid points within r of a pole
  long skipped = 0;      // indeterminate points
  std::vector<Complex> poles;
};

/// Grid sup of |f| over strip x window, excluding open disks of radius r
/// around the denominator's zeros (pole search window widened by r+1).
BoundedOffResult bounded_off_poles(const MeromorphicAP& f, const Strip& strip,
                                   const Interval& window, double r,
                                   const GridSpec& grid, double locate_tol = 1e-9);

struct UnitRectangleCount {
  int zeros = 0;
  int poles = 0;
  int total() const { return zeros + poles; }
};

/// |d|-mass split into positive and negative parts inside the width-2
/// rectangle {z in strip : |Re z - t| < 1}.
UnitRectangleCount count_in_unit_rectangle(const Divisor& d, const Strip& strip,
                                           double t);

}  // namespace mapstrip
