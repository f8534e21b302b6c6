#pragma once

// Search for epsilon-almost periods on the real axis, relative-density
// estimates over finite windows, the Diophantine approximation oracle,
// and the translate-clustering probe.

#include <cstdint>
#include <optional>
#include <vector>

#include "mapstrip/core.hpp"
#include "mapstrip/divisor.hpp"

namespace mapstrip {

/// Result of a shift scan. `found` holds the shifts passing the sup
/// test; `max_gap` is the largest gap between consecutive found shifts,
/// extended by the window endpoints (the finite-window stand-in for the
/// inclusion length L).
struct ScanReport {
  double epsilon = 0.0;
  std::optional<Strip> strip;  // absent for scalar track scans
  Interval window{0.0, 0.0};
  double step = 0.0;
  std::vector<double> found;
  double max_gap = 0.0;
  long skipped_points = 0;
  // full profile, aligned: sup value measured at each scanned shift
  std::vector<double> taus;
  std::vector<double> sup_values;
};

double max_gap_of(const std::vector<double>& found, const Interval& window);

/// Sampled sup of rho(f(z+tau), f(z)) over strip x z_window below epsilon?
bool is_almost_period(const MeromorphicAP& f, double tau, const Strip& strip,
                      const Interval& z_window, double epsilon, const GridSpec& grid);

/// Scan every shift tau = window.lo + k*step for the sup test.
/// Deterministic for fixed inputs.
ScanReport scan_almost_periods(const MeromorphicAP& f, const Strip& strip,
                               double epsilon, const Interval& tau_window,
                               double step, const Interval& z_window,
                               const GridSpec& grid);

/// Euclidean scan of a sampled scalar track: shifts are multiples of the
/// track step; sup |s(t+tau) - s(t)| over the overlap.
ScanReport scan_track_almost_periods(const Track& track, double epsilon,
                                     const Interval& tau_window);

/// Smallest q in [1, qmax] with ||q*alpha_i|| < delta for every alpha
/// (distance to the nearest integer); nullopt when none exists.
std::optional<long> simultaneous_approximation(const std::vector<double>& alphas,
                                               double delta, long qmax);

struct Convergent {
  std::int64_t p;
  std::int64_t q;
};

/// First `count` continued-fraction convergents p/q of alpha. A rational
/// alpha may terminate early; whatever exists is returned.
std::vector<Convergent> continued_fraction_convergents(double alpha, int count);

struct TranslateCluster {
  std::size_t representative;       // index into the input translate list
  std::vector<std::size_t> members; // includes the representative
  double diameter;                  // max pairwise sup distance inside
};

/// Greedy first-fit clustering of the translated functions f(.+t_i)
/// under pairwise sup_spherical_diff: members of a cluster are pairwise
/// closer than 2*epsilon; clusters are disjoint and cover all indices.
std::vector<TranslateCluster> bochner_probe(const MeromorphicAP& f,
                                            const std::vector<double>& translates,
                                            const Strip& strip,
                                            const Interval& z_window, double epsilon,
                                            const GridSpec& grid);

}  // namespace mapstrip
