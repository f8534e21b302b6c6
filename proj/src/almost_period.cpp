#include "mapstrip/almost_period.hpp"

#include <algorithm>
#include <cmath>

namespace mapstrip {

double max_gap_of(const std::vector<double>& found, const Interval& window) {
  if (found.empty()) return window.length();
  double gap = found.front() - window.lo;
  for (std::size_t i = 1; i < found.size(); ++i)
    gap = std::max(gap, found[i] - found[i - 1]);
  gap = std::max(gap, window.hi - found.back());
  return gap;
}

namespace {

struct PairSup {
  double value = 0.0;
  long skipped = 0;
};

PairSup compare_grids(const GridValues& a, const GridValues& b) {
  PairSup res;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.skip[k] || b.skip[k]) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, spherical_distance(a.values[k], b.values[k]));
  }
  return res;
}

}  // namespace

bool is_almost_period(const MeromorphicAP& f, double tau, const Strip& strip,
                      const Interval& z_window, double epsilon, const GridSpec& grid) {
  if (!(epsilon > 0.0)) throw BadArgument("epsilon must be positive");
  return sup_translate_diff(f, tau, strip, z_window, grid).value < epsilon;
}

ScanReport scan_almost_periods(const MeromorphicAP& f, const Strip& strip,
                               double epsilon, const Interval& tau_window,
                               double step, const Interval& z_window,
                               const GridSpec& grid) {
  if (!(epsilon > 0.0)) throw BadArgument("epsilon must be positive");
  if (!(step > 0.0)) throw BadArgument("scan step must be positive");

  ScanReport report;
  report.epsilon = epsilon;
  report.strip = strip;
  report.window = tau_window;
  report.step = step;

  const GridValues base = evaluate_grid(f, strip, z_window, grid);
  const auto n_tau =
      static_cast<std::size_t>(std::floor(tau_window.length() / step + 1e-9)) + 1;
  report.taus.reserve(n_tau);
  report.sup_values.reserve(n_tau);

  for (std::size_t k = 0; k < n_tau; ++k) {
    const double tau = tau_window.lo + static_cast<double>(k) * step;
    const GridValues shifted = evaluate_grid(
        f, strip, Interval(z_window.lo + tau, z_window.hi + tau), grid);
    const PairSup sup = compare_grids(base, shifted);
    report.taus.push_back(tau);
    report.sup_values.push_back(sup.value);
    report.skipped_points += sup.skipped;
    if (sup.value < epsilon) report.found.push_back(tau);
  }
  report.max_gap = max_gap_of(report.found, tau_window);
  return report;
}

ScanReport scan_track_almost_periods(const Track& track, double epsilon,
                                     const Interval& tau_window) {
  if (!(epsilon > 0.0)) throw BadArgument("epsilon must be positive");
  if (track.values.size() < 2) throw EmptyGrid("track has fewer than two samples");

  ScanReport report;
  report.epsilon = epsilon;
  report.window = tau_window;
  report.step = track.step;

  const long k_lo = static_cast<long>(std::ceil(tau_window.lo / track.step - 1e-9));
  const long k_hi = static_cast<long>(std::floor(tau_window.hi / track.step + 1e-9));
  const long n = static_cast<long>(track.values.size());

  for (long k = k_lo; k <= k_hi; ++k) {
    const double tau = static_cast<double>(k) * track.step;
    const long shift = std::labs(k);
    if (shift >= n) {
      ++report.skipped_points;  // no overlap at this shift
      continue;
    }
    double sup = 0.0;
    for (long i = 0; i + shift < n; ++i)
      sup = std::max(sup, std::abs(track.values[i + shift] - track.values[i]));
    report.taus.push_back(tau);
    report.sup_values.push_back(sup);
    if (sup < epsilon) report.found.push_back(tau);
  }
  report.max_gap = max_gap_of(report.found, tau_window);
  return report;
}

std::optional<long> simultaneous_approximation(const std::vector<double>& alphas,
                                               double delta, long qmax) {
  if (!(delta > 0.0 && delta < 0.5))
    throw BadArgument("delta must lie in (0, 1/2)");
  if (qmax < 1) throw BadArgument("qmax must be at least 1");
  for (long q = 1; q <= qmax; ++q) {
    bool ok = true;
    for (double a : alphas) {
      const double qa = static_cast<double>(q) * a;
      if (std::abs(qa - std::round(qa)) >= delta) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

std::vector<Convergent> continued_fraction_convergents(double alpha, int count) {
  if (count < 1) throw BadArgument("convergent count must be at least 1");
  std::vector<Convergent> out;
  std::int64_t p0 = 0, q0 = 1;  // p_{-2}, q_{-2}
  std::int64_t p1 = 1, q1 = 0;  // p_{-1}, q_{-1}
  double x = alpha;
  bool first = true;
  while (static_cast<int>(out.size()) < count) {
    const double a_floor = std::floor(x);
    // partial quotients beyond ~1e15 exceed double resolution: terminate
    if (!first && (a_floor > 9.0e15 || a_floor < 1.0)) break;
    const auto a = static_cast<std::int64_t>(a_floor);
    const std::int64_t p = a * p1 + p0;
    const std::int64_t q = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p;
    q1 = q;
    out.push_back({p, q});
    const double frac = x - a_floor;
    if (frac < 1e-12) break;  // rational within double precision
    x = 1.0 / frac;
    first = false;
  }
  return out;
}

std::vector<TranslateCluster> bochner_probe(const MeromorphicAP& f,
                                            const std::vector<double>& translates,
                                            const Strip& strip,
                                            const Interval& z_window, double epsilon,
                                            const GridSpec& grid) {
  if (translates.empty()) throw BadArgument("translate list must be nonempty");
  if (!(epsilon > 0.0)) throw BadArgument("epsilon must be positive");

  const std::size_t n = translates.size();
  std::vector<GridValues> grids;
  grids.reserve(n);
  for (double t : translates)
    grids.push_back(evaluate_grid(
        f, strip, Interval(z_window.lo + t, z_window.hi + t), grid));

  // symmetric pairwise sup matrix
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      dist[i * n + j] = dist[j * n + i] = compare_grids(grids[i], grids[j]).value;

  std::vector<TranslateCluster> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (TranslateCluster& c : clusters) {
      bool fits = true;
      double widened = c.diameter;
      for (std::size_t m : c.members) {
        const double d = dist[i * n + m];
        if (d >= 2.0 * epsilon) {
          fits = false;
          break;
        }
        widened = std::max(widened, d);
      }
      if (fits) {
        c.members.push_back(i);
        c.diameter = widened;
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({i, {i}, 0.0});
  }
  return clusters;
}

}  // namespace mapstrip
