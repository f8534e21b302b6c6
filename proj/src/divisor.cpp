#include "mapstrip/divisor.hpp"

#include <algorithm>
#include <cmath>

namespace mapstrip {

namespace {

void sort_entries(std::vector<DivisorEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const DivisorEntry& a, const DivisorEntry& b) {
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
}

std::vector<DivisorEntry> merge_entries(std::vector<DivisorEntry> raw, double radius) {
  sort_entries(raw);
  std::vector<DivisorEntry> merged;
  merged.reserve(raw.size());
  for (const DivisorEntry& e : raw) {
    if (e.multiplicity == 0) continue;
    bool absorbed = false;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
      if (e.point.real() - it->point.real() > radius) break;
      if (std::abs(e.point - it->point) <= radius) {
        it->multiplicity += e.multiplicity;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(e);
  }
  std::erase_if(merged, [](const DivisorEntry& e) { return e.multiplicity == 0; });
  return merged;
}

Rectangle intersect_windows(const Rectangle& a, const Rectangle& b) {
  const double x0 = std::max(a.x0, b.x0);
  const double x1 = std::min(a.x1, b.x1);
  const double y0 = std::max(a.y0, b.y0);
  const double y1 = std::min(a.y1, b.y1);
  if (!(x0 < x1 && y0 < y1)) throw DisjointWindows("divisor windows do not overlap");
  return {x0, x1, y0, y1};
}

}  // namespace

Divisor::Divisor(std::vector<DivisorEntry> entries, Rectangle window, double merge_radius)
    : entries_(merge_entries(std::move(entries), merge_radius)), window_(window) {
  const double slack =
      1e-9 * (1.0 + std::max({std::abs(window.x0), std::abs(window.x1),
                              std::abs(window.y0), std::abs(window.y1)}));
  for (const DivisorEntry& e : entries_)
    if (!window_.contains(e.point, slack))
      throw BadArgument("divisor entry lies outside its window");
}

bool Divisor::is_positive() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const DivisorEntry& e) { return e.multiplicity > 0; });
}

Divisor Divisor::positive_part() const {
  std::vector<DivisorEntry> out;
  for (const DivisorEntry& e : entries_)
    if (e.multiplicity > 0) out.push_back(e);
  return {std::move(out), window_};
}

Divisor Divisor::negative_part() const {
  std::vector<DivisorEntry> out;
  for (const DivisorEntry& e : entries_)
    if (e.multiplicity < 0) out.push_back({e.point, -e.multiplicity});
  return {std::move(out), window_};
}

Divisor Divisor::abs_divisor() const {
  std::vector<DivisorEntry> out = entries_;
  for (DivisorEntry& e : out) e.multiplicity = std::abs(e.multiplicity);
  return {std::move(out), window_};
}

Divisor Divisor::negated() const {
  std::vector<DivisorEntry> out = entries_;
  for (DivisorEntry& e : out) e.multiplicity = -e.multiplicity;
  return {std::move(out), window_};
}

Divisor Divisor::add(const Divisor& a, const Divisor& b, double merge_radius) {
  const Rectangle window = intersect_windows(a.window_, b.window_);
  std::vector<DivisorEntry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  const double slack = 1e-9;
  for (const Divisor* d : {&a, &b})
    for (const DivisorEntry& e : d->entries_)
      if (window.contains(e.point, slack)) out.push_back(e);
  return {std::move(out), window, merge_radius};
}

bool Divisor::same_entries(const Divisor& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].point != o.entries_[i].point ||
        entries_[i].multiplicity != o.entries_[i].multiplicity)
      return false;
  return true;
}

double BumpFunction::eval(Complex z) const {
  const double t = std::abs(z - center) / radius;
  if (t >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double convolve(const Divisor& d, const BumpFunction& chi, double t) {
  // support of chi(. + t) in divisor coordinates is the disk around center - t
  const Complex c = chi.center - t;
  const Rectangle& w = d.window();
  const double slack =
      1e-12 * (1.0 + std::abs(t) + std::abs(c) + chi.radius);
  if (c.real() - chi.radius < w.x0 - slack || c.real() + chi.radius > w.x1 + slack ||
      c.imag() - chi.radius < w.y0 - slack || c.imag() + chi.radius > w.y1 + slack)
    throw WindowOverrun("translated bump support leaves the divisor window");

  double acc = 0.0;
  for (const DivisorEntry& e : d.entries())
    acc += static_cast<double>(e.multiplicity) * chi.eval(e.point + t);
  return acc;
}

Track convolution_track(const Divisor& d, const BumpFunction& chi,
                        const Interval& t_window, double step) {
  if (!(step > 0.0)) throw BadArgument("track step must be positive");
  Track track;
  track.t0 = t_window.lo;
  track.step = step;
  const auto n =
      static_cast<std::size_t>(std::floor(t_window.length() / step + 1e-9)) + 1;
  track.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    track.values.push_back(convolve(d, chi, track.t0 + static_cast<double>(i) * step));
  return track;
}

namespace {

double min_pair_separation(const Divisor& d) {
  double best = kInfinity;
  for (const DivisorEntry& a : d.entries()) {
    if (a.multiplicity <= 0) continue;
    for (const DivisorEntry& b : d.entries()) {
      if (b.multiplicity >= 0) continue;
      best = std::min(best, std::abs(a.point - b.point));
    }
  }
  return best;
}

}  // namespace

double positive_part_identity_check(const Divisor& d, const BumpFunction& phi,
                                    const std::vector<double>& t_samples) {
  const double separation = min_pair_separation(d);
  if (!(2.0 * phi.radius < separation))
    throw PreconditionViolated(
        "bump diameter must stay below the zero/pole separation");
  const Divisor dplus = d.positive_part();
  double worst = 0.0;
  for (double t : t_samples) {
    const double lhs = convolve(dplus, phi, t);
    const double rhs = std::max(convolve(d, phi, t), 0.0);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

LatticeDivisorSpec::LatticeDivisorSpec(RationalVector l, RationalVector m)
    : lambda(std::move(l)), mu(std::move(m)) {
  require_same_basis(lambda.basis(), mu.basis());
  if (lambda.is_zero() && mu.is_zero())
    throw BadArgument("lattice spec requires (lambda, mu) != (0, 0)");
}

Divisor lattice_divisor(const LatticeDivisorSpec& spec, const Rectangle& window) {
  const Complex lm{spec.lambda_value(), spec.mu_value()};
  const Complex base = 1.0 / lm;
  const double corner = std::max(
      {std::hypot(window.x0, window.y0), std::hypot(window.x0, window.y1),
       std::hypot(window.x1, window.y0), std::hypot(window.x1, window.y1)});
  const auto bound = static_cast<long>(std::ceil(std::abs(lm) * corner)) + 2;
  const double slack =
      1e-9 * (1.0 + std::max({std::abs(window.x0), std::abs(window.x1),
                              std::abs(window.y0), std::abs(window.y1)}));

  std::vector<DivisorEntry> entries;
  for (long n1 = -bound; n1 <= bound; ++n1) {
    for (long n2 = -bound; n2 <= bound; ++n2) {
      const Complex p = base * Complex{static_cast<double>(n1), static_cast<double>(n2)};
      if (window.contains(p, slack)) entries.push_back({p, 1});
    }
  }
  return {std::move(entries), window};
}

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<double> y, std::vector<double> gamma)
    : y_(std::move(y)), g_(std::move(gamma)) {
  if (y_.size() != g_.size() || y_.size() < 2)
    throw BadArgument("piecewise-linear map needs >= 2 matching breakpoints");
  for (std::size_t i = 1; i < y_.size(); ++i) {
    if (!(y_[i - 1] < y_[i]))
      throw NonMonotone("breakpoint ordinates must strictly increase");
    if (!(g_[i - 1] < g_[i]))
      throw NonMonotone("map values must strictly increase");
  }
}

double PiecewiseLinearMap::operator()(double y) const {
  std::size_t hi = y_.size() - 1;
  std::size_t lo = 0;
  if (y <= y_.front()) {
    hi = 1;
  } else if (y >= y_.back()) {
    lo = y_.size() - 2;
  } else {
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (y_[mid] <= y ? lo : hi) = mid;
    }
    hi = lo + 1;
  }
  const double s = (g_[hi] - g_[lo]) / (y_[hi] - y_[lo]);
  return g_[lo] + s * (y - y_[lo]);
}

Divisor transform_strip(const Divisor& d, const PiecewiseLinearMap& gamma) {
  std::vector<DivisorEntry> out;
  out.reserve(d.size());
  for (const DivisorEntry& e : d.entries())
    out.push_back({{e.point.real(), gamma(e.point.imag())}, e.multiplicity});
  const Rectangle& w = d.window();
  return {std::move(out), Rectangle(w.x0, w.x1, gamma(w.y0), gamma(w.y1))};
}

namespace {

// Kuhn augmenting-path matching; returns true when every left vertex is
// covered using edges shorter than the threshold.
bool left_cover_exists(const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                       std::size_t n_right, double threshold) {
  std::vector<long> match_right(n_right, -1);
  std::vector<char> visited;

  std::function<bool(std::size_t)> try_augment = [&](std::size_t l) -> bool {
    for (const auto& [r, dist] : adj[l]) {
      if (dist >= threshold || visited[r]) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || try_augment(static_cast<std::size_t>(match_right[r]))) {
        match_right[r] = static_cast<long>(l);
        return true;
      }
    }
    return false;
  };

  for (std::size_t l = 0; l < adj.size(); ++l) {
    visited.assign(n_right, 0);
    if (!try_augment(l)) return false;
  }
  return true;
}

}  // namespace

SequenceAPResult sequence_ap_check(const Divisor& d, double t, double epsilon,
                                   const Strip& inner, const Strip& outer,
                                   const Interval& window) {
  if (!d.is_positive())
    throw BadArgument("sequence test is defined for positive divisors");
  if (!(epsilon > 0.0)) throw BadArgument("epsilon must be positive");
  if (!outer.contains_compactly(inner))
    throw BadArgument("inner strip must be compactly contained in outer");
  const double core_lo = window.lo + epsilon;
  const double core_hi = window.hi - epsilon;
  if (!(core_lo < core_hi))
    throw WindowTooSmall("epsilon margin exceeds the window");

  // expand multiplicities into a plain point sequence
  std::vector<Complex> points;
  for (const DivisorEntry& e : d.entries()) {
    if (e.point.real() < window.lo || e.point.real() > window.hi) continue;
    if (!outer.contains(e.point)) continue;
    for (int k = 0; k < e.multiplicity; ++k) points.push_back(e.point);
  }

  std::vector<Complex> left;  // translated points that must be matched
  for (const Complex& b : points) {
    if (!inner.contains(b)) continue;
    const double xs = b.real() + t;
    if (xs < core_lo || xs > core_hi) continue;
    left.push_back(b + t);
  }

  SequenceAPResult res{true, 0.0, left.size()};
  if (left.empty()) return res;
  if (points.size() < left.size()) {
    res.almost_period = false;
    res.bottleneck = kInfinity;
    return res;
  }

  std::vector<std::vector<std::pair<std::size_t, double>>> adj(left.size());
  std::vector<double> candidates;
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (std::size_t r = 0; r < points.size(); ++r) {
      const double dist = std::abs(left[l] - points[r]);
      adj[l].push_back({r, dist});
      candidates.push_back(dist);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // smallest candidate distance whose closed-ball matching covers the left set
  std::size_t lo = 0, hi = candidates.size();
  if (!left_cover_exists(adj, points.size(),
                         std::nextafter(candidates.back(), kInfinity))) {
    res.almost_period = false;
    res.bottleneck = kInfinity;
    return res;
  }
  while (hi - lo > 0) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (left_cover_exists(adj, points.size(),
                          std::nextafter(candidates[mid], kInfinity)))
      hi = mid;
    else
      lo = mid + 1;
    if (lo == hi) break;
  }
  res.bottleneck = candidates[lo];
  res.almost_period = res.bottleneck < epsilon;
  return res;
}

}  // namespace mapstrip
