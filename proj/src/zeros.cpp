#include "mapstrip/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace mapstrip {

namespace {

constexpr double kBoundaryZeroRel = 1e-8;   // |g|/scale below this => boundary zero
constexpr double kCutLineRel = 1e-7;        // prefilter for subdivision cuts
constexpr double kPerturb = 1e-6;           // one-shot outward boundary perturbation
constexpr int kMaxEdgeDepth = 48;
constexpr int kMaxNewtonIters = 80;
constexpr double kTau = 6.283185307179586476925286766559;

struct WalkState {
  double total_arg = 0.0;
  double min_rel = kInfinity;
  bool aborted = false;  // ran into a (near-)zero or exhausted subdivision
};

struct Probe {
  Complex z;
  Complex g;
  Complex logd;  // g'/g
  double rel;    // |g| / scale
};

/// Winding engine for one exponential sum: adaptive boundary walk whose
/// segments are split until the trapezoid estimate of the log-derivative
/// integral agrees with the tracked argument increment.
class WindingEngine {
 public:
  explicit WindingEngine(const ExponentialSum& g)
      : g_(g), gp_(g.derivative()), freq_(std::max(1.0, g.max_frequency())) {
    if (g_.is_zero()) throw BadArgument("cannot count zeros of the zero function");
  }

  /// Winding number, or nullopt when the boundary came too close to a zero.
  std::optional<int> try_count(const Rectangle& rect) const {
    WalkState state;
    const Complex c00{rect.x0, rect.y0}, c10{rect.x1, rect.y0};
    const Complex c11{rect.x1, rect.y1}, c01{rect.x0, rect.y1};
    for (const auto& [a, b] :
         {std::pair{c00, c10}, {c10, c11}, {c11, c01}, {c01, c00}}) {
      walk_edge(a, b, state);
      if (state.aborted || state.min_rel < kBoundaryZeroRel) return std::nullopt;
    }
    const double winding = state.total_arg / kTau;
    const long rounded = std::lround(winding);
    if (std::abs(winding - static_cast<double>(rounded)) > 0.25)
      throw NonIntegerWinding("winding did not settle near an integer");
    if (rounded < 0)
      throw NonIntegerWinding("negative winding for an entire function");
    return static_cast<int>(rounded);
  }

  /// Public-operation policy: one outward perturbation, then hard error.
  int count(const Rectangle& rect) const {
    if (auto n = try_count(rect)) return *n;
    const Rectangle nudged(rect.x0 - kPerturb, rect.x1 + kPerturb,
                           rect.y0 - kPerturb, rect.y1 + kPerturb);
    if (auto n = try_count(nudged)) return *n;
    throw BoundaryZero("zero on the rectangle boundary persists after perturbation");
  }

  const ExponentialSum& function() const { return g_; }
  const ExponentialSum& derivative() const { return gp_; }
  double frequency_scale() const { return freq_; }

  Probe probe(Complex z) const {
    Probe p;
    p.z = z;
    p.g = g_.eval(z);
    const double scale = g_.magnitude_scale(z.imag());
    p.rel = scale > 0.0 ? std::abs(p.g) / scale : 0.0;
    p.logd = p.rel > 0.0 ? gp_.eval(z) / p.g : Complex{0.0, 0.0};
    return p;
  }

  /// Sampled min of |g|/scale along a segment (cheap cut prefilter).
  double line_min_rel(Complex a, Complex b) const {
    const double len = std::abs(b - a);
    const auto n = std::max<std::size_t>(
        9, static_cast<std::size_t>(std::ceil(len * freq_ * 4.0)) + 1);
    double best = kInfinity;
    for (std::size_t i = 0; i <= n; ++i) {
      const Complex z = a + (b - a) * (static_cast<double>(i) / static_cast<double>(n));
      const double scale = g_.magnitude_scale(z.imag());
      if (scale <= 0.0) return 0.0;
      best = std::min(best, std::abs(g_.eval(z)) / scale);
    }
    return best;
  }

 private:
  ExponentialSum g_;
  ExponentialSum gp_;
  double freq_;

  void walk_edge(Complex a, Complex b, WalkState& state) const {
    const double len = std::abs(b - a);
    const auto n0 = std::min<std::size_t>(
        1u << 20,
        std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(len * freq_))));
    Probe left = probe(a);
    state.min_rel = std::min(state.min_rel, left.rel);
    for (std::size_t i = 1; i <= n0 && !state.aborted; ++i) {
      const Complex zb = a + (b - a) * (static_cast<double>(i) / static_cast<double>(n0));
      Probe right = probe(zb);
      state.min_rel = std::min(state.min_rel, right.rel);
      refine(left, right, 0, state);
      left = right;
    }
  }

  void refine(const Probe& pa, const Probe& pb, int depth, WalkState& state) const {
    if (state.min_rel < kBoundaryZeroRel || state.aborted) {
      state.aborted = true;
      return;
    }
    const double dphi = std::arg(pb.g * std::conj(pa.g));
    const Complex trap = 0.5 * (pa.logd + pb.logd) * (pb.z - pa.z);
    const double dlog = std::log(std::abs(pb.g)) - std::log(std::abs(pa.g));
    const bool settled = std::abs(dphi) <= M_PI_2 &&
                         std::abs(trap.imag() - dphi) <= 0.2 &&
                         std::abs(trap.real() - dlog) <= 0.2;
    if (settled) {
      state.total_arg += dphi;
      return;
    }
    if (depth >= kMaxEdgeDepth) {
      state.aborted = true;  // unresolvable: almost certainly a zero on the edge
      return;
    }
    Probe mid = probe(0.5 * (pa.z + pb.z));
    state.min_rel = std::min(state.min_rel, mid.rel);
    refine(pa, mid, depth + 1, state);
    refine(mid, pb, depth + 1, state);
  }
};

Complex newton_refine(const WindingEngine& eng, Complex z0, int multiplicity,
                      double tol) {
  Complex z = z0;
  const double m = static_cast<double>(multiplicity);
  for (int it = 0; it < kMaxNewtonIters; ++it) {
    const Complex gv = eng.function().eval(z);
    const double scale = eng.function().magnitude_scale(z.imag());
    if (std::abs(gv) <= tol * scale) return z;
    const Complex gd = eng.derivative().eval(z);
    if (gd == Complex{0.0, 0.0}) break;
    const Complex step = m * gv / gd;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
  }
  throw NewtonStall("Newton refinement did not reach the residual target");
}

struct LocateContext {
  const WindingEngine& eng;
  double tol;
  double floor;  // cells at most this wide hold one (possibly multiple) root
  std::vector<Root> found;
};

// offsets (fractions of the span) tried when picking subdivision cuts
constexpr double kCutOffsets[] = {0.0, 0.013, -0.017, 0.031, -0.037, 0.047};

void locate_rec(LocateContext& ctx, const Rectangle& rect, int count, int depth) {
  if (count == 0) return;
  if (depth > 80) throw NewtonStall("quadrisection recursion exhausted");

  const double span = std::max(rect.width(), rect.height());
  if (count == 1 || span <= ctx.floor) {
    const Complex root = newton_refine(ctx.eng, rect.center(), count, ctx.tol);
    const double slack = 0.35 * span + 10.0 * ctx.tol;
    if (rect.contains(root, slack)) {
      ctx.found.push_back({root, count});
      return;
    }
    if (span <= ctx.floor)
      throw NewtonStall("refined root escaped its isolation cell");
    // escaped: fall through and subdivide further
  }

  for (double off : kCutOffsets) {
    const double xc = rect.x0 + (0.5 + off) * rect.width();
    const double yc = rect.y0 + (0.5 + off) * rect.height();
    if (ctx.eng.line_min_rel({xc, rect.y0}, {xc, rect.y1}) < kCutLineRel) continue;
    if (ctx.eng.line_min_rel({rect.x0, yc}, {rect.x1, yc}) < kCutLineRel) continue;

    const Rectangle cells[4] = {Rectangle(rect.x0, xc, rect.y0, yc),
                                Rectangle(xc, rect.x1, rect.y0, yc),
                                Rectangle(rect.x0, xc, yc, rect.y1),
                                Rectangle(xc, rect.x1, yc, rect.y1)};
    int counts[4];
    bool ok = true;
    int sum = 0;
    for (int i = 0; i < 4 && ok; ++i) {
      const auto n = ctx.eng.try_count(cells[i]);
      if (!n) {
        ok = false;
        break;
      }
      counts[i] = *n;
      sum += *n;
    }
    if (!ok || sum != count) continue;  // cut ran too close to a zero
    for (int i = 0; i < 4; ++i) locate_rec(ctx, cells[i], counts[i], depth + 1);
    return;
  }
  throw BoundaryZero("no zero-free subdivision cut found");
}

std::vector<Root> merge_roots(std::vector<Root> roots, double radius) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real())
      return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  std::vector<Root> merged;
  for (const Root& r : roots) {
    bool absorbed = false;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
      if (r.location.real() - it->location.real() > radius) break;
      if (std::abs(r.location - it->location) <= radius) {
        // multiplicity-weighted average keeps the location stable
        const double wa = it->multiplicity, wb = r.multiplicity;
        it->location = (wa * it->location + wb * r.location) / (wa + wb);
        it->multiplicity += r.multiplicity;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(r);
  }
  return merged;
}

}  // namespace

int count_zeros(const ExponentialSum& g, const Rectangle& rect) {
  return WindingEngine(g).count(rect);
}

RootList locate_zeros(const ExponentialSum& g, const Rectangle& rect, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3))
    throw BadArgument("locate tolerance must lie in (0, 1e-3]");
  const WindingEngine eng(g);
  const int total = eng.count(rect);
  LocateContext ctx{eng, tol, std::max(2.0 * tol, 1e-7), {}};
  locate_rec(ctx, rect, total, 0);

  RootList out;
  out.roots = merge_roots(std::move(ctx.found), 2.0 * tol);
  if (out.total_multiplicity() != total)
    throw NewtonStall("located multiplicities do not add up to the winding count");
  return out;
}

Divisor divisor_of(const MeromorphicAP& f, const Rectangle& rect, double tol) {
  const RootList zeros = locate_zeros(f.numerator(), rect, tol);
  const RootList poles = f.denominator().is_constant()
                             ? RootList{}
                             : locate_zeros(f.denominator(), rect, tol);
  std::vector<DivisorEntry> entries;
  entries.reserve(zeros.roots.size() + poles.roots.size());
  for (const Root& r : zeros.roots) entries.push_back({r.location, r.multiplicity});
  for (const Root& r : poles.roots) entries.push_back({r.location, -r.multiplicity});
  return {std::move(entries), rect, 2.0 * tol};
}

double separation_distance(const Divisor& d, const Strip& strip) {
  double best = kInfinity;
  for (const DivisorEntry& a : d.entries()) {
    if (a.multiplicity <= 0 || !strip.contains(a.point)) continue;
    for (const DivisorEntry& b : d.entries()) {
      if (b.multiplicity >= 0 || !strip.contains(b.point)) continue;
      best = std::min(best, std::abs(a.point - b.point));
    }
  }
  return best;
}

BoundedOffResult bounded_off_poles(const MeromorphicAP& f, const Strip& strip,
                                   const Interval& window, double r,
                                   const GridSpec& grid, double locate_tol) {
  if (!(r > 0.0)) throw BadArgument("exclusion radius must be positive");
  if (!strip.bounded()) throw EmptyGrid("grid scans require a bounded-Im substrip");

  BoundedOffResult res;
  if (!f.denominator().is_constant()) {
    const Rectangle pole_window(window.lo - (r + 1.0), window.hi + (r + 1.0),
                                strip.lower - (r + 1.0), strip.upper + (r + 1.0));
    const RootList poles = locate_zeros(f.denominator(), pole_window, locate_tol);
    for (const Root& p : poles.roots) res.poles.push_back(p.location);
  }

  const GridValues gv = evaluate_grid(f, strip, window, grid);
  const std::size_t nx = gv.xs.size();
  for (std::size_t row = 0; row < gv.ys.size(); ++row) {
    for (std::size_t j = 0; j < nx; ++j) {
      const Complex z{gv.xs[j], gv.ys[row]};
      bool inside_pole_disk = false;
      for (const Complex& p : res.poles) {
        if (std::abs(z - p) < r) {
          inside_pole_disk = true;
          break;
        }
      }
      if (inside_pole_disk) {
        ++res.excluded;
        continue;
      }
      const std::size_t k = row * nx + j;
      if (gv.skip[k]) {
        ++res.skipped;
        continue;
      }
      ++res.kept;
      const SpherePoint& v = gv.values[k];
      res.sup = std::max(res.sup, v.is_infinity() ? kInfinity : std::abs(v.value()));
    }
  }
  if (res.kept == 0) throw EmptyGrid("no grid points remain outside the pole disks");
  return res;
}

UnitRectangleCount count_in_unit_rectangle(const Divisor& d, const Strip& strip,
                                           double t) {
  const Rectangle& w = d.window();
  if (t - 1.0 < w.x0 - 1e-9 || t + 1.0 > w.x1 + 1e-9)
    throw BadArgument("divisor window does not cover the unit rectangle");
  UnitRectangleCount out;
  for (const DivisorEntry& e : d.entries()) {
    if (std::abs(e.point.real() - t) >= 1.0) continue;
    if (!strip.contains(e.point)) continue;
    if (e.multiplicity > 0)
      out.zeros += e.multiplicity;
    else
      out.poles -= e.multiplicity;
  }
  return out;
}

}  // namespace mapstrip
