#include "mapstrip/core.hpp"

#include <algorithm>
#include <cmath>

namespace mapstrip {

namespace {

constexpr double kZeroRel = 1e-13;    // relative vanishing threshold for eval
constexpr int kMaxCancelOrder = 8;    // L'Hopital depth for common zeros
constexpr double kFreqMergeRel = 1e-12;

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_argument: return "BadArgument";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::outside_domain: return "OutsideDomain";
    case ErrorCode::indeterminate_point: return "IndeterminatePoint";
    case ErrorCode::empty_grid: return "EmptyGrid";
    case ErrorCode::boundary_zero: return "BoundaryZero";
    case ErrorCode::non_integer_winding: return "NonIntegerWinding";
    case ErrorCode::newton_stall: return "NewtonStall";
    case ErrorCode::disjoint_windows: return "DisjointWindows";
    case ErrorCode::window_overrun: return "WindowOverrun";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::non_monotone: return "NonMonotone";
    case ErrorCode::window_too_small: return "WindowTooSmall";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::unclassifiable_component: return "UnclassifiableComponent";
    case ErrorCode::assertion_failed: return "AssertionFailed";
    case ErrorCode::io: return "IoError";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

double spherical_distance(const SpherePoint& p, const SpherePoint& q) {
  if (p.is_infinity() && q.is_infinity()) return 0.0;
  if (p.is_infinity()) return 1.0 / std::hypot(1.0, std::abs(q.value()));
  if (q.is_infinity()) return 1.0 / std::hypot(1.0, std::abs(p.value()));
  const double d = std::abs(p.value() - q.value());
  if (d == 0.0) return 0.0;
  // two divisions: the denominator product may overflow for huge inputs
  return (d / std::hypot(1.0, std::abs(p.value()))) /
         std::hypot(1.0, std::abs(q.value()));
}

ExponentialSum::ExponentialSum(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.frequency < b.frequency; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty()) {
      const double f0 = merged.back().frequency;
      const double tol = kFreqMergeRel * std::max({1.0, std::abs(f0), std::abs(t.frequency)});
      if (std::abs(t.frequency - f0) <= tol) {
        merged.back().coefficient += t.coefficient;
        continue;
      }
    }
    merged.push_back(t);
  }
  double total = 0.0;
  for (const Term& t : merged) total += std::abs(t.coefficient);
  // drop coefficients at rounding-noise level so cancellations stay exact
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * total;
  terms_.clear();
  for (const Term& t : merged)
    if (std::abs(t.coefficient) > floor) terms_.push_back(t);
}

ExponentialSum ExponentialSum::constant(Complex c) {
  return ExponentialSum({{0.0, c}});
}

ExponentialSum ExponentialSum::harmonic(double lambda, Complex c) {
  return ExponentialSum({{lambda, c}});
}

ExponentialSum ExponentialSum::sine(double a, Complex b) {
  const Complex i{0.0, 1.0};
  return ExponentialSum({{a, std::exp(i * b) * Complex{0.0, -0.5}},
                         {-a, std::exp(-i * b) * Complex{0.0, 0.5}}});
}

ExponentialSum ExponentialSum::cosine(double a, Complex b) {
  const Complex i{0.0, 1.0};
  return ExponentialSum({{a, std::exp(i * b) * 0.5},
                         {-a, std::exp(-i * b) * 0.5}});
}

bool ExponentialSum::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].frequency == 0.0);
}

Complex ExponentialSum::eval(Complex z) const {
  Complex acc{0.0, 0.0};
  for (const Term& t : terms_) {
    const double mag = std::exp(-t.frequency * z.imag());
    acc += t.coefficient * (mag * unit_phase(t.frequency * z.real()));
  }
  return acc;
}

double ExponentialSum::magnitude_scale(double im) const {
  double acc = 0.0;
  for (const Term& t : terms_)
    acc += std::abs(t.coefficient) * std::exp(-t.frequency * im);
  return acc;
}

double ExponentialSum::max_frequency() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.frequency));
  return m;
}

ExponentialSum ExponentialSum::derivative() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.frequency == 0.0) continue;
    out.push_back({t.frequency, Complex{0.0, t.frequency} * t.coefficient});
  }
  return ExponentialSum(std::move(out));
}

ExponentialSum ExponentialSum::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient = -t.coefficient;
  return ExponentialSum(std::move(out));
}

ExponentialSum operator+(const ExponentialSum& a, const ExponentialSum& b) {
  std::vector<Term> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return ExponentialSum(std::move(out));
}

ExponentialSum operator-(const ExponentialSum& a, const ExponentialSum& b) {
  return a + (-b);
}

ExponentialSum operator*(const ExponentialSum& a, const ExponentialSum& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_)
    for (const Term& tb : b.terms_)
      out.push_back({ta.frequency + tb.frequency, ta.coefficient * tb.coefficient});
  return ExponentialSum(std::move(out));
}

ExponentialSum operator*(Complex s, const ExponentialSum& a) {
  std::vector<Term> out = a.terms_;
  for (Term& t : out) t.coefficient *= s;
  return ExponentialSum(std::move(out));
}

void ExponentialSum::eval_row(double x0, double dx, std::size_t count, double y,
                              std::vector<Complex>& out) const {
  out.assign(count, Complex{0.0, 0.0});
  for (const Term& t : terms_) {
    const Complex amp = t.coefficient * std::exp(-t.frequency * y);
    const Complex rot = unit_phase(t.frequency * dx);
    Complex v = amp * unit_phase(t.frequency * x0);
    for (std::size_t j = 0; j < count; ++j) {
      out[j] += v;
      v *= rot;
      if ((j & 1023u) == 1023u)  // re-anchor against rotor drift
        v = amp * unit_phase(t.frequency * (x0 + static_cast<double>(j + 1) * dx));
    }
  }
}

MeromorphicAP::MeromorphicAP(ExponentialSum numerator, ExponentialSum denominator,
                             Strip domain)
    : num_(std::move(numerator)), den_(std::move(denominator)), domain_(domain) {
  if (den_.is_zero())
    throw BadArgument("denominator must not be the zero function");
}

SpherePoint MeromorphicAP::eval(Complex z) const {
  if (!domain_.contains(z)) throw OutsideDomain("point lies outside the strip");
  if (num_.is_zero()) return Complex{0.0, 0.0};

  ExponentialSum n = num_;
  ExponentialSum d = den_;
  for (int order = 0; order <= kMaxCancelOrder; ++order) {
    const Complex nv = n.eval(z);
    const Complex dv = d.eval(z);
    const double ns = n.magnitude_scale(z.imag());
    const double ds = d.magnitude_scale(z.imag());
    const bool n_vanishes = (ns == 0.0) || std::abs(nv) <= kZeroRel * ns;
    const bool d_vanishes = (ds == 0.0) || std::abs(dv) <= kZeroRel * ds;
    if (!d_vanishes) return SpherePoint(nv / dv);
    if (!n_vanishes) return SpherePoint::infinity();
    n = n.derivative();
    d = d.derivative();
  }
  throw IndeterminatePoint("common zero of order beyond cancellation depth");
}

double MeromorphicAP::abs_at(Complex z) const {
  const SpherePoint p = eval(z);
  return p.is_infinity() ? kInfinity : std::abs(p.value());
}

MeromorphicAP MeromorphicAP::reciprocal() const {
  if (num_.is_zero()) throw BadArgument("reciprocal of the zero function");
  return {den_, num_, domain_};
}

namespace {
Strip intersect_domains(const Strip& a, const Strip& b) {
  const double lo = std::max(a.lower, b.lower);
  const double hi = std::min(a.upper, b.upper);
  if (!(lo < hi)) throw BadArgument("function domains do not overlap");
  return {lo, hi};
}
}  // namespace

MeromorphicAP MeromorphicAP::product(const MeromorphicAP& f, const MeromorphicAP& g) {
  return {f.num_ * g.num_, f.den_ * g.den_, intersect_domains(f.domain_, g.domain_)};
}

MeromorphicAP MeromorphicAP::sum(const MeromorphicAP& f, const MeromorphicAP& g) {
  return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_,
          intersect_domains(f.domain_, g.domain_)};
}

namespace {

std::vector<double> axis_samples(double lo, double hi, double step) {
  std::vector<double> out;
  const double span = hi - lo;
  if (span < -1e-12) return out;
  const auto n = static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace

GridValues evaluate_grid(const MeromorphicAP& f, const Strip& strip,
                         const Interval& window, const GridSpec& grid) {
  if (!strip.bounded())
    throw EmptyGrid("grid scans require a bounded-Im substrip");
  if (!f.domain().contains_compactly(strip))
    throw OutsideDomain("scan strip is not compactly contained in the domain");

  GridValues gv;
  gv.ys = axis_samples(strip.lower + grid.margin, strip.upper - grid.margin, grid.im_step);
  gv.xs = axis_samples(window.lo, window.hi, grid.re_step);
  if (gv.xs.empty() || gv.ys.empty()) throw EmptyGrid("no grid points in scan region");

  const std::size_t nx = gv.xs.size();
  gv.values.reserve(nx * gv.ys.size());
  gv.skip.assign(nx * gv.ys.size(), 0);

  std::vector<Complex> nrow, drow;
  for (std::size_t r = 0; r < gv.ys.size(); ++r) {
    const double y = gv.ys[r];
    f.numerator().eval_row(window.lo, grid.re_step, nx, y, nrow);
    f.denominator().eval_row(window.lo, grid.re_step, nx, y, drow);
    const double ns = f.numerator().magnitude_scale(y);
    const double ds = f.denominator().magnitude_scale(y);
    for (std::size_t j = 0; j < nx; ++j) {
      const bool n_vanishes = (ns == 0.0) || std::abs(nrow[j]) <= kZeroRel * ns;
      const bool d_vanishes = std::abs(drow[j]) <= kZeroRel * ds;
      if (!d_vanishes) {
        gv.values.emplace_back(nrow[j] / drow[j]);
      } else if (!n_vanishes) {
        gv.values.push_back(SpherePoint::infinity());
      } else {
        // common zero: fall back to the cancellation path
        try {
          gv.values.push_back(f.eval({gv.xs[j], y}));
        } catch (const IndeterminatePoint&) {
          gv.values.push_back(SpherePoint{Complex{0.0, 0.0}});
          gv.skip[r * nx + j] = 1;
          ++gv.skipped;
        }
      }
    }
  }
  return gv;
}

SupResult sup_spherical_diff(const MeromorphicAP& f, const MeromorphicAP& g,
                             const Strip& strip, const Interval& window,
                             const GridSpec& grid) {
  const GridValues a = evaluate_grid(f, strip, window, grid);
  const GridValues b = evaluate_grid(g, strip, window, grid);
  SupResult res;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.skip[k] || b.skip[k]) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, spherical_distance(a.values[k], b.values[k]));
  }
  if (res.skipped == static_cast<long>(a.values.size()))
    throw EmptyGrid("every grid point was indeterminate");
  return res;
}

SupResult sup_translate_diff(const MeromorphicAP& f, double tau, const Strip& strip,
                             const Interval& window, const GridSpec& grid) {
  const GridValues a = evaluate_grid(f, strip, window, grid);
  const GridValues b =
      evaluate_grid(f, strip, Interval(window.lo + tau, window.hi + tau), grid);
  SupResult res;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.skip[k] || b.skip[k]) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, spherical_distance(a.values[k], b.values[k]));
  }
  if (res.skipped == static_cast<long>(a.values.size()))
    throw EmptyGrid("every grid point was indeterminate");
  return res;
}

SupResult modulus_of_continuity(const MeromorphicAP& f, const Strip& strip,
                                const Interval& window, double delta,
                                const GridSpec& grid) {
  if (!(delta > 0.0)) throw BadArgument("delta must be positive");
  const GridValues base = evaluate_grid(f, strip, window, grid);

  const double h = 0.999 * delta;
  const double hd = h / std::sqrt(2.0);
  const Complex offsets[] = {{h, 0.0}, {0.0, h}, {hd, hd}, {-hd, hd}};

  SupResult res;
  const std::size_t nx = base.xs.size();
  for (std::size_t r = 0; r < base.ys.size(); ++r) {
    for (std::size_t j = 0; j < nx; ++j) {
      const std::size_t k = r * nx + j;
      if (base.skip[k]) {
        ++res.skipped;
        continue;
      }
      const Complex z{base.xs[j], base.ys[r]};
      for (const Complex& off : offsets) {
        const Complex zp = z + off;
        if (!strip.contains(zp)) continue;
        if (zp.real() < window.lo || zp.real() > window.hi) continue;
        try {
          res.value = std::max(res.value,
                               spherical_distance(base.values[k], f.eval(zp)));
        } catch (const IndeterminatePoint&) {
          ++res.skipped;
        }
      }
    }
  }
  return res;
}

}  // namespace mapstrip
