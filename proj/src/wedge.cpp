#include "mapstrip/wedge.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mapstrip {

ExponentBasis::ExponentBasis(std::vector<std::pair<std::string, double>> elements) {
  if (elements.empty() || elements.front().first != "1")
    elements.insert(elements.begin(), {"1", 1.0});
  if (elements.front().second != 1.0)
    throw BadArgument("basis element '1' must have value 1");
  for (const auto& [name, value] : elements) {
    if (name.empty()) throw BadArgument("basis names must be nonempty");
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
      throw BadArgument("duplicate basis name " + name);
    names_.push_back(name);
    values_.push_back(value);
  }
}

std::optional<std::size_t> ExponentBasis::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b))
    throw BasisMismatch("operands use different exponent bases");
}

RationalVector::RationalVector(BasisPtr basis, std::vector<Rational> coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (!basis_) throw BadArgument("null basis");
  if (coeffs_.size() != basis_->size())
    throw BasisMismatch("coefficient count does not match basis size");
}

RationalVector RationalVector::zero(const BasisPtr& basis) {
  return {basis, std::vector<Rational>(basis->size(), Rational(0))};
}

bool RationalVector::is_zero() const {
  for (const Rational& q : coeffs_)
    if (q != 0) return false;
  return true;
}

double RationalVector::approx() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    acc += static_cast<double>(coeffs_[i]) * basis_->value(i);
  return acc;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_basis(a.basis_, b.basis_);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return {a.basis_, std::move(out)};
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_basis(a.basis_, b.basis_);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
  return {a.basis_, std::move(out)};
}

RationalVector operator*(const Rational& q, const RationalVector& a) {
  std::vector<Rational> out = a.coeffs_;
  for (Rational& c : out) c *= q;
  return {a.basis_, std::move(out)};
}

namespace {

// rational := integer ('/' integer)?
Rational parse_rational(const std::string& text, std::size_t& pos) {
  const auto parse_int = [&]() -> Rational {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("malformed rational in '" + text + "'");
    return Rational(boost::multiprecision::cpp_int(text.substr(start, pos - start)));
  };
  Rational num = parse_int();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    Rational den = parse_int();
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    num /= den;
  }
  return num;
}

std::string parse_name_token(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
    ++pos;
  return text.substr(start, pos - start);
}

void skip_spaces(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

RationalVector RationalVector::parse(const std::string& text, const BasisPtr& basis) {
  std::vector<Rational> coeffs(basis->size(), Rational(0));
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError("empty basis expression");

  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_spaces(text, pos);
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    skip_spaces(text, pos);

    Rational coef(1);
    std::size_t index = 0;  // constant term by default
    bool have_coef = false;

    if (pos < text.size() &&
        (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
         text[pos] == '+')) {
      coef = parse_rational(text, pos);
      have_coef = true;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_spaces(text, pos);
      }
    }
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      const std::string name = parse_name_token(text, pos);
      const auto idx = basis->index_of(name);
      if (!idx)
        throw BasisMismatch("name '" + name + "' is not in the declared basis");
      index = *idx;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_spaces(text, pos);
        Rational den = parse_rational(text, pos);
        if (den == 0) throw ParseError("zero denominator");
        coef /= den;
      }
    } else if (!have_coef) {
      throw ParseError("expected coefficient or basis name in '" + text + "'");
    }
    coeffs[index] += sign * coef;
    skip_spaces(text, pos);
  }
  return {basis, std::move(coeffs)};
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (any) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    const Rational mag = boost::multiprecision::abs(coeffs_[i]);
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << basis_->name(i);
    }
    any = true;
  }
  return any ? os.str() : "0";
}

WedgeElement::WedgeElement(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw BadArgument("null basis");
  const std::size_t n = basis_->size();
  upper_.assign(n * (n - 1) / 2, Rational(0));
}

std::size_t WedgeElement::pack(std::size_t i, std::size_t j) const {
  const std::size_t n = basis_->size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

WedgeElement WedgeElement::wedge(const RationalVector& x, const RationalVector& y) {
  require_same_basis(x.basis(), y.basis());
  WedgeElement w(x.basis());
  const std::size_t n = x.basis()->size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      w.upper_[w.pack(i, j)] =
          x.coefficients()[i] * y.coefficients()[j] -
          x.coefficients()[j] * y.coefficients()[i];
  return w;
}

bool WedgeElement::is_zero() const {
  for (const Rational& q : upper_)
    if (q != 0) return false;
  return true;
}

WedgeElement WedgeElement::negate() const {
  WedgeElement w(basis_);
  for (std::size_t k = 0; k < upper_.size(); ++k) w.upper_[k] = -upper_[k];
  return w;
}

WedgeElement operator+(const WedgeElement& a, const WedgeElement& b) {
  require_same_basis(a.basis_, b.basis_);
  WedgeElement w(a.basis_);
  for (std::size_t k = 0; k < w.upper_.size(); ++k)
    w.upper_[k] = a.upper_[k] + b.upper_[k];
  return w;
}

bool WedgeElement::operator==(const WedgeElement& o) const {
  require_same_basis(basis_, o.basis_);
  return upper_ == o.upper_;
}

const Rational& WedgeElement::coefficient(std::size_t i, std::size_t j) const {
  if (!(i < j && j < basis_->size()))
    throw BadArgument("wedge coefficient indices must satisfy i < j < size");
  return upper_[pack(i, j)];
}

std::string WedgeElement::to_string() const {
  std::ostringstream os;
  bool any = false;
  const std::size_t n = basis_->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& q = upper_[pack(i, j)];
      if (q == 0) continue;
      if (any) os << (q > 0 ? " + " : " - ");
      else if (q < 0) os << "-";
      const Rational mag = boost::multiprecision::abs(q);
      if (mag != 1) os << mag << "*";
      os << "(" << basis_->name(i) << "^" << basis_->name(j) << ")";
      any = true;
    }
  }
  return any ? os.str() : "0";
}

DivisorClassSpec DivisorClassSpec::lattice(RationalVector lambda, RationalVector mu) {
  require_same_basis(lambda.basis(), mu.basis());
  return {Kind::lattice, std::pair{std::move(lambda), std::move(mu)}, {}};
}

DivisorClassSpec DivisorClassSpec::exponential_sum(std::string expression) {
  return {Kind::exponential_sum_zeros, std::nullopt, std::move(expression)};
}

WedgeElement divisor_class(const std::vector<DivisorClassSpec>& components,
                           const BasisPtr& basis) {
  WedgeElement acc(basis);
  for (const DivisorClassSpec& c : components) {
    switch (c.kind) {
      case DivisorClassSpec::Kind::lattice: {
        if (!c.generators)
          throw UnclassifiableComponent("lattice component has no generators");
        require_same_basis(c.generators->first.basis(), basis);
        acc = acc + lattice_class(c.generators->first, c.generators->second);
        break;
      }
      case DivisorClassSpec::Kind::exponential_sum_zeros:
        break;  // divisor of an analytic function of this class: class 0
      default:
        throw UnclassifiableComponent("component carries no class-bearing spec");
    }
  }
  return acc;
}

RealizabilityVerdict realizability_check(const std::vector<DivisorClassSpec>& dplus,
                                         const std::vector<DivisorClassSpec>& dminus,
                                         const GeometryReport& geometry,
                                         const BasisPtr& basis) {
  RealizabilityVerdict v{false,
                         geometry.min_separation,
                         geometry.threshold,
                         true,
                         divisor_class(dplus, basis),
                         divisor_class(dminus, basis),
                         false,
                         false};
  v.separated = geometry.min_separation >= geometry.threshold;
  v.class_equal = (v.class_plus + v.class_minus.negate()).is_zero();
  v.realizable = v.separated && v.ap_by_construction && v.class_equal;
  return v;
}

}  // namespace mapstrip
