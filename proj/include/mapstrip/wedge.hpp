#pragma once

// Exact model of R ∧_Z R over a declared Q-linearly-independent exponent
// basis. Everything here is arbitrary-precision rational arithmetic;
// floats never enter class decisions.

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapstrip/errors.hpp"

namespace mapstrip {

using Rational = boost::multiprecision::cpp_rational;

/// Declared basis of reals, Q-linear independence is an axiom of the
/// session (recorded in reports, not verified). The first element is
/// always the constant 1.
class ExponentBasis {
 public:
  /// `elements` are (name, decimal approximation) pairs; an initial
  /// ("1", 1) element is prepended when absent.
  explicit ExponentBasis(std::vector<std::pair<std::string, double>> elements);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  double value(std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const ExponentBasis& o) const {
    return names_ == o.names_ && values_ == o.values_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

using BasisPtr = std::shared_ptr<const ExponentBasis>;

/// Exact element of the Q-span of the basis.
class RationalVector {
 public:
  RationalVector(BasisPtr basis, std::vector<Rational> coefficients);

  /// Parse forms like "2", "-3/2", "sqrt2", "3/2*sqrt2", "1+sqrt2",
  /// "sqrt2/2" against the basis names. Throws ParseError / BasisMismatch.
  static RationalVector parse(const std::string& text, const BasisPtr& basis);
  static RationalVector zero(const BasisPtr& basis);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  /// Floating approximation through the declared basis values.
  double approx() const;
  std::string to_string() const;

  friend RationalVector operator+(const RationalVector& a, const RationalVector& b);
  friend RationalVector operator-(const RationalVector& a, const RationalVector& b);
  friend RationalVector operator*(const Rational& q, const RationalVector& a);

 private:
  BasisPtr basis_;
  std::vector<Rational> coeffs_;
};

/// Element of R ∧_Z R with exact rational coefficients over basis pairs
/// (strictly upper-triangular storage).
class WedgeElement {
 public:
  explicit WedgeElement(BasisPtr basis);  // zero element

  static WedgeElement wedge(const RationalVector& x, const RationalVector& y);

  const BasisPtr& basis() const { return basis_; }
  bool is_zero() const;
  WedgeElement negate() const;
  friend WedgeElement operator+(const WedgeElement& a, const WedgeElement& b);
  bool operator==(const WedgeElement& o) const;

  /// Coefficient of b_i ∧ b_j, i < j.
  const Rational& coefficient(std::size_t i, std::size_t j) const;

  /// Formal sum "w_ij*(b_i^b_j) + ...", "0" when zero.
  std::string to_string() const;

 private:
  BasisPtr basis_;
  std::vector<Rational> upper_;  // packed i<j

  std::size_t pack(std::size_t i, std::size_t j) const;
};

void require_same_basis(const BasisPtr& a, const BasisPtr& b);

/// Wedge class lambda ∧ mu of the unit lattice with generator
/// (lambda + i*mu)^{-1}; zero exactly when lambda/mu is rational.
inline WedgeElement lattice_class(const RationalVector& lambda,
                                  const RationalVector& mu) {
  return WedgeElement::wedge(lambda, mu);
}

/// A divisor component whose wedge class is computable: either a lattice
/// with exact generators, or the zero set of an explicit exponential sum
/// (class 0, being the divisor of an analytic function of that kind).
struct DivisorClassSpec {
  enum class Kind { lattice, exponential_sum_zeros };

  Kind kind;
  std::optional<std::pair<RationalVector, RationalVector>> generators;
  std::string description;

  static DivisorClassSpec lattice(RationalVector lambda, RationalVector mu);
  static DivisorClassSpec exponential_sum(std::string expression);
};

/// Sum of the component classes. Throws UnclassifiableComponent for a
/// lattice component without generators.
WedgeElement divisor_class(const std::vector<DivisorClassSpec>& components,
                           const BasisPtr& basis);

/// Measured zero/pole geometry, produced elsewhere (separation scan).
struct GeometryReport {
  double min_separation;
  double threshold;
};

struct RealizabilityVerdict {
  bool separated;
  double min_separation;
  double threshold;
  bool ap_by_construction;  // components are lattices / explicit zero sets
  WedgeElement class_plus;
  WedgeElement class_minus;
  bool class_equal;
  bool realizable;  // separated && ap && class_equal
};

/// Three-condition verdict: separation from the geometry report, almost
/// periodicity by construction of the components, and exact equality of
/// the wedge classes.
RealizabilityVerdict realizability_check(const std::vector<DivisorClassSpec>& dplus,
                                         const std::vector<DivisorClassSpec>& dminus,
                                         const GeometryReport& geometry,
                                         const BasisPtr& basis);

}  // namespace mapstrip
