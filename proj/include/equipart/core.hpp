#pragma once

// Masses, hyperplane arrangements, orthant labels, the signed-permutation
// group W_k = (Z/2)^k x| S_k and the test map whose zeros are equipartitions.
//
// Scalars are either `double` or exact `Rational`; every type is templated
// on the scalar kind so the two never mix inside one evaluation. Interval
// masses on the moment curve are exact only and are rejected by the
// floating-point instantiation.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equipart/rational.hpp"
#include "equipart/rational_poly.hpp"

namespace equipart {

/// Raised when an operation would have to combine float and exact data.
class ScalarKindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on dimension or arity mismatches between arguments.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// alpha in {0,1}^k. Index order is lexicographic in (alpha_1, ..., alpha_k),
/// i.e. alpha_1 is the most significant bit.
class OrthantLabel {
 public:
  explicit OrthantLabel(std::vector<std::uint8_t> bits);
  static OrthantLabel from_index(std::size_t index, std::size_t k);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t index() const;
  std::string to_string() const;

  friend bool operator==(const OrthantLabel&, const OrthantLabel&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// H = {x : <x, normal> = offset}; H^0 is the closed side <x,v> >= a and
/// H^1 the closed side <x,v> <= a.
template <class S>
struct AffineHyperplane {
  std::vector<S> normal;
  S offset{};

  std::size_t dimension() const { return normal.size(); }
  AffineHyperplane negated() const;
  bool has_zero_normal() const;

  friend bool operator==(const AffineHyperplane&, const AffineHyperplane&) = default;
};

/// Unit normal, offset scaled to match. Throws on a zero normal.
AffineHyperplane<double> normalized(const AffineHyperplane<double>& h);
/// Primitive integer vector (normal, offset) whose first nonzero entry is
/// positive. Throws on a zero normal.
AffineHyperplane<Rational> normalized(const AffineHyperplane<Rational>& h);
/// Lossy conversion; there is no conversion back to exact.
AffineHyperplane<double> to_double(const AffineHyperplane<Rational>& h);

/// Ordered tuple of k hyperplanes in a common R^d with 1 <= k <= d.
template <class S>
class Arrangement {
 public:
  explicit Arrangement(std::vector<AffineHyperplane<S>> hyperplanes);

  std::size_t size() const { return hyperplanes_.size(); }
  std::size_t dimension() const { return hyperplanes_.front().dimension(); }
  const AffineHyperplane<S>& operator[](std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<AffineHyperplane<S>>& hyperplanes() const { return hyperplanes_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<AffineHyperplane<S>> hyperplanes_;
};

Arrangement<double> to_double(const Arrangement<Rational>& arr);

/// Weighted point cloud (empirical measure), row-major coordinates.
template <class S>
class PointCloud {
 public:
  PointCloud(std::size_t dimension, std::vector<S> coordinates, std::vector<S> weights);
  /// Equal weights 1/n.
  static PointCloud uniform(std::size_t dimension, std::vector<S> coordinates);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return weights_.size(); }
  const S* point(std::size_t i) const { return coordinates_.data() + i * dimension_; }
  const std::vector<S>& coordinates() const { return coordinates_; }
  const std::vector<S>& weights() const { return weights_; }

 private:
  std::size_t dimension_;
  std::vector<S> coordinates_;
  std::vector<S> weights_;
};

/// Mass uniform in the curve parameter t on a union of disjoint parameter
/// intervals of the moment curve t -> (t, t^2, ..., t^d), normalized to
/// total mass 1. Intervals may not contain 0.
class MomentIntervals {
 public:
  MomentIntervals(std::size_t dimension, std::vector<std::pair<Rational, Rational>> intervals);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::pair<Rational, Rational>>& intervals() const { return intervals_; }
  Rational total_length() const;

 private:
  std::size_t dimension_;
  std::vector<std::pair<Rational, Rational>> intervals_;
};

template <class S>
using Mass = std::variant<PointCloud<S>, MomentIntervals>;

template <class S>
std::size_t dimension_of(const Mass<S>& mass) {
  return std::visit([](const auto& m) { return m.dimension(); }, mass);
}

/// Signed permutation (beta, tau). `permutation[i]` is tau(i), 0-based.
/// Acts on labels by (g.alpha)_i = beta_i + alpha_{tau^-1(i)}.
class GroupElement {
 public:
  GroupElement(std::vector<std::uint8_t> signs, std::vector<std::size_t> permutation);
  static GroupElement identity(std::size_t k);

  std::size_t size() const { return signs_.size(); }
  const std::vector<std::uint8_t>& signs() const { return signs_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  GroupElement inverse() const;
  OrthantLabel act(const OrthantLabel& alpha) const;

  /// (g*h).x == g.(h.x)
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::uint8_t> signs_;
  std::vector<std::size_t> permutation_;
};

/// Per mass, the 2^k values mu(O_alpha) - 2^-k indexed by label index.
template <class S>
struct TestVector {
  std::size_t k = 0;
  std::vector<std::vector<S>> values;

  const S& at(std::size_t mass, const OrthantLabel& label) const { return values[mass][label.index()]; }
  friend bool operator==(const TestVector&, const TestVector&) = default;
};

/// p(t) = <gamma(t), v> - a, the restriction of a hyperplane to the moment
/// curve.
RationalPoly curve_polynomial(const AffineHyperplane<Rational>& h);

template <class S>
S orthant_measure(const Mass<S>& mass, const Arrangement<S>& arr, const OrthantLabel& label);

template <class S>
TestVector<S> eval_test_map(const std::vector<Mass<S>>& masses, const Arrangement<S>& arr);

template <class S>
Arrangement<S> act_on_arrangement(const GroupElement& g, const Arrangement<S>& arr);

template <class S>
TestVector<S> act_on_test_vector(const GroupElement& g, const TestVector<S>& tv);

/// Every test-vector component within eps of zero.
template <class S>
bool is_equipartition(const std::vector<Mass<S>>& masses, const Arrangement<S>& arr, const S& eps);

/// No point of the cloud lies on any hyperplane.
template <class S>
bool in_general_position(const PointCloud<S>& cloud, const Arrangement<S>& arr);

}  // namespace equipart
