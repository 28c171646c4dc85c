#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "equipart/rational.hpp"

namespace equipart {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  /// prod (t - r) over the given roots.
  static RationalPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
  /// Monic gcd (zero if both inputs are zero).
  static RationalPoly gcd(RationalPoly a, RationalPoly b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Square-free factors f_1, f_2, ... with p = c * prod f_i^i (Yun). Entry i-1
/// holds f_i; trivial factors are constant 1.
std::vector<RationalPoly> square_free_factorization(const RationalPoly& p);

struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;  ///< set iff the root is rational
  int multiplicity = 1;
};

struct RootIsolation {
  std::vector<RootInterval> roots;  ///< distinct roots in ascending order
  int count_with_multiplicity = 0;
};

/// Isolates every real root of p in the closed interval [a, b] by Descartes
/// bisection on the square-free factors. Rational roots are reported exactly;
/// irrational ones as disjoint isolating intervals of width < 2^-40.
/// Throws std::invalid_argument for the zero polynomial or a > b.
RootIsolation real_roots_in_interval(const RationalPoly& p, const Rational& a, const Rational& b);

/// Cauchy bound: every real root lies in [-B, B].
Rational root_bound(const RationalPoly& p);

}  // namespace equipart
