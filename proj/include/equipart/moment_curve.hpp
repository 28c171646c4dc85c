#pragma once

// Exact geometry on the moment curve gamma(t) = (t, t^2, ..., t^d): hyperplanes
// through prescribed curve points, the standard configuration of j interval
// masses with 2d = 3j + 1, its equipartitions by two hyperplanes, and the
// degree/valuation test that decides Delta(j, 2) = d.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equipart/core.hpp"
#include "equipart/rational.hpp"

namespace equipart {

/// The hyperplane meeting the curve exactly at the given parameters:
/// prod (t - t_i) = t^d + c_{d-1} t^{d-1} + ... + c_0 gives normal
/// (c_1, ..., c_{d-1}, 1) and offset -c_0. Requires d = roots.size() distinct
/// roots.
AffineHyperplane<Rational> hyperplane_through(const std::vector<Rational>& roots, std::size_t d);

/// j unit intervals [i, i+1], i = 1..j, each carrying one mass, in
/// dimension d = (3j + 1) / 2. j must be odd.
class StandardConfiguration {
 public:
  explicit StandardConfiguration(int j);

  int j() const { return j_; }
  std::size_t dimension() const { return d_; }
  std::vector<std::pair<Rational, Rational>> intervals() const;
  std::vector<Mass<Rational>> masses() const;

 private:
  int j_;
  std::size_t d_;
};

/// 4 x j table: row = orthant label index (00, 01, 10, 11), column = mass.
using OrthantTable = std::vector<std::vector<Rational>>;

struct EquipartitionCertificate {
  int j = 0;
  std::size_t d = 0;
  std::vector<int> subset;  ///< masses cut once by the first hyperplane (1-based)
  std::vector<Rational> roots1;
  std::vector<Rational> roots2;
  AffineHyperplane<Rational> h1;
  AffineHyperplane<Rational> h2;
  OrthantTable orthants;

  Arrangement<Rational> arrangement() const { return Arrangement<Rational>({h1, h2}); }
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All C(j, (j-1)/2) equipartitions of the standard configuration with the
/// second hyperplane through the origin, one per subset S in lexicographic
/// order, each exactly verified. Requires j odd, 1 <= j <= 9.
std::vector<EquipartitionCertificate> enumerate_standard(int j);

/// Exact orthant masses of the certificate hyperplanes, one column per
/// interval mass. Throws std::domain_error on an irrational crossing.
OrthantTable compute_orthant_table(const EquipartitionCertificate& cert,
                                   const std::vector<std::pair<Rational, Rational>>& intervals);

/// Exact orthant table of the certificate hyperplanes against the given
/// interval masses (one interval per mass). Throws CertificateError naming
/// the first orthant that differs from 1/4, a hyperplane meeting the curve
/// in other than d distinct points, or a multiple crossing.
OrthantTable verify_certificate(const EquipartitionCertificate& cert,
                                const std::vector<std::pair<Rational, Rational>>& intervals);
OrthantTable verify_certificate(const EquipartitionCertificate& cert, const StandardConfiguration& config);

/// |deg| of the restricted test map: 2 C(j, (j-1)/2) for even d, 0 for odd d.
BigInt degree_magnitude(int j);

struct RamosTwoDecision {
  int j = 0;
  std::int64_t d = 0;
  std::optional<std::int64_t> certified;
  std::vector<std::string> reasons;  ///< failing conditions, empty if certified
  unsigned degree_valuation = 0;     ///< 2-adic valuation of the degree (when d even)
};

/// Checks the degree criterion for k = 2 and d = (3j + 1) / 2; certifies
/// Delta(j, 2) = d when it applies.
RamosTwoDecision decide_ramos_two(int j);

}  // namespace equipart
