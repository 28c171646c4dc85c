#pragma once

// Sparse multivariate polynomials over F_2 in variables u_1..u_k, the top
// Dickson invariant, and the ideal-membership test that certifies upper
// bounds on Delta(j, k). Also the two binomial-coefficient digit rules used
// alongside it (Lucas mod 2, Kummer carries).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <unordered_set>
#include <vector>

namespace equipart {

using Monomial = std::vector<std::uint64_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// The monomial ideal <u_1^{d+1}, ..., u_k^{d+1}>.
struct PowerIdealCap {
  std::uint64_t d = 0;
  bool contains(const Monomial& m) const;
};

/// Polynomial over F_2 stored as the set of monomials with coefficient 1.
class PolyF2 {
 public:
  explicit PolyF2(std::size_t arity);
  PolyF2(std::size_t arity, std::initializer_list<Monomial> monomials);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }
  const std::unordered_set<Monomial, MonomialHash>& terms() const { return terms_; }

  /// Adds m with coefficient 1 (so an existing m cancels).
  void toggle(Monomial m);
  /// Monomials in descending lexicographic order.
  std::vector<Monomial> sorted() const;
  std::uint64_t max_exponent() const;

  friend bool operator==(const PolyF2& a, const PolyF2& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

 private:
  std::size_t arity_;
  std::unordered_set<Monomial, MonomialHash> terms_;
};

/// Drops every monomial lying in the cap ideal.
PolyF2 reduce(const PolyF2& p, const PowerIdealCap& cap);

/// Product of all 2^k - 1 nonzero linear forms, expanded directly.
/// Requires 1 <= k <= 6.
PolyF2 dickson_top(std::size_t k);
/// Sum over permutations pi of u_{pi(1)}^{2^{k-1}} ... u_{pi(k)}^{1}.
PolyF2 dickson_permutation_sum(std::size_t k);

PolyF2 poly_mul(const PolyF2& a, const PolyF2& b, std::optional<PowerIdealCap> cap = std::nullopt);
PolyF2 poly_pow(const PolyF2& p, std::uint64_t j, std::optional<PowerIdealCap> cap = std::nullopt);

struct IndexCertificate {
  std::uint64_t j = 0;
  std::size_t k = 0;
  std::uint64_t d_star = 0;
  Monomial witness;
};

/// Smallest d with p^j outside <u_i^{d+1}> for p = dickson_top(k), with the
/// lexicographically smallest monomial attaining it. Every d >= d_star then
/// satisfies Delta(j, k) <= d. Requires 1 <= k <= 4 and j (2^k - 1) <= 10^4.
IndexCertificate certify_upper_bound(std::uint64_t j, std::size_t k);

/// C(n, m) mod 2 by Lucas' digit rule. Requires m <= n.
int binom_mod2(std::uint64_t n, std::uint64_t m);

/// Number of carries when adding m and n - m in base p, which is the p-adic
/// valuation of C(n, m). Requires m <= n and p prime.
unsigned kummer_carries(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// Terms beyond this count abort a product with std::length_error.
inline constexpr std::size_t kMaxPolyTerms = 20'000'000;

}  // namespace equipart
