#include "equipart/f2poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace equipart {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto e : m) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

bool PowerIdealCap::contains(const Monomial& m) const {
  return std::any_of(m.begin(), m.end(), [this](std::uint64_t e) { return e > d; });
}

PolyF2::PolyF2(std::size_t arity) : arity_(arity) {
  if (arity_ == 0) throw std::invalid_argument("PolyF2: arity must be positive");
}

PolyF2::PolyF2(std::size_t arity, std::initializer_list<Monomial> monomials) : PolyF2(arity) {
  for (const auto& m : monomials) toggle(m);
}

void PolyF2::toggle(Monomial m) {
  if (m.size() != arity_) throw std::invalid_argument("PolyF2: monomial arity mismatch");
  auto [it, inserted] = terms_.insert(std::move(m));
  if (!inserted) terms_.erase(it);
}

std::vector<Monomial> PolyF2::sorted() const {
  std::vector<Monomial> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t PolyF2::max_exponent() const {
  std::uint64_t m = 0;
  for (const auto& t : terms_)
    for (auto e : t) m = std::max(m, e);
  return m;
}

PolyF2 reduce(const PolyF2& p, const PowerIdealCap& cap) {
  PolyF2 out(p.arity());
  for (const auto& t : p.terms())
    if (!cap.contains(t)) out.toggle(t);
  return out;
}

namespace {

void check_k(std::size_t k, std::size_t max_k, const char* what) {
  if (k < 1 || k > max_k)
    throw std::invalid_argument(std::string(what) + ": k must be in [1, " + std::to_string(max_k) + "]");
}

// Frobenius: p^2 maps each monomial to its exponent-doubled monomial.
PolyF2 square(const PolyF2& p, const std::optional<PowerIdealCap>& cap) {
  PolyF2 out(p.arity());
  for (const auto& t : p.terms()) {
    Monomial m = t;
    for (auto& e : m) e *= 2;
    if (!cap || !cap->contains(m)) out.toggle(std::move(m));
  }
  return out;
}

}  // namespace

PolyF2 dickson_top(std::size_t k) {
  check_k(k, 6, "dickson_top");
  PolyF2 acc(k, {Monomial(k, 0)});
  for (std::size_t alpha = 1; alpha < (std::size_t{1} << k); ++alpha) {
    PolyF2 form(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (alpha >> i & 1) {
        Monomial m(k, 0);
        m[i] = 1;
        form.toggle(std::move(m));
      }
    }
    acc = poly_mul(acc, form);
  }
  return acc;
}

PolyF2 dickson_permutation_sum(std::size_t k) {
  check_k(k, 6, "dickson_permutation_sum");
  std::vector<std::size_t> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  PolyF2 out(k);
  do {
    Monomial m(k, 0);
    for (std::size_t pos = 0; pos < k; ++pos) m[pi[pos]] = std::uint64_t{1} << (k - 1 - pos);
    out.toggle(std::move(m));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

PolyF2 poly_mul(const PolyF2& a, const PolyF2& b, std::optional<PowerIdealCap> cap) {
  if (a.arity() != b.arity()) throw std::invalid_argument("poly_mul: arity mismatch");
  if (a.size() > 0 && b.size() > 0 &&
      (a.max_exponent() > (std::uint64_t{1} << 62) || b.max_exponent() > (std::uint64_t{1} << 62)))
    throw std::overflow_error("poly_mul: exponent overflow");
  PolyF2 out(a.arity());
  Monomial m(a.arity());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = x[i] + y[i];
      if (cap && cap->contains(m)) continue;
      out.toggle(m);
    }
    if (out.size() > kMaxPolyTerms) throw std::length_error("poly_mul: term budget exceeded");
  }
  return out;
}

PolyF2 poly_pow(const PolyF2& p, std::uint64_t j, std::optional<PowerIdealCap> cap) {
  if (j == 0) throw std::invalid_argument("poly_pow: exponent must be positive");
  const std::uint64_t top = p.max_exponent();
  if (top > 0 && j > ((std::uint64_t{1} << 63) - 1) / top) throw std::overflow_error("poly_pow: exponent overflow");

  PolyF2 base = cap ? reduce(p, *cap) : p;
  std::optional<PolyF2> acc;
  while (true) {
    if (j & 1) acc = acc ? poly_mul(*acc, base, cap) : base;
    j >>= 1;
    if (j == 0) break;
    base = square(base, cap);
  }
  return *acc;
}

IndexCertificate certify_upper_bound(std::uint64_t j, std::size_t k) {
  check_k(k, 4, "certify_upper_bound");
  if (j < 1 || j * ((std::uint64_t{1} << k) - 1) > 10'000)
    throw std::invalid_argument("certify_upper_bound: need j >= 1 and j (2^k - 1) <= 10000");
  const PolyF2 pj = poly_pow(dickson_top(k), j);

  IndexCertificate cert{j, k, 0, {}};
  bool first = true;
  for (const auto& t : pj.terms()) {
    const std::uint64_t m = *std::max_element(t.begin(), t.end());
    if (first || m < cert.d_star || (m == cert.d_star && t < cert.witness)) {
      cert.d_star = m;
      cert.witness = t;
      first = false;
    }
  }
  if (first) throw std::logic_error("certify_upper_bound: p^j vanished");
  return cert;
}

int binom_mod2(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw std::invalid_argument("binom_mod2: m > n");
  return (m & n) == m ? 1 : 0;
}

unsigned kummer_carries(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (m > n) throw std::invalid_argument("kummer_carries: m > n");
  if (p < 2) throw std::invalid_argument("kummer_carries: p must be prime");
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("kummer_carries: p must be prime");
  std::uint64_t a = m, b = n - m, carry = 0;
  unsigned carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

}  // namespace equipart
