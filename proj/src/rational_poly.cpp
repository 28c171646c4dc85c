#include "equipart/rational_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace equipart {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int RationalPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  const Rational lc = leading();
  for (auto& x : c) x /= lc;
  return RationalPoly(std::move(c));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int k = 0; k <= db; ++k) rem[i - db + k] -= f * b.coeffs_[k];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<RationalPoly> square_free_factorization(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_factorization: zero polynomial");
  std::vector<RationalPoly> factors;
  if (p.degree() == 0) return factors;
  const RationalPoly f = p.monic();
  const RationalPoly fp = f.derivative();
  RationalPoly a = RationalPoly::gcd(f, fp);
  RationalPoly b = RationalPoly::divmod(f, a).first;
  RationalPoly c = RationalPoly::divmod(fp, a).first;
  RationalPoly d = c - b.derivative();
  while (b.degree() > 0) {
    a = RationalPoly::gcd(b, d);
    factors.push_back(a);
    b = RationalPoly::divmod(b, a).first;
    c = RationalPoly::divmod(d, a).first;
    d = c - b.derivative();
  }
  return factors;
}

Rational root_bound(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  Rational m(0);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / p.leading())));
  return m + 1;
}

namespace {

// Coefficients of q(x) = p(x + shift).
std::vector<Rational> taylor_shift(std::vector<Rational> c, const Rational& shift) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
  return c;
}

int sign_variations(const std::vector<Rational>& c) {
  int count = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Descartes bound on the number of roots of p in the open interval (l, r).
int descartes_count(const RationalPoly& p, const Rational& l, const Rational& r) {
  std::vector<Rational> c = taylor_shift(p.coefficients(), l);
  Rational scale = r - l, pw(1);
  for (auto& x : c) {
    x *= pw;
    pw *= scale;
  }
  std::reverse(c.begin(), c.end());
  return sign_variations(taylor_shift(std::move(c), Rational(1)));
}

// Leading coefficient of the primitive integer multiple of p; bounds the
// denominator of any rational root.
BigInt denominator_bound(const RationalPoly& p) {
  BigInt scale(1);
  for (const auto& c : p.coefficients()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  BigInt g(0);
  for (const auto& c : p.coefficients()) {
    BigInt v = c.get_num() * (scale / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  BigInt lc = p.leading().get_num() * (scale / p.leading().get_den());
  return abs(lc / g);
}

RootInterval refine(const RationalPoly& f, Rational l, Rational r, const Rational& exact_width,
                    int multiplicity) {
  static const Rational kTargetWidth = [] {
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 40);
    return w;
  }();
  // Either endpoint may be a root of f (the outer interval bounds), so
  // fall back to Descartes parity when an endpoint sign is unavailable.
  while (r - l >= kTargetWidth || r - l >= exact_width) {
    Rational m = (l + r) / 2;
    int sm = f.sign_at(m);
    if (sm == 0) return {m, m, m, multiplicity};
    int sl = f.sign_at(l), sr = f.sign_at(r);
    bool left;
    if (sl != 0)
      left = sl != sm;
    else if (sr != 0)
      left = sr == sm;
    else
      left = descartes_count(f, l, m) % 2 == 1;
    (left ? r : l) = m;
  }
  Rational candidate = simplest_between(l, r);
  if (f.sign_at(candidate) == 0 && candidate != l && candidate != r)
    return {candidate, candidate, candidate, multiplicity};
  return {l, r, std::nullopt, multiplicity};
}

void isolate_square_free(const RationalPoly& f, const Rational& a, const Rational& b, int multiplicity,
                         std::vector<RootInterval>& out) {
  if (f.degree() <= 0) return;
  if (f.sign_at(a) == 0) out.push_back({a, a, a, multiplicity});
  if (a == b) return;
  if (f.sign_at(b) == 0) out.push_back({b, b, b, multiplicity});

  const BigInt lbound = denominator_bound(f);
  const Rational exact_width = Rational(1) / Rational(lbound * lbound);

  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [l, r] = stack.back();
    stack.pop_back();
    int v = descartes_count(f, l, r);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back(refine(f, l, r, exact_width, multiplicity));
      continue;
    }
    Rational m = (l + r) / 2;
    if (f.sign_at(m) == 0) out.push_back({m, m, m, multiplicity});
    stack.emplace_back(m, r);
    stack.emplace_back(l, m);
  }
}

}  // namespace

RootIsolation real_roots_in_interval(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("real_roots_in_interval: zero polynomial");
  if (a > b) throw std::invalid_argument("real_roots_in_interval: empty interval");
  RootIsolation result;
  const auto factors = square_free_factorization(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    isolate_square_free(factors[i], a, b, static_cast<int>(i) + 1, result.roots);
  std::sort(result.roots.begin(), result.roots.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  for (const auto& r : result.roots) result.count_with_multiplicity += r.multiplicity;
  return result;
}

}  // namespace equipart
