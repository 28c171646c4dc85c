#include "equipart/rational.hpp"

#include <stdexcept>

namespace equipart {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  std::string_view body = strip_sign(text, negative);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    bool den_negative = false;
    den = strip_sign(den, den_negative);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + original + "'");
    BigInt n{std::string(num)}, q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(n, q);
    if (den_negative) negative = !negative;
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed rational '" + original + "'");
    BigInt digits(std::string(whole) + std::string(frac));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed rational '" + original + "'");
    value = Rational(BigInt(std::string(body)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return Rational(-simplest_between(-hi, -lo));
  // 0 < lo <= hi: continued-fraction descent.
  BigInt fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  Rational out = Rational(fl) + Rational(1) / inner;
  out.canonicalize();
  return out;
}

BigInt binomial(unsigned long n, unsigned long m) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, m);
  return r;
}

}  // namespace equipart
