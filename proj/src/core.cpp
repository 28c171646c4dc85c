#include "equipart/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace equipart {

// ---------------------------------------------------------------- labels

OrthantLabel::OrthantLabel(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("OrthantLabel: k must be at least 1");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("OrthantLabel: entries must be 0 or 1");
}

OrthantLabel OrthantLabel::from_index(std::size_t index, std::size_t k) {
  if (k == 0 || k >= 8 * sizeof(std::size_t) || index >> k)
    throw std::invalid_argument("OrthantLabel::from_index: index out of range");
  std::vector<std::uint8_t> bits(k);
  for (std::size_t i = 0; i < k; ++i) bits[i] = (index >> (k - 1 - i)) & 1u;
  return OrthantLabel(std::move(bits));
}

std::size_t OrthantLabel::index() const {
  std::size_t idx = 0;
  for (auto b : bits_) idx = (idx << 1) | b;
  return idx;
}

std::string OrthantLabel::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

// ------------------------------------------------------------ hyperplanes

template <class S>
AffineHyperplane<S> AffineHyperplane<S>::negated() const {
  AffineHyperplane out;
  out.normal.reserve(normal.size());
  for (const auto& x : normal) out.normal.push_back(S(-x));
  out.offset = S(-offset);
  return out;
}

template <class S>
bool AffineHyperplane<S>::has_zero_normal() const {
  return std::all_of(normal.begin(), normal.end(), [](const S& x) { return x == 0; });
}

AffineHyperplane<double> normalized(const AffineHyperplane<double>& h) {
  double norm = 0;
  for (double x : h.normal) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0) throw std::invalid_argument("normalized: zero normal");
  AffineHyperplane<double> out = h;
  for (auto& x : out.normal) x /= norm;
  out.offset /= norm;
  return out;
}

AffineHyperplane<Rational> normalized(const AffineHyperplane<Rational>& h) {
  if (h.has_zero_normal()) throw std::invalid_argument("normalized: zero normal");
  std::vector<Rational> all = h.normal;
  all.push_back(h.offset);
  BigInt scale(1), content(0);
  for (const auto& x : all) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : all) {
    x *= scale;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
  }
  auto first = std::find_if(all.begin(), all.end(), [](const Rational& x) { return x != 0; });
  if (sgn(*first) < 0) content = -content;
  for (auto& x : all) x /= content;
  AffineHyperplane<Rational> out;
  out.offset = all.back();
  all.pop_back();
  out.normal = std::move(all);
  return out;
}

AffineHyperplane<double> to_double(const AffineHyperplane<Rational>& h) {
  AffineHyperplane<double> out;
  for (const auto& x : h.normal) out.normal.push_back(x.get_d());
  out.offset = h.offset.get_d();
  return out;
}

template <class S>
Arrangement<S>::Arrangement(std::vector<AffineHyperplane<S>> hyperplanes) : hyperplanes_(std::move(hyperplanes)) {
  if (hyperplanes_.empty()) throw std::invalid_argument("Arrangement: need at least one hyperplane");
  const std::size_t d = hyperplanes_.front().dimension();
  for (const auto& h : hyperplanes_) {
    if (h.dimension() != d) throw DimensionError("Arrangement: hyperplanes of different dimensions");
    if (h.has_zero_normal()) throw std::invalid_argument("Arrangement: zero normal vector");
  }
  if (hyperplanes_.size() > d)
    throw std::invalid_argument("Arrangement: more hyperplanes than dimensions (k > d)");
}

Arrangement<double> to_double(const Arrangement<Rational>& arr) {
  std::vector<AffineHyperplane<double>> hs;
  for (const auto& h : arr.hyperplanes()) hs.push_back(to_double(h));
  return Arrangement<double>(std::move(hs));
}

// ---------------------------------------------------------------- masses

namespace {

bool weights_sum_to_one(const std::vector<double>& w) {
  return std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-12;
}
bool weights_sum_to_one(const std::vector<Rational>& w) {
  return std::accumulate(w.begin(), w.end(), Rational(0)) == 1;
}

}  // namespace

template <class S>
PointCloud<S>::PointCloud(std::size_t dimension, std::vector<S> coordinates, std::vector<S> weights)
    : dimension_(dimension), coordinates_(std::move(coordinates)), weights_(std::move(weights)) {
  if (dimension_ == 0) throw std::invalid_argument("PointCloud: dimension must be positive");
  if (weights_.empty()) throw std::invalid_argument("PointCloud: no points");
  if (coordinates_.size() != weights_.size() * dimension_)
    throw DimensionError("PointCloud: coordinate count does not match points x dimension");
  for (const auto& w : weights_)
    if (!(w > 0)) throw std::invalid_argument("PointCloud: weights must be positive");
  if (!weights_sum_to_one(weights_)) throw std::invalid_argument("PointCloud: weights must sum to 1");
}

template <class S>
PointCloud<S> PointCloud<S>::uniform(std::size_t dimension, std::vector<S> coordinates) {
  if (dimension == 0 || coordinates.size() % dimension != 0 || coordinates.empty())
    throw DimensionError("PointCloud::uniform: coordinate count not a multiple of dimension");
  const std::size_t n = coordinates.size() / dimension;
  std::vector<S> w(n, S(1) / S(static_cast<long>(n)));
  if constexpr (std::is_same_v<S, double>) {
    // Rounding can leave the float sum a few ulps away from 1.
    double sum = std::accumulate(w.begin(), w.end(), 0.0);
    w.back() += 1.0 - sum;
  }
  return PointCloud(dimension, std::move(coordinates), std::move(w));
}

MomentIntervals::MomentIntervals(std::size_t dimension, std::vector<std::pair<Rational, Rational>> intervals)
    : dimension_(dimension), intervals_(std::move(intervals)) {
  if (dimension_ == 0) throw std::invalid_argument("MomentIntervals: dimension must be positive");
  if (intervals_.empty()) throw std::invalid_argument("MomentIntervals: no intervals");
  for (const auto& [a, b] : intervals_) {
    if (!(a < b)) throw std::invalid_argument("MomentIntervals: interval with a >= b");
    if (a <= 0 && b >= 0) throw std::invalid_argument("MomentIntervals: interval contains the origin parameter 0");
  }
  auto sorted = intervals_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].first <= sorted[i - 1].second)
      throw std::invalid_argument("MomentIntervals: intervals are not pairwise disjoint");
}

Rational MomentIntervals::total_length() const {
  Rational total(0);
  for (const auto& [a, b] : intervals_) total += b - a;
  return total;
}

// ----------------------------------------------------------------- group

GroupElement::GroupElement(std::vector<std::uint8_t> signs, std::vector<std::size_t> permutation)
    : signs_(std::move(signs)), permutation_(std::move(permutation)) {
  if (signs_.empty()) throw std::invalid_argument("GroupElement: k must be at least 1");
  if (signs_.size() != permutation_.size()) throw DimensionError("GroupElement: signs and permutation sizes differ");
  std::vector<bool> seen(permutation_.size(), false);
  for (auto p : permutation_) {
    if (p >= permutation_.size() || seen[p]) throw std::invalid_argument("GroupElement: permutation is not a bijection");
    seen[p] = true;
  }
  for (auto b : signs_)
    if (b > 1) throw std::invalid_argument("GroupElement: signs must be 0 or 1");
}

GroupElement GroupElement::identity(std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  return GroupElement(std::vector<std::uint8_t>(k, 0), std::move(perm));
}

GroupElement GroupElement::inverse() const {
  // (beta, tau)^-1 = (tau^-1 . beta, tau^-1) with (tau^-1 . beta)_i = beta_{tau(i)}.
  const std::size_t k = size();
  std::vector<std::size_t> inv(k);
  std::vector<std::uint8_t> s(k);
  for (std::size_t i = 0; i < k; ++i) {
    inv[permutation_[i]] = i;
    s[i] = signs_[permutation_[i]];
  }
  return GroupElement(std::move(s), std::move(inv));
}

OrthantLabel GroupElement::act(const OrthantLabel& alpha) const {
  if (alpha.size() != size()) throw DimensionError("GroupElement::act: label size mismatch");
  std::vector<std::uint8_t> out(size());
  for (std::size_t src = 0; src < size(); ++src) {
    const std::size_t dst = permutation_[src];
    out[dst] = signs_[dst] ^ alpha[src];
  }
  return OrthantLabel(std::move(out));
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  // (beta, tau)(beta', tau') = (beta + tau . beta', tau tau').
  if (g.size() != h.size()) throw DimensionError("GroupElement product: size mismatch");
  const std::size_t k = g.size();
  std::vector<std::size_t> perm(k);
  std::vector<std::uint8_t> s(g.signs_);
  for (std::size_t i = 0; i < k; ++i) {
    perm[i] = g.permutation_[h.permutation_[i]];
    s[g.permutation_[i]] ^= h.signs_[i];
  }
  return GroupElement(std::move(s), std::move(perm));
}

template <class S>
Arrangement<S> act_on_arrangement(const GroupElement& g, const Arrangement<S>& arr) {
  if (g.size() != arr.size()) throw DimensionError("act_on_arrangement: k mismatch");
  std::vector<AffineHyperplane<S>> out(arr.size());
  for (std::size_t src = 0; src < arr.size(); ++src) {
    const std::size_t dst = g.permutation()[src];
    out[dst] = g.signs()[dst] ? arr[src].negated() : arr[src];
  }
  return Arrangement<S>(std::move(out));
}

template <class S>
TestVector<S> act_on_test_vector(const GroupElement& g, const TestVector<S>& tv) {
  if (g.size() != tv.k) throw DimensionError("act_on_test_vector: k mismatch");
  TestVector<S> out{tv.k, {}};
  const std::size_t labels = std::size_t{1} << tv.k;
  for (const auto& per_mass : tv.values) {
    std::vector<S> moved(labels);
    for (std::size_t idx = 0; idx < labels; ++idx)
      moved[g.act(OrthantLabel::from_index(idx, tv.k)).index()] = per_mass[idx];
    out.values.push_back(std::move(moved));
  }
  return out;
}

// -------------------------------------------------------------- measures

RationalPoly curve_polynomial(const AffineHyperplane<Rational>& h) {
  std::vector<Rational> c;
  c.reserve(h.normal.size() + 1);
  c.push_back(-h.offset);
  for (const auto& v : h.normal) c.push_back(v);
  return RationalPoly(std::move(c));
}

namespace {

template <class S>
void check_dimensions(std::size_t mass_dim, const Arrangement<S>& arr) {
  if (mass_dim != arr.dimension())
    throw DimensionError("mass dimension " + std::to_string(mass_dim) + " does not match arrangement dimension " +
                         std::to_string(arr.dimension()));
}

double magnitude(double x) { return std::abs(x); }
Rational magnitude(const Rational& x) { return abs(x); }

// Signed distance numerator <x, v> - a.
template <class S>
S side(const S* x, const AffineHyperplane<S>& h) {
  S acc = -h.offset;
  for (std::size_t i = 0; i < h.normal.size(); ++i) acc += x[i] * h.normal[i];
  return acc;
}

// Closed-orthant masses of all 2^k labels. A point on a hyperplane belongs
// to both closed sides.
template <class S>
std::vector<S> cloud_orthant_masses(const PointCloud<S>& cloud, const Arrangement<S>& arr) {
  const std::size_t k = arr.size();
  std::vector<S> out(std::size_t{1} << k, S(0));
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    std::size_t base = 0, boundary = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const S s = side(cloud.point(p), arr[i]);
      const std::size_t bit = std::size_t{1} << (k - 1 - i);
      if (s < 0)
        base |= bit;
      else if (s == 0)
        boundary |= bit;
    }
    // Enumerate every subset of the boundary bits.
    std::size_t sub = boundary;
    while (true) {
      out[base | sub] += cloud.weights()[p];
      if (sub == 0) break;
      sub = (sub - 1) & boundary;
    }
  }
  return out;
}

std::vector<Rational> moment_orthant_masses(const MomentIntervals& mass, const Arrangement<Rational>& arr) {
  const std::size_t k = arr.size();
  std::vector<RationalPoly> polys;
  for (const auto& h : arr.hyperplanes()) polys.push_back(curve_polynomial(h));

  std::vector<Rational> out(std::size_t{1} << k, Rational(0));
  for (const auto& [a, b] : mass.intervals()) {
    std::vector<Rational> cuts{a, b};
    for (const auto& p : polys) {
      for (const auto& root : real_roots_in_interval(p, a, b).roots) {
        if (!root.exact)
          throw std::domain_error("orthant measure: hyperplane meets the curve at an irrational parameter in [" +
                                  to_string(a) + ", " + to_string(b) + "]; exact measure is not rational");
        cuts.push_back(*root.exact);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
      std::size_t label = 0;
      for (const auto& p : polys) label = (label << 1) | (p.sign_at(mid) < 0 ? 1u : 0u);
      out[label] += cuts[i + 1] - cuts[i];
    }
  }
  const Rational total = mass.total_length();
  for (auto& x : out) x /= total;
  return out;
}

template <class S>
std::vector<S> orthant_masses(const Mass<S>& mass, const Arrangement<S>& arr) {
  check_dimensions(dimension_of(mass), arr);
  if (const auto* cloud = std::get_if<PointCloud<S>>(&mass)) return cloud_orthant_masses(*cloud, arr);
  if constexpr (std::is_same_v<S, Rational>) {
    return moment_orthant_masses(std::get<MomentIntervals>(mass), arr);
  } else {
    throw ScalarKindError("moment-curve interval masses require exact rational hyperplanes");
  }
}

}  // namespace

template <class S>
S orthant_measure(const Mass<S>& mass, const Arrangement<S>& arr, const OrthantLabel& label) {
  if (label.size() != arr.size()) throw DimensionError("orthant_measure: label size does not match k");
  return orthant_masses(mass, arr)[label.index()];
}

template <class S>
TestVector<S> eval_test_map(const std::vector<Mass<S>>& masses, const Arrangement<S>& arr) {
  TestVector<S> tv{arr.size(), {}};
  const S target = S(1) / S(static_cast<long>(std::size_t{1} << arr.size()));
  for (const auto& mass : masses) {
    auto values = orthant_masses(mass, arr);
    for (auto& v : values) v -= target;
    tv.values.push_back(std::move(values));
  }
  return tv;
}

template <class S>
bool is_equipartition(const std::vector<Mass<S>>& masses, const Arrangement<S>& arr, const S& eps) {
  if (eps < 0) throw std::invalid_argument("is_equipartition: eps must be non-negative");
  const auto tv = eval_test_map(masses, arr);
  for (const auto& per_mass : tv.values)
    for (const auto& v : per_mass)
      if (magnitude(v) > eps) return false;
  return true;
}

template <class S>
bool in_general_position(const PointCloud<S>& cloud, const Arrangement<S>& arr) {
  check_dimensions(cloud.dimension(), arr);
  for (std::size_t p = 0; p < cloud.size(); ++p)
    for (const auto& h : arr.hyperplanes())
      if (side(cloud.point(p), h) == 0) return false;
  return true;
}

// ---------------------------------------------------- instantiations

#define EQUIPART_INSTANTIATE(S)                                                                       \
  template struct AffineHyperplane<S>;                                                                \
  template class Arrangement<S>;                                                                      \
  template class PointCloud<S>;                                                                       \
  template S orthant_measure<S>(const Mass<S>&, const Arrangement<S>&, const OrthantLabel&);          \
  template TestVector<S> eval_test_map<S>(const std::vector<Mass<S>>&, const Arrangement<S>&);        \
  template Arrangement<S> act_on_arrangement<S>(const GroupElement&, const Arrangement<S>&);          \
  template TestVector<S> act_on_test_vector<S>(const GroupElement&, const TestVector<S>&);            \
  template bool is_equipartition<S>(const std::vector<Mass<S>>&, const Arrangement<S>&, const S&);    \
  template bool in_general_position<S>(const PointCloud<S>&, const Arrangement<S>&);

EQUIPART_INSTANTIATE(double)
EQUIPART_INSTANTIATE(Rational)

#undef EQUIPART_INSTANTIATE

}  // namespace equipart
