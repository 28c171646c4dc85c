#pragma once

#include <random>
#include <vector>

#include "equipart/core.hpp"

namespace equipart::testing {

inline GroupElement random_group_element(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::uint8_t> signs(k);
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) {
    signs[i] = static_cast<std::uint8_t>(rng() & 1);
    perm[i] = i;
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  return GroupElement(std::move(signs), std::move(perm));
}

inline Arrangement<double> random_float_arrangement(std::mt19937_64& rng, std::size_t k, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<AffineHyperplane<double>> hs(k);
  for (auto& h : hs) {
    h.normal.resize(d);
    for (auto& v : h.normal) v = g(rng);
    h.offset = 0.5 * g(rng);
  }
  return Arrangement<double>(std::move(hs));
}

inline PointCloud<double> gaussian_cloud(std::mt19937_64& rng, std::size_t d, std::size_t n,
                                         const std::vector<double>& mean, double sd = 1.0) {
  std::normal_distribution<double> g(0.0, sd);
  std::vector<double> xs;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i) xs.push_back(mean[i] + g(rng));
  return PointCloud<double>::uniform(d, std::move(xs));
}

/// Small integers over small denominators, so coincidences with hyperplanes
/// (boundary points) actually occur.
inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Arrangement<Rational> random_exact_arrangement(std::mt19937_64& rng, std::size_t k, std::size_t d) {
  std::vector<AffineHyperplane<Rational>> hs(k);
  for (auto& h : hs) {
    do {
      h.normal.assign(d, Rational(0));
      for (auto& v : h.normal) v = small_rational(rng);
    } while (h.has_zero_normal());
    h.offset = small_rational(rng);
  }
  return Arrangement<Rational>(std::move(hs));
}

inline PointCloud<Rational> random_exact_cloud(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::vector<Rational> xs, ws;
  std::uniform_int_distribution<int> w(1, 5);
  Rational total(0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < d; ++i) xs.push_back(small_rational(rng));
    ws.emplace_back(w(rng));
    total += ws.back();
  }
  for (auto& x : ws) x /= total;
  return PointCloud<Rational>(d, std::move(xs), std::move(ws));
}

}  // namespace equipart::testing
