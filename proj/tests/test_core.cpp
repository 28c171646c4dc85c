#include <doctest.h>

#include "support.hpp"

using namespace equipart;
using namespace equipart::testing;

namespace {

// Square with vertices on the axes, split by the two coordinate lines
// shifted off the points.
std::vector<Mass<double>> four_point_cloud() {
  return {PointCloud<double>::uniform(2, {1, 1, -1, 1, -1, -1, 1, -1})};
}

Arrangement<double> coordinate_axes() { return Arrangement<double>({{{1, 0}, 0}, {{0, 1}, 0}}); }

}  // namespace

TEST_CASE("orthant labels index lexicographically") {
  CHECK(OrthantLabel({0, 0}).index() == 0);
  CHECK(OrthantLabel({0, 1}).index() == 1);
  CHECK(OrthantLabel({1, 0}).index() == 2);
  CHECK(OrthantLabel::from_index(5, 3).to_string() == "101");
  for (std::size_t i = 0; i < 16; ++i) CHECK(OrthantLabel::from_index(i, 4).index() == i);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(Arrangement<double>(std::vector<AffineHyperplane<double>>{}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement<double>({{{0, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement<double>({{{1, 0}, 0}, {{1, 0, 0}, 0}}), DimensionError);
  CHECK_THROWS_AS(Arrangement<double>({{{1}, 0}, {{1}, 1}}), std::invalid_argument);  // k > d
}

TEST_CASE("normalization") {
  const auto h = normalized(AffineHyperplane<double>{{3, 4}, 10});
  CHECK(h.normal[0] == doctest::Approx(0.6));
  CHECK(h.normal[1] == doctest::Approx(0.8));
  CHECK(h.offset == doctest::Approx(2));

  const auto q = normalized(AffineHyperplane<Rational>{{Rational(-2, 3), Rational(4, 9)}, Rational(2)});
  CHECK(q.normal == std::vector<Rational>{Rational(3), Rational(-2)});
  CHECK(q.offset == Rational(-9));
  CHECK_THROWS(normalized(AffineHyperplane<Rational>{{Rational(0)}, Rational(1)}));
}

TEST_CASE("point cloud validation") {
  CHECK_THROWS(PointCloud<double>(2, {0, 0, 1}, {1}));
  CHECK_THROWS(PointCloud<double>(1, {0, 1}, {0.5, 0.6}));
  CHECK_THROWS(PointCloud<double>(1, {0, 1}, {1.5, -0.5}));
  CHECK_THROWS(PointCloud<Rational>(1, {Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 3)}));
  CHECK_NOTHROW(PointCloud<double>::uniform(1, std::vector<double>(7, 0.0)));
}

TEST_CASE("moment interval validation") {
  using I = std::vector<std::pair<Rational, Rational>>;
  CHECK_THROWS(MomentIntervals(2, I{{Rational(-1), Rational(1)}}));
  CHECK_THROWS(MomentIntervals(2, I{{Rational(2), Rational(1)}}));
  CHECK_THROWS(MomentIntervals(2, I{{Rational(1), Rational(3)}, {Rational(2), Rational(4)}}));
  CHECK(MomentIntervals(2, I{{Rational(1), Rational(2)}, {Rational(-3), Rational(-1)}}).total_length() == 3);
}

TEST_CASE("group axioms on labels and elements") {
  std::mt19937_64 rng(7);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = random_group_element(rng, k);
      const auto h = random_group_element(rng, k);
      CHECK(g * GroupElement::identity(k) == g);
      CHECK(g * g.inverse() == GroupElement::identity(k));
      for (std::size_t idx = 0; idx < (std::size_t{1} << k); ++idx) {
        const auto a = OrthantLabel::from_index(idx, k);
        CHECK((g * h).act(a) == g.act(h.act(a)));
      }
    }
  }
}

TEST_CASE("group action on arrangements composes") {
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_group_element(rng, k);
      const auto h = random_group_element(rng, k);
      const auto a = random_exact_arrangement(rng, k, 3);
      CHECK(act_on_arrangement(g * h, a) == act_on_arrangement(g, act_on_arrangement(h, a)));
    }
}

TEST_CASE("orientation reversal flips one label bit") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const auto arr = random_exact_arrangement(rng, k, 3);
    const Mass<Rational> mass = random_exact_cloud(rng, 3, 12);
    for (std::size_t i = 0; i < k; ++i) {
      auto hs = arr.hyperplanes();
      hs[i] = hs[i].negated();
      const Arrangement<Rational> flipped(hs);
      for (std::size_t idx = 0; idx < (std::size_t{1} << k); ++idx) {
        auto bits = OrthantLabel::from_index(idx, k).bits();
        const OrthantLabel alpha(bits);
        bits[i] ^= 1;
        CHECK(orthant_measure(mass, flipped, alpha) == orthant_measure(mass, arr, OrthantLabel(bits)));
      }
    }
  }
}

TEST_CASE("equivariance of the test map") {
  std::mt19937_64 rng(5);
  for (std::size_t k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_group_element(rng, k);
      const auto arr = random_exact_arrangement(rng, k, 3);
      const std::vector<Mass<Rational>> masses{random_exact_cloud(rng, 3, 10), random_exact_cloud(rng, 3, 7)};
      CHECK(eval_test_map(masses, act_on_arrangement(g, arr)) == act_on_test_vector(g, eval_test_map(masses, arr)));
    }
}

TEST_CASE("orthant measures sum to one in general position") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto arr = random_float_arrangement(rng, 3, 3);
    const auto cloud = gaussian_cloud(rng, 3, 200, {0, 0, 0});
    REQUIRE(in_general_position(cloud, arr));
    double total = 0;
    for (std::size_t idx = 0; idx < 8; ++idx) total += orthant_measure<double>(cloud, arr, OrthantLabel::from_index(idx, 3));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boundary points count in both closed halfspaces") {
  const std::vector<Mass<Rational>> masses{PointCloud<Rational>(1, {Rational(0)}, {Rational(1)})};
  const Arrangement<Rational> arr({{{Rational(1)}, Rational(0)}});
  const auto tv = eval_test_map(masses, arr);
  CHECK(tv.values[0][0] == Rational(1, 2));
  CHECK(tv.values[0][1] == Rational(1, 2));
  CHECK_FALSE(in_general_position(std::get<PointCloud<Rational>>(masses[0]), arr));
}

TEST_CASE("equipartition examples") {
  CHECK(is_equipartition(four_point_cloud(), coordinate_axes(), 0.0));
  const Arrangement<double> shifted({{{1, 0}, 10}, {{0, 1}, 0}});
  CHECK_FALSE(is_equipartition(four_point_cloud(), shifted, 0.1));
}

TEST_CASE("moment-curve measures are exact") {
  using I = std::vector<std::pair<Rational, Rational>>;
  const Mass<Rational> m = MomentIntervals(2, I{{Rational(1), Rational(2)}});
  // <gamma(t), (0, 1)> = t^2 >= 9/4 exactly for t >= 3/2.
  const Arrangement<Rational> arr({{{Rational(0), Rational(1)}, Rational(9, 4)}});
  CHECK(orthant_measure(m, arr, OrthantLabel({0})) == Rational(1, 2));
  // t^2 = 2 crosses at an irrational parameter.
  const Arrangement<Rational> irr({{{Rational(0), Rational(1)}, Rational(2)}});
  CHECK_THROWS_AS(orthant_measure(m, irr, OrthantLabel({0})), std::domain_error);
}

TEST_CASE("scalar kinds do not mix") {
  using I = std::vector<std::pair<Rational, Rational>>;
  const std::vector<Mass<double>> masses{MomentIntervals(2, I{{Rational(1), Rational(2)}})};
  CHECK_THROWS_AS(eval_test_map(masses, coordinate_axes()), ScalarKindError);
}

TEST_CASE("dimension mismatch is rejected") {
  const std::vector<Mass<double>> masses{PointCloud<double>::uniform(3, {0, 0, 0})};
  CHECK_THROWS_AS(eval_test_map(masses, coordinate_axes()), DimensionError);
}
