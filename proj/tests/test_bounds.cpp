#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "equipart/bounds.hpp"

using namespace equipart;

#ifndef EQUIPART_GOLDEN_DIR
#error "EQUIPART_GOLDEN_DIR must be defined"
#endif

TEST_CASE("closed-form bounds") {
  CHECK(ramos_lower(1, 1) == 1);
  CHECK(ramos_lower(3, 2) == 5);
  CHECK(ramos_lower(1, 4) == 4);
  CHECK(ramos_lower(3, 4) == 12);
  CHECK(mani_upper(1, 1) == 1);
  CHECK(mani_upper(3, 2) == 5);
  CHECK(mani_upper(5, 2) == 9);
  CHECK(mani_upper(3, 4) == 17);
  CHECK(conjectured_value(5, 2) == 8);
  CHECK_THROWS(ramos_lower(0, 1));
  for (std::int64_t j = 1; j <= 40; ++j)
    for (int k = 1; k <= 5; ++k) CHECK(ramos_lower(j, k) <= mani_upper(j, k));
}

TEST_CASE("ham-sandwich column is exact") {
  const auto t = BoundsTable::build(20, 3);
  for (int j = 1; j <= 20; ++j) CHECK(t.at(j, 1).exact == j);
}

TEST_CASE("seeded values") {
  const auto seeds = seeded_exact_values(17);
  auto has = [&](int j, int k, std::int64_t v) {
    for (const auto& s : seeds)
      if (s.j == j && s.k == k && s.value == v) return true;
    return false;
  };
  CHECK(has(2, 2, 3));
  CHECK(has(5, 2, 8));
  CHECK(has(9, 2, 14));
  CHECK(has(17, 2, 26));
  CHECK(has(7, 2, 11));
  for (const auto& s : seeds) CHECK(s.k <= 2);
}

TEST_CASE("propagation derives (1,3) from (2,2)") {
  const auto t = BoundsTable::build(3, 4);
  CHECK(t.at(1, 3).exact == 3);
  bool halving = false;
  for (const auto& p : t.at(1, 3).provenance) halving |= p.kind == RuleKind::ReductionHalve;
  CHECK(halving);
  CHECK(t.at(2, 3).upper == 8);
  CHECK_FALSE(t.at(2, 3).exact);
}

TEST_CASE("propagation is idempotent") {
  const auto once = BoundsTable::build(12, 4);
  CHECK(propagate(once) == once);
}

TEST_CASE("inconsistent bounds name the cell") {
  auto t = BoundsTable::initial(3, 2);
  t.at(3, 2).lower = 100;
  try {
    propagate(t);
    FAIL("expected InconsistentBoundsError");
  } catch (const InconsistentBoundsError& e) {
    CHECK(std::string(e.what()).find("(3,2)") != std::string::npos);
  }
}

TEST_CASE("disputed claims stay out of the table") {
  const auto t = BoundsTable::build(16, 4);
  CHECK_FALSE(disputed_claims(16, 4).empty());
  // Claimed 5, 6 and 12 respectively; 7 here comes from (4,2) <= (5,2) - 1.
  CHECK(t.at(1, 4).upper == 7);
  CHECK(t.at(4, 2).upper == 7);
  CHECK(t.at(8, 2).upper == 13);
}

TEST_CASE("single-cell bounds") {
  const auto r = bounds_for(1, 1);
  CHECK(r.lower == 1);
  CHECK(r.upper == 1);
  CHECK(r.exact == 1);
  CHECK(bounds_for(1, 3).exact == 3);
  CHECK(bounds_for(5, 2).exact == 8);
  CHECK_THROWS(bounds_for(1, 17));
}

TEST_CASE("markdown rendering matches the golden table") {
  std::ifstream in(std::string(EQUIPART_GOLDEN_DIR) + "/table_j3_k4.md");
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(render_table(BoundsTable::build(3, 4), TableFormat::Markdown) == golden.str());
}

TEST_CASE("csv and json renderings") {
  const auto t = BoundsTable::build(3, 4);
  const auto csv = render_table(t, TableFormat::Csv);
  CHECK(csv.rfind("j,k,lower,upper,exact,provenance\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  const auto doc = nlohmann::json::parse(render_table(t, TableFormat::Json));
  CHECK(doc["cells"].size() == 12);
  CHECK(doc["cells"][0]["exact"] == 1);
  const auto conj = render_table(t, TableFormat::Markdown, {true});
  CHECK(conj.find("onjectur") != std::string::npos);
}
