#include "doctest.h"

#include "freefield/branching.hpp"
#include "freefield/error.hpp"

using namespace freefield;
using namespace freefield::branching;
using rootlie::Series;

TEST_CASE("lowest conformal weights") {
  for (int l = 3; l <= 6; ++l) {
    auto rs = RootSystem::build({Series::A, l - 1});
    for (long s = 0; s <= 10; ++s) {
      Weight mu = Rational(s) * rs.fundamental_weights()[0];
      CHECK(lowest_conformal_weight(rs, -1, mu, l, s) == frac(s, 2));
      Weight dual = Rational(s) * rs.fundamental_weights().back();
      CHECK(lowest_conformal_weight(rs, -1, dual, l, -s) == frac(s, 2));
    }
    CHECK(lowest_conformal_weight(rs, -1, Weight(rs.ambient_dim()), l, 0) == 0);
  }
  auto d5 = RootSystem::build({Series::D, 5});
  for (long s = 0; s <= 10; ++s) {
    CHECK(lowest_conformal_weight(d5, -3, Rational(s) * d5.fundamental_weights()[3], 4, s) == s);
    CHECK(lowest_conformal_weight(d5, -3, Rational(s) * d5.fundamental_weights()[4], 4, -s) == s);
  }
  CHECK_THROWS_AS(lowest_conformal_weight(d5, -8, Weight(d5.ambient_dim()), 4, 0), Error);
  CHECK_THROWS_AS(lowest_conformal_weight(d5, -3, Weight(d5.ambient_dim()), 0, 0), Error);
}

TEST_CASE("central charges") {
  auto e6 = RootSystem::build({Series::E, 6});
  auto d5 = RootSystem::build({Series::D, 5});
  CHECK(central_charge(e6, -3) == -26);
  CHECK(central_charge(d5, -3) == -27);
  CHECK(central_charge(d5, -3) + 1 == central_charge(e6, -3));
  for (int l = 2; l <= 5; ++l) {
    auto c = RootSystem::build({Series::C, l});
    auto a = RootSystem::build({Series::A, 2 * l - 1});
    CHECK(central_charge(c, -1) == -(2 * l + 1));
    CHECK(central_charge(a, -1) == central_charge(c, -1));
  }
  auto f4 = RootSystem::build({Series::F, 4});
  auto b4 = RootSystem::build({Series::B, 4});
  CHECK(central_charge(f4, -3) == central_charge(b4, -3) + 1);
  CHECK(central_charge(e6, 0) == 0);
  CHECK_THROWS_AS(central_charge(e6, -12), Error);
}

TEST_CASE("fusion labels") {
  CHECK(fusion_product(2, -3) == -1);
  for (long s = -4; s <= 4; ++s) CHECK(fusion_product(0, s) == s);
  auto m = check_fusion_monoid(5);
  CHECK(m.ok());
  CHECK(m.checked_triples == 11 * 11 * 11);
}

TEST_CASE("finite E6 over D5 + H") {
  auto b = finite_e6_branching();
  REQUIRE(b.components.size() == 4);
  CHECK(b.total_dim == 78);
  CHECK(b.components[0].dim == 45);
  CHECK(b.components[1].dim == 1);
  CHECK(b.components[2].dim == 16);
  CHECK(b.components[3].dim == 16);
  CHECK(b.components[0].h_eigenvalue == 0);
  CHECK(b.components[1].h_eigenvalue == 0);
  CHECK(b.components[2].h_eigenvalue == 1);
  CHECK(b.components[3].h_eigenvalue == -1);
  CHECK(b.components[0].d5_labels == std::vector<long>{0, 1, 0, 0, 0});
  CHECK(b.components[1].d5_labels == std::vector<long>{0, 0, 0, 0, 0});
  CHECK(b.components[2].d5_labels == std::vector<long>{0, 0, 0, 1, 0});
  CHECK(b.components[3].d5_labels == std::vector<long>{0, 0, 0, 0, 1});
  CHECK(b.components[1].highest_weight_vector == "H");
  CHECK(b.components[2].root_label == "(234)");
  CHECK(b.components[3].root_label == "e5+e4");
  CHECK(b.h_norm == Rational(4, 3));
}

TEST_CASE("classification tables") {
  auto t = classification_tables();
  REQUIRE(t.size() == 5);
  CHECK(t[0].members == std::vector<std::string>{"-(s+1)L0+sL1", "-(s+1)L0+sL_{l-1}"});
  CHECK(t[1].sporadic == std::vector<std::string>{"-2L0+L2"});
  CHECK(t[2].members.size() == 2);
  CHECK(a_family_weight(4, 2).notation == "-3L0+2L1");
  CHECK(a_family_weight(4, -2).notation == "-3L0+2L3");
  CHECK(a_family_weight(4, 0).notation == "-L0");
  CHECK(d5_family_weight(-1).notation == "-4L0+L5");
  CHECK(d5_family_weight(2).labels == std::vector<long>{0, 0, 0, 2, 0});
}

TEST_CASE("decomposition reports") {
  auto a = decomposition_report(ReportFamily::A_in_Weyl, 3, -2, 2, 2);
  CHECK(a.passed());
  REQUIRE(a.rows.size() == 5);
  CHECK(a.rows[2].dims == std::vector<long>{1, 9, 54});
  CHECK(a.rows[3].lowest_weight == Rational(1, 2));
  auto j = to_json(a);
  CHECK(j["family"] == "A_in_Weyl");
  CHECK(j["version"] == kReportVersion);
  CHECK(j["rows"][0]["checks"].size() == a.rows[0].checks.size());

  auto e = decomposition_report(ReportFamily::E6_over_D5, 5, -3, 3, 0);
  CHECK(e.passed());
  REQUIRE(e.rows.size() == 7);
  CHECK(e.rows[3].lowest_weight == 0);
  CHECK(e.rows[5].lowest_weight == 2);
  CHECK(e.rows[0].lowest_weight == 3);
  CHECK_THROWS_AS(decomposition_report(ReportFamily::A_in_Weyl, 2, 0, 1, 1), Error);
}
