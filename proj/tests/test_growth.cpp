#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/dihedral.hpp"
#include "hecke/growth.hpp"
#include "hecke/json_io.hpp"
#include "hecke/sl2.hpp"

using namespace hecke;

TEST_CASE("set products") {
  DihedralBackend dih;
  CosetSet a(dih);
  a.insert_element(DihedralElement{1, 1});
  CosetSet sq = set_product(a, a);
  CHECK(sq.size() == 2);
  CHECK(sq.contains(dih.canonical_double_coset(DihedralElement{0, 1})));
  CHECK(sq.contains(dih.canonical_double_coset(DihedralElement{2, 1})));

  // the unit coset acts as the identity on sets
  CosetSet e(dih);
  e.insert_element(dih.identity());
  CHECK(set_product(sq, e) == sq);

  Sl2Backend sl(2);
  CosetSet x1(sl);
  x1.insert_element(sl.diag_rep(1));
  CosetSet prod = set_product(x1, x1);
  CHECK(prod.size() == 3);
  for (long n = 0; n <= 2; ++n) CHECK(prod.contains(sl.coset_of_index(n)));
}

TEST_CASE("total_L") {
  DihedralBackend dih;
  CosetSet a(dih);
  for (long n = 0; n <= 2; ++n) a.insert_element(DihedralElement{n, 1});
  CHECK(total_L(a) == 5);  // 1 + 2 + 2

  CosetSet e(dih);
  e.insert_element(dih.identity());
  CHECK(total_L(e) == 1);

  Sl2Backend sl(2);
  CosetSet s(sl);
  s.insert_element(sl.diag_rep(0));
  s.insert_element(sl.diag_rep(1));
  CHECK(total_L(s) == 7);  // 1 + 6
}

TEST_CASE("dihedral growth sequence L(A^n) = 2n + 3") {
  DihedralBackend dih;
  CosetSet a(dih);
  a.insert_element(dih.identity());
  a.insert_element(DihedralElement{1, 1});
  GrowthReport report = growth_sequence(a, 30);
  REQUIRE(report.rows.size() == 31);
  for (const auto& row : report.rows) {
    CHECK(row.l_value == 2ull * row.n + 3);
    CHECK(row.set_size == row.n + 2);
  }
  CHECK(report.rows[10].l_value == 23);
  CHECK(!report.truncated);
  // by n = 30 the successive ratios sit well inside the default band
  CHECK(report.classification == "subexponential evidence");
}

TEST_CASE("sl2 growth sequence L(A^n) = 2 * 4^(n+1) - 1") {
  Sl2Backend sl(2);
  CosetSet a(sl);
  a.insert_element(sl.diag_rep(0));
  a.insert_element(sl.diag_rep(1));
  GrowthReport report = growth_sequence(a, 3);
  REQUIRE(report.rows.size() == 4);
  std::uint64_t expect = 8;  // 2 * 4^(n+1) at n = 0
  for (const auto& row : report.rows) {
    CHECK(row.l_value == expect - 1);
    expect *= 4;
  }
  CHECK(report.rows[3].l_value == 511);
  CHECK(report.classification == "no subexponential evidence");
}

TEST_CASE("singleton unit set stays put") {
  Sl2Backend sl(2);
  CosetSet e(sl);
  e.insert_element(sl.identity());
  GrowthReport report = growth_sequence(e, 6);
  for (const auto& row : report.rows) {
    CHECK(row.l_value == 1);
    CHECK(row.set_size == 1);
  }
  CHECK(report.classification == "subexponential evidence");
}

TEST_CASE("budget truncation is explicit") {
  Sl2Backend tiny(2, 50);
  CosetSet a(tiny);
  a.insert_element(tiny.diag_rep(0));
  a.insert_element(tiny.diag_rep(1));
  GrowthReport report = growth_sequence(a, 6);
  CHECK(report.truncated);
  CHECK(report.rows.size() < 7);
  CHECK(report.classification == "inconclusive");
}

TEST_CASE("report serialization") {
  DihedralBackend dih;
  CosetSet a(dih);
  a.insert_element(dih.identity());
  a.insert_element(DihedralElement{1, 1});
  GrowthReport report = growth_sequence(a, 3);

  std::string csv = growth_report_csv(report);
  CHECK(csv.rfind("n,size,L,root,ratio\n0,2,3,,\n", 0) == 0);

  nlohmann::json j = growth_report_json(report);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][0]["root"].is_null());
  CHECK(j["rows"][1]["L"] == 5);
  CHECK(j["truncated"] == false);
  CHECK(j["classifier"]["kind"] == "heuristic");
}
