#include <sstream>

#include "doctest.h"

#include "cytk/report.hpp"

using namespace cytk;

namespace {

void check_round_trip(const Json& doc) {
  const std::string text = dump(doc);
  CHECK(dump(Json::parse(text)) == text);
}

// Value printed after "label:" in a text report.
std::string field(const std::string& text, const std::string& label) {
  const auto at = text.find(label + ":");
  REQUIRE(at != std::string::npos);
  auto start = text.find_first_not_of(' ', at + label.size() + 1);
  return text.substr(start, text.find('\n', start) - start);
}

std::string yes_no(const Json& b) { return b.is_null() ? "n/a" : b.get<bool>() ? "yes" : "no"; }

}  // namespace

TEST_CASE("analyze report for X_1734") {
  const Json doc = analyze_json(WeightSystem(1734, {91, 96, 102, 578, 867}));
  CHECK(doc["wellformed"] == true);
  CHECK(doc["quasismooth"] == true);
  CHECK(doc["calabi_yau_degree"] == true);
  CHECK(doc["smooth_in_codim2"] == false);
  CHECK(doc["no_edge"] == true);
  const Json& curves = doc["singular_locus"]["singular_curves"];
  REQUIRE(curves.size() == 3);
  CHECK(curves[0]["type"] == "1/17(6,11)");
  CHECK(curves[0]["canonical"] == "1/17(1,16)");
  CHECK(curves[0]["face"] == "{0,1}");
  CHECK(doc["c2_bound"]["positive"] == true);
  check_round_trip(doc);
}

TEST_CASE("analyze report without quasismoothness leaves the locus empty") {
  const Json doc = analyze_json(WeightSystem(11, {1, 1, 1, 4, 4}));
  CHECK(doc["quasismooth"] == false);
  CHECK(doc["singular_locus"].is_null());
  CHECK(doc["smooth_in_codim2"].is_null());
  CHECK(field(analyze_text(doc), "smooth in codim 2") == "n/a");
  check_round_trip(doc);
}

TEST_CASE("text and JSON carry the same verdicts") {
  for (const auto& ws : {WeightSystem(1734, {91, 96, 102, 578, 867}), WeightSystem(56, {2, 4, 9, 13, 28}),
                         WeightSystem(7, {1, 1, 1, 2, 2}), WeightSystem(5, {1, 1, 1, 1, 1})}) {
    const Json doc = analyze_json(ws);
    const std::string text = analyze_text(doc);
    CHECK(field(text, "wellformed") == yes_no(doc["wellformed"]));
    CHECK(field(text, "quasismooth") == yes_no(doc["quasismooth"]));
    CHECK(field(text, "CY degree") == yes_no(doc["calabi_yau_degree"]));
    CHECK(field(text, "smooth in codim 2") == yes_no(doc["smooth_in_codim2"]));
    CHECK(field(text, "no edge") == yes_no(doc["no_edge"]));
  }
  for (const char* m : {"16A1", "5A4", "A1", "2A3+11A1", ""}) {
    const Json doc = surface_json(DuValMultiset::parse(m));
    const std::string text = surface_text(doc);
    CHECK(field(text, "orbifold c2").rfind(doc["orbifold_c2"].get<std::string>(), 0) == 0);
    CHECK(field(text, "classification").rfind(doc["classification"]["kind"].get<std::string>(), 0) == 0);
    check_round_trip(doc);
  }
}

TEST_CASE("surface reports") {
  const Json a1 = surface_json(DuValMultiset::parse("A1"));
  CHECK(a1["orbifold_c2"] == "45/2");
  CHECK(a1["conditional"] == true);
  CHECK(a1["classification"]["kind"] == "k3_type");
  const Json a4 = surface_json(DuValMultiset::parse("5A4"));
  CHECK(a4["orbifold_c2"] == "0/1");
  CHECK(a4["gate"]["reason"] == "Σk > 19");
  const Json k = surface_json(DuValMultiset::parse("16A1"));
  CHECK(k["classification"]["entry"] == 1);
  CHECK(k["classification"]["kind"] == "realized");
}

TEST_CASE("census, enumeration and torus reports round-trip") {
  std::istringstream in("5 1 1 1 1 1\n120 3 7 20 40 50\n1734 91 96 102 578\n7 1\n");
  const Json census = census_json(run_census(in));
  CHECK(census["summary"]["total"] == 3);
  CHECK(census["failures"].size() == 1);
  CHECK(census["verdicts"][2]["curves"] == Json({"1/17(6,11)", "1/3(1,2)", "1/2(1,1)"}));
  check_round_trip(census);

  check_round_trip(enumerate_json(enumerate_zero_c2()));
  check_round_trip(builtins_json());

  const BuiltinAction* b = find_builtin("bt24-linear");
  const auto action = close_group(b->generators, b->name);
  const auto expected = DuValMultiset::parse("E6+D4+4A2+A1");
  const Json t = torus_json(action, quotient_singularities(action), &expected);
  CHECK(t["multiset"] == "E6+D4+4A2+A1");
  CHECK(t["matches_expected"] == true);
  CHECK(t["orbifold_c2"] == "0/1");
  CHECK(t["group_order"] == 24);
  check_round_trip(t);
  CHECK(torus_text(t).find("quotient singularities: E6+D4+4A2+A1") != std::string::npos);
}
