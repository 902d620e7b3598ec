#include "doctest.h"
#include "lwbp/errors.hpp"
#include "lwbp/json_io.hpp"

using namespace lwbp;

namespace {

PassportRef ref(const char* text) { return make_passport_ref(FullPassport::parse(text)); }

ValidationKind kind_of(const Json& j) {
  try {
    forest_from_json(j);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a ValidationError");
  return ValidationKind::schema;
}

Json fig2_forest() {
  auto fig2 = ref("2_1 2_2 2_3 -3_1 -3_2");
  return forest_to_json(comb(Permutation::parse(fig2, "2_2,2_3,-3_2,-3_1,2_1")));
}

}  // namespace

TEST_CASE("forest JSON shape") {
  Json j = fig2_forest();
  CHECK(j["passport"] == "2_1 2_2 2_3 -3_1 -3_2");
  CHECK(j["vertices"].size() == 5);
  CHECK(j["vertices"][3]["color"] == "white");
  CHECK(j["vertices"][3]["weight"] == "-3");
  CHECK(j["edges"].size() == 4);
  CHECK(j["edges"][0]["black"] == "2_1");
  CHECK(j["edges"][0]["white"] == "-3_1");
  CHECK(j["edges"][0]["weight"] == "2");
  CHECK(j["marks"] == Json::array({"2_2", "2_1"}));
  CHECK(j["rotation"]["-3_1"].size() == 2);
}

TEST_CASE("forest JSON round trips") {
  for (const char* text : {"3 1_1 1_2 -4 -1", "2^3 -3^2", "1/2 1/2 1 -1 -1", "1^2 -1^2"}) {
    auto passport = ref(text);
    for_each_permutation(passport, PermFilter::all, [&](const Permutation& p) {
      TwiceMarkedForest t = comb(p);
      Json j = forest_to_json(t);
      ParsedForest back = forest_from_json(Json::parse(j.dump()));
      CHECK(back.forest.canonical_form() == t.forest.canonical_form());
      REQUIRE(back.marks);
      CHECK(back.marks->first == t.a);
      CHECK(back.marks->second == t.b);
      CHECK(forest_to_json(back.forest, back.marks) == j);
    });
  }
}

TEST_CASE("forest JSON accepts arbitrary edge ids and plain numbers") {
  Json j = Json::parse(R"({
    "passport": "1 -1",
    "edges": [{"id": 17, "black": "1", "white": "-1", "weight": 1}],
    "rotation": {"1": [17], "-1": [17]}
  })");
  ParsedForest f = forest_from_json(j);
  CHECK(f.forest.edges().size() == 1);
  CHECK_FALSE(f.marks);
}

TEST_CASE("forest JSON errors") {
  Json good = fig2_forest();
  Json j = good;
  j.erase("edges");
  CHECK(kind_of(j) == ValidationKind::schema);
  j = good;
  j["edges"][0]["weight"] = "5";
  CHECK(kind_of(j) == ValidationKind::weight_mismatch);
  j = good;
  j["edges"][0]["black"] = "7";
  CHECK(kind_of(j) == ValidationKind::unknown_label);
  j = good;
  j["rotation"]["2_1"] = Json::array({99});
  CHECK(kind_of(j) == ValidationKind::rotation_mismatch);
  j = good;
  j["vertices"][0]["weight"] = "3";
  CHECK(kind_of(j) == ValidationKind::schema);
  j = good;
  j["marks"] = Json::array({"2_2"});
  CHECK(kind_of(j) == ValidationKind::schema);
  j = good;
  j["passport"] = "2 2";
  CHECK(kind_of(j) == ValidationKind::weight_sum);
  CHECK(kind_of(Json::array()) == ValidationKind::schema);
}

TEST_CASE("region JSON") {
  auto fig2 = ref("2_1 2_2 2_3 -3_1 -3_2");
  Permutation p = Permutation::parse(fig2, "2_2,2_3,-3_2,-3_1,2_1");
  Json j = region_to_json(p);
  CHECK(j["heights"] == Json::array({"0", "2", "4", "1", "-2", "0"}));
  CHECK(j["vertical"].size() == 5);
  CHECK(j["horizontal"].size() == 4);
  CHECK(j["horizontal"][3]["side"] == "below");
  ParsedRegion r = region_from_json(Json::parse(j.dump()));
  CHECK(r.columns.size() == 5);
  CHECK(r.rects == horizontal_decomposition(build_region(p)));

  Json bad = j;
  bad["horizontal"][0]["hi"] = "0";
  CHECK_THROWS_AS(region_from_json(bad), ValidationError);
  bad = j;
  bad["horizontal"][0]["side"] = "left";
  CHECK_THROWS_AS(region_from_json(bad), ValidationError);
}

TEST_CASE("report JSON") {
  FullPassport a1 = FullPassport::parse("3 1_1 1_2 -4 -1");
  Json count = count_to_json(count_report(a1), kochetkov_terms(a1), a1);
  CHECK(count["trees"] == "2");
  CHECK(count["terms"].size() == 3);
  CHECK(count["terms"][1]["term"] == "-2");

  auto passport = make_passport_ref(a1);
  Json catalog = catalog_to_json(enumerate_trees(passport));
  CHECK(catalog["count"] == 2);
  for (const auto& t : catalog["trees"]) {
    ParsedForest f = forest_from_json(t["tree"]);
    CHECK(f.forest.canonical_form() == t["canonical"]);
    CHECK(t["witnesses"].size() == 4);
  }

  Permutation p = Permutation::parse(passport, "3,1_1,1_2,-4,-1");
  Json cls = class_to_json(p, classify(p));
  CHECK(cls["positive_tree"] == true);
  CHECK(cls["mark_path"] == Json::array({"3", "-1"}));

  Json table = table_to_json(tree_table(4));
  CHECK(table["lower_triangle"][4] == Json::array({"6", "0", "0", "0", "0"}));
  CHECK(table["partitions"][3] == "2 1^2");

  Json v = verify_to_json(verify(passport));
  CHECK(v["pass"] == true);
  CHECK(v["checks"].size() == 5);
}
