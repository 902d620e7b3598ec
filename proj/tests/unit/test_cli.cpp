#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lwbp/cli.hpp"
#include "lwbp/json_io.hpp"
#include "table_values.hpp"

using namespace lwbp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lwbp_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("count prints the tree count first") {
  Result r = call({"count", "3 1_1 1_2 -4 -1"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "2");
  Result j = call({"count", "3 1_1 1_2 -4 -1", "--format", "json"});
  Json parsed = Json::parse(j.out);
  CHECK(parsed["trees"] == "2");
  CHECK(parsed["terms"].size() == 3);
  Result csv = call({"--format", "csv", "count", "1^2 -1^2"});
  CHECK(lines(csv.out).size() == 4);
}

TEST_CASE("table matches the published values") {
  Result r = call({"table", "7", "--format", "csv"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 16);
  const auto& rows = published_tree_tables().at(7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> cells;
    std::stringstream row(ls[i + 1]);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    for (std::size_t c = 0; c <= i; ++c) CHECK(cells.at(c + 1) == std::to_string(rows[i][c]));
  }
  Json j = Json::parse(call({"table", "5", "--format", "json"}).out);
  CHECK(j["lower_triangle"].size() == 7);
  CHECK(call({"table", "4"}).out.rfind("n = 4", 0) == 0);
}

TEST_CASE("comb then fold") {
  const std::string passport = "2_1 2_2 2_3 3_1 -3_1 -3_2 -3_3";
  Result c = call({"comb", passport, "-3_2,2_1,3_1,2_2,-3_1,2_3,-3_3", "--format", "json"});
  REQUIRE(c.code == 0);
  Json j = Json::parse(c.out);
  ParsedForest f = forest_from_json(j["forest"]);
  CHECK(f.forest.is_connected());
  ParsedRegion region = region_from_json(j["region"]);
  CHECK(region.rects.size() == 6);

  std::string path = temp_path("fig3.json");
  write_file(path, j["forest"].dump(2));
  Result fold = call({"fold", path, "-3_2", "-3_3"});
  CHECK(fold.code == 0);
  CHECK(fold.out == "-3_2,2_1,3_1,2_2,-3_1,2_3,-3_3\n");

  std::string svg_path = temp_path("fig3.svg");
  Result render = call({"render", path, "--out", svg_path});
  CHECK(render.code == 0);
  CHECK(render.out.empty());
  std::ifstream in(svg_path);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") != std::string::npos);

  std::string both = temp_path("comb.json");
  write_file(both, c.out);
  Result dot = call({"render", both, "--to", "dot"});
  CHECK(dot.out.rfind("graph forest {", 0) == 0);

  std::string reg = temp_path("region.json");
  write_file(reg, j["region"].dump());
  CHECK(call({"render", reg}).out.find("<rect") != std::string::npos);
  CHECK(call({"render", reg, "--to", "dot"}).out.rfind("graph region {", 0) == 0);

  Result text = call({"comb", passport, "-3_2,2_1,3_1,2_2,-3_1,2_3,-3_3"});
  CHECK(text.out.find("marks: -3_2 -3_3") != std::string::npos);
  std::remove(path.c_str());
  std::remove(svg_path.c_str());
  std::remove(both.c_str());
  std::remove(reg.c_str());
}

TEST_CASE("enumerate lists trees and permutations") {
  Result r = call({"enumerate", "3 1_1 1_2 -4 -1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[0] == "2 trees for 3 1_1 1_2 -4 -1");
  Result list = call({"enumerate", "3 1_1 1_2 -4 -1", "--list", "positive_tree"});
  CHECK(lines(list.out).size() == 8);
  Json j = Json::parse(call({"enumerate", "3 1_1 1_2 -4 -1", "--format", "json"}).out);
  CHECK(j["count"] == 2);
  for (const auto& t : j["trees"]) CHECK_NOTHROW(forest_from_json(t["tree"]));
  Json brute = Json::parse(call({"enumerate", "3 1_1 1_2 -4 -1", "--brute-force", "--format", "json"}).out);
  CHECK(brute["trees"][0]["witnesses"].size() == 20);
  CHECK(call({"enumerate", "1^9 -9"}).code == 1);
  CHECK(call({"enumerate", "1^8 -8", "--max-n", "9", "--list", "positive_tree"}).code == 0);
}

TEST_CASE("classify and verify") {
  Result c = call({"classify", "2_1 2_2 2_3 -3_1 -3_2", "2_2,2_3,-3_2,-3_1,2_1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("tree: true") != std::string::npos);
  CHECK(c.out.find("mark_path: 2_2 -3_1 2_1") != std::string::npos);
  Json cj = Json::parse(call({"classify", "1^2 -1^2", "1_1,-1_1,1_2,-1_2", "--format", "json"}).out);
  CHECK(cj["tree"] == false);
  CHECK(cj["nonnegative"] == true);

  Result v = call({"verify", "3 1_1 1_2 -4 -1", "--seed", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  Json vj = Json::parse(call({"verify", "1^2 -1^2", "--format", "json"}).out);
  CHECK(vj["pass"] == true);
  CHECK(call({"verify", "1^9 -9"}).code == 1);
}

TEST_CASE("exit codes for bad input") {
  CHECK(call({}).code == 1);
  CHECK(call({"count"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  Result bad = call({"count", "1 1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("weight_sum") != std::string::npos);
  CHECK(call({"count", "1/0 -1"}).code == 1);
  CHECK(call({"classify", "1 -1", "1,1"}).code == 1);
  CHECK(call({"fold", temp_path("missing.json"), "1", "-1"}).code == 1);
  CHECK(call({"table", "4", "--format", "xml"}).code == 1);
  CHECK(call({"comb", "1 -1", "1,-1", "--format", "csv"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}
