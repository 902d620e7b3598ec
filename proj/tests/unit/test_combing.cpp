#include <random>

#include "doctest.h"
#include "lwbp/combing.hpp"
#include "lwbp/engine.hpp"
#include "oracles.hpp"

using namespace lwbp;

namespace {

PassportRef ref(const char* text) { return make_passport_ref(FullPassport::parse(text)); }

std::set<std::string> edge_set(const PlaneForest& f) {
  std::set<std::string> out;
  for (const Edge& e : f.edges()) {
    out.insert(f.passport().label_text(e.black) + "-" + f.passport().label_text(e.white) + ":" + to_string(e.weight));
  }
  return out;
}

std::vector<oracle::Rect> as_oracle(const std::vector<HorizontalRect>& rects) {
  std::vector<oracle::Rect> out;
  for (const auto& r : rects) out.push_back(oracle::Rect{r.k, r.l, r.lo, r.hi, r.side == Side::above});
  std::sort(out.begin(), out.end());
  return out;
}

const char* const kPassports[] = {
    "3 1_1 1_2 -4 -1", "1^2 -1^2", "2^3 -3^2", "2 1 1 -2 -2", "3 2 1 -3 -2 -1", "1/2 1/2 1 -1 -1",
    "4 1^2 -2^3",      "1^3 -1^3", "2 2 -1^4",
};

/// Checks the structural promises of comb on one permutation.
void check_comb(const Permutation& p) {
  const FullPassport& fp = p.passport();
  TwiceMarkedForest t = comb(p);
  const PlaneForest& f = t.forest;
  PermClass c = classify(p);
  CHECK(f.is_connected() == c.tree);
  CHECK(f.edges().size() + f.component_count() == fp.size());
  CHECK(t.a == p.at(1));
  CHECK(t.b == p.at(p.size()));
  std::vector<Rational> incident(fp.size(), 0);
  for (const Edge& e : f.edges()) {
    CHECK(fp.is_black(e.black));
    CHECK_FALSE(fp.is_black(e.white));
    CHECK(e.weight > 0);
    incident[e.black] += e.weight;
    incident[e.white] += e.weight;
  }
  for (std::size_t v = 0; v < fp.size(); ++v) CHECK(incident[v] == abs(fp.weight(v)));
}

}  // namespace

TEST_CASE("region columns") {
  auto fig2 = ref("2_1 2_2 2_3 -3_1 -3_2");
  Region r = build_region(Permutation::parse(fig2, "2_2,2_3,-3_2,-3_1,2_1"));
  auto cols = r.columns();
  REQUIRE(cols.size() == 5);
  std::vector<Rational> signed_height;
  for (const auto& c : cols) signed_height.push_back(c.y_max > 0 ? c.y_max : c.y_min);
  CHECK(signed_height == std::vector<Rational>{2, 4, 1, -2, 0});
  CHECK(cols[3].y_min == -2);
  CHECK(cols[3].y_max == 0);

  auto edge = ref("1 -1");
  auto c2 = build_region(Permutation::parse(edge, "1,-1")).columns();
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].y_max == 1);
  CHECK(c2[1].y_max == c2[1].y_min);

  auto a1 = ref("3 1_1 1_2 -4 -1");
  auto c3 = build_region(Permutation::parse(a1, "3,1_1,1_2,-4,-1")).columns();
  std::vector<Rational> h3;
  for (const auto& c : c3) h3.push_back(c.y_max);
  CHECK(h3 == std::vector<Rational>{3, 4, 5, 1, 0});
}

TEST_CASE("edge predicate on the running example") {
  auto fig2 = ref("2_1 2_2 2_3 -3_1 -3_2");
  Permutation p = Permutation::parse(fig2, "2_2,2_3,-3_2,-3_1,2_1");
  auto e13 = edge_exists(p, 1, 3);
  REQUIRE(e13);
  CHECK(e13->weight == 1);
  CHECK(e13->side == Side::above);
  auto e45 = edge_exists(p, 4, 5);
  REQUIRE(e45);
  CHECK(e45->weight == 2);
  CHECK(e45->side == Side::below);
  CHECK_FALSE(edge_exists(p, 2, 5));
}

TEST_CASE("decomposition of the running example") {
  auto fig2 = ref("2_1 2_2 2_3 -3_1 -3_2");
  Permutation p = Permutation::parse(fig2, "2_2,2_3,-3_2,-3_1,2_1");
  auto rects = horizontal_decomposition(build_region(p));
  REQUIRE(rects.size() == 4);
  CHECK(rects[0] == HorizontalRect{1, 3, 1, 2, Side::above});
  CHECK(rects[1] == HorizontalRect{1, 4, 0, 1, Side::above});
  CHECK(rects[2] == HorizontalRect{2, 3, 2, 4, Side::above});
  CHECK(rects[3] == HorizontalRect{4, 5, -2, 0, Side::below});
  CHECK(lengths_decrease_outward(rects));

  TwiceMarkedForest t = comb(p);
  CHECK(t.forest.is_connected());
  CHECK(edge_set(t.forest) == std::set<std::string>{"2_3--3_2:2", "2_2--3_2:1", "2_2--3_1:1", "2_1--3_1:2"});
  CHECK(fig2->label_text(t.a) == "2_2");
  CHECK(fig2->label_text(t.b) == "2_1");
}

TEST_CASE("single edge") {
  auto edge = ref("1 -1");
  Permutation p = Permutation::parse(edge, "1,-1");
  auto rects = horizontal_decomposition(build_region(p));
  REQUIRE(rects.size() == 1);
  CHECK(rects[0] == HorizontalRect{1, 2, 0, 1, Side::above});
  TwiceMarkedForest t = comb(p);
  CHECK(t.forest.edges().size() == 1);
  CHECK(t.a == 0);
  CHECK(t.b == 1);
}

TEST_CASE("forest of a permutation touching zero") {
  // Heights 0 1 2 3 2 1 2 0: the cut at height 1 separates the middle hump
  // from the outer rectangle.
  auto fp = ref("1_1 1_2 1_3 1_4 -1_1 -1_2 -2_1");
  Permutation p = Permutation::parse(fp, "1_1,1_2,1_3,-1_1,-1_2,1_4,-2_1");
  auto rects = horizontal_decomposition(build_region(p));
  REQUIRE(rects.size() == 4);
  CHECK(rects[0] == HorizontalRect{1, 7, 0, 1, Side::above});
  CHECK(rects[1] == HorizontalRect{2, 5, 1, 2, Side::above});
  CHECK(rects[2] == HorizontalRect{3, 4, 2, 3, Side::above});
  CHECK(rects[3] == HorizontalRect{6, 7, 1, 2, Side::above});
  TwiceMarkedForest t = comb(p);
  CHECK(t.forest.component_count() == 3);
  CHECK(edge_set(t.forest) == std::set<std::string>{"1_1--2_1:1", "1_4--2_1:1", "1_2--1_2:1", "1_3--1_1:1"});
  const auto& comp = t.forest.components();
  CHECK(comp[fp->index_of("1_1")] == comp[fp->index_of("1_4")]);
  CHECK(comp[fp->index_of("1_1")] == comp[fp->index_of("-2_1")]);
  CHECK(comp[fp->index_of("1_2")] == comp[fp->index_of("-1_2")]);
  CHECK(comp[fp->index_of("1_3")] == comp[fp->index_of("-1_1")]);
  CHECK(comp[fp->index_of("1_2")] != comp[fp->index_of("1_3")]);
}

TEST_CASE("decomposition matches the raster oracle on every order") {
  for (const char* text : kPassports) {
    auto passport = ref(text);
    CAPTURE(text);
    auto w = oracle::weights(*passport);
    for_each_permutation(passport, PermFilter::all, [&](const Permutation& p) {
      std::vector<Rational> h = oracle::heights(w, p.order());
      auto rects = horizontal_decomposition(build_region(p));
      CHECK(as_oracle(rects) == oracle::rasterize(h));
      CHECK(lengths_decrease_outward(rects));
      for (const auto& r : rects) {
        auto e = edge_exists(p, r.k, r.l);
        REQUIRE(e);
        CHECK(e->weight == r.weight());
        CHECK(e->side == r.side);
      }
      check_comb(p);
    });
  }
}

TEST_CASE("nested spans do not cross") {
  std::mt19937_64 rng(20241015);
  auto passport = ref("5 3 2 2 1 -4 -3 -3 -2 -1");
  std::vector<std::size_t> order(passport->size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (int trial = 0; trial < 300; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    Permutation p(passport, order);
    auto rects = horizontal_decomposition(build_region(p));
    for (const auto& outer : rects) {
      for (const auto& inner : rects) {
        bool k_in = outer.k < inner.k && inner.k < outer.l;
        bool l_in = outer.k < inner.l && inner.l < outer.l;
        CHECK_FALSE((k_in != l_in && inner.k != outer.k && inner.l != outer.l && inner.k != outer.l &&
                     inner.l != outer.k));
      }
    }
    check_comb(p);
  }
}

TEST_CASE("monotonicity check rejects a crafted violation") {
  std::vector<HorizontalRect> bad{{1, 3, 0, 1, Side::above}, {1, 4, 1, 2, Side::above}};
  CHECK_FALSE(lengths_decrease_outward(bad));
  std::vector<HorizontalRect> good{{1, 4, 0, 1, Side::above}, {1, 3, 1, 2, Side::above}};
  CHECK(lengths_decrease_outward(good));
}
