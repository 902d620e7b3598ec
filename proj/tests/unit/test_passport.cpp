#include <random>

#include "doctest.h"
#include "lwbp/engine.hpp"
#include "lwbp/errors.hpp"
#include "oracles.hpp"

using namespace lwbp;

namespace {

ValidationKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a ValidationError");
  return ValidationKind::schema;
}

std::vector<std::string> labels_of(const FullPassport& fp) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < fp.size(); ++i) out.push_back(fp.label_text(i));
  return out;
}

}  // namespace

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("passport text in canonical order") {
  FullPassport fp = FullPassport::parse("-1 1_2 -4 3 1_1");
  CHECK(labels_of(fp) == std::vector<std::string>{"3", "1_1", "1_2", "-4", "-1"});
  CHECK(fp.to_string() == "3 1_1 1_2 -4 -1");
  CHECK(fp.size() == 5);

  FullPassport ex = FullPassport::parse("1^3 -3");
  CHECK(ex.to_string() == "1_1 1_2 1_3 -3");

  Passport power = Passport::parse("1^3 -3");
  CHECK(power.to_string() == "1^3 -3");
  CHECK(power.vertex_count() == 4);
  CHECK(power.total_weight() == 3);
  CHECK_FALSE(power.is_full());

  Passport merged = Passport::parse("1 1 -2");
  CHECK(merged.to_string() == "1^2 -2");

  FullPassport written = FullPassport::parse("3_1 2 -5");
  CHECK(written.to_string() == "3_1 2 -5");
  CHECK(written.index_of("3") == written.index_of("3_1"));

  FullPassport rational = FullPassport::parse("1/2 3/2 -2");
  CHECK(rational.scale() == 2);
  CHECK(rational.scaled_weight(0) == 3);
  CHECK(rational.scaled_sum(rational.universe()) == 0);
}

TEST_CASE("passport validation errors") {
  CHECK(kind_of([] { Passport::parse("1 1"); }) == ValidationKind::weight_sum);
  CHECK(kind_of([] { Passport::parse("1 -1 0"); }) == ValidationKind::zero_weight);
  CHECK(kind_of([] { Passport::parse("1_1 1_1 -2"); }) == ValidationKind::duplicate_label);
  CHECK(kind_of([] { FullPassport::parse("2 -1 -2"); }) == ValidationKind::weight_sum);
  CHECK(kind_of([] { FullPassport::parse("3 1 -4").index_of("2"); }) == ValidationKind::unknown_label);
  CHECK_THROWS_AS(Passport::parse(""), ParseError);
  CHECK_THROWS_AS(Passport::parse("1^0 -1"), ParseError);
  CHECK_THROWS_AS(parse_label("1^2"), ParseError);
}

TEST_CASE("zero-sum partitions of the worked examples") {
  FullPassport a1 = FullPassport::parse("3 1_1 1_2 -4 -1");
  auto parts = enumerate_partitions(a1);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].size() == 1);
  CHECK(format_partition(a1, parts[0]) == "{{3,1_1,1_2,-4,-1}}");
  std::set<std::string> rest{format_partition(a1, parts[1]), format_partition(a1, parts[2])};
  CHECK(rest == std::set<std::string>{"{{3,1_1,-4},{1_2,-1}}", "{{3,1_2,-4},{1_1,-1}}"});
  CHECK(x_value(parts[0]) == 24);
  CHECK(x_value(parts[1]) == 2);
  CHECK(max_partition_length(a1) == 2);
  CHECK(is_decomposable(a1));

  FullPassport nd = FullPassport::parse("2^3 -3^2");
  CHECK(count_partitions(nd) == 1);
  CHECK_FALSE(is_decomposable(nd));
  CHECK(max_partition_length(nd) == 1);

  FullPassport sq = FullPassport::parse("1^2 -1^2");
  CHECK(count_partitions(sq) == 3);
  CHECK(max_partition_length(sq) == 2);
}

TEST_CASE("partition enumeration agrees with set-partition oracle") {
  auto passports = passports_up_to_weight(5);
  passports.push_back(FullPassport::parse("1/2 1/2_2 1/3 2/3 -1 -1_2"));
  passports.push_back(FullPassport::parse("2 2_2 1 1_2 1_3 -3 -2 -1 -1_2"));
  for (const auto& fp : passports) {
    CAPTURE(fp.to_string());
    std::set<std::vector<Mask>> expected;
    for (auto& p : oracle::zero_sum_partitions(fp)) expected.insert(p);
    std::set<std::vector<Mask>> seen;
    std::size_t visits = 0;
    bool first_trivial = false;
    for_each_partition(fp, [&](const Partition& p) {
      if (visits++ == 0) first_trivial = p.size() == 1;
      std::vector<Mask> b = p.blocks();
      std::sort(b.begin(), b.end());
      seen.insert(b);
    });
    CHECK(first_trivial);
    CHECK(visits == expected.size());
    CHECK(seen == expected);
    CHECK(count_partitions(fp) == expected.size());
    CHECK(is_decomposable(fp) == (expected.size() > 1));
  }
}

TEST_CASE("refinement order") {
  FullPassport sq = FullPassport::parse("1^2 -1^2");
  auto parts = enumerate_partitions(sq);
  for (const auto& q : parts) {
    CHECK(is_finer(q, parts[0]));
    CHECK(is_finer(q, q));
  }
  CHECK_FALSE(is_finer(parts[0], parts[1]));
  CHECK_FALSE(is_finer(parts[1], parts[2]));
  CHECK_THROWS_AS(Partition(0b11, {0b01}), ValidationError);
  CHECK_THROWS_AS(Partition(0b11, {0b11, 0b01}), ValidationError);
}

TEST_CASE("existence criterion matches a brute-force tree search") {
  CHECK(existence_check(Passport::parse("1^3 -3")));
  CHECK_FALSE(existence_check(Passport::parse("1^2 -1^2")));
  CHECK(existence_check(Passport::parse("2 -2")));
  CHECK(oracle::count_plane_trees(FullPassport::parse("1^2 -1^2")) == 0);
  for (unsigned w = 1; w <= 5; ++w) {
    for (const auto& b : integer_partitions(w)) {
      for (const auto& c : integer_partitions(w)) {
        FullPassport fp = passport_from_parts(b, c);
        CAPTURE(fp.to_string());
        CHECK(existence_check(fp.as_passport()) == (oracle::count_plane_trees(fp) > 0));
      }
    }
  }
  CHECK(existence_check(Passport::parse("1/2 1/2 -1")));
  CHECK_FALSE(existence_check(Passport::parse("1/2 1/2 -1/2 -1/2")));
}

TEST_CASE("perturbation of a small decomposable passport") {
  FullPassport sq = FullPassport::parse("1^2 -1^2");
  PerturbedPassport p = perturb(sq);
  CHECK_FALSE(p.unchanged);
  CHECK(p.e0 == 1);
  CHECK(p.eps0 == Rational(1, 3));
  CHECK(p.s_minus == 3);
  std::vector<Rational> shifted;
  for (std::size_t i = 0; i < sq.size(); ++i) shifted.push_back(sq.weight(i) + p.epsilon[i]);
  CHECK(shifted == std::vector<Rational>{Rational(25, 24), Rational(25, 24), Rational(-23, 24), Rational(-9, 8)});
  CHECK_FALSE(is_decomposable(p.perturbed));
  for (std::size_t i = 0; i < p.perturbed.size(); ++i) {
    CHECK(p.perturbed.weight(i) == sq.weight(p.to_base[i]) + p.epsilon[p.to_base[i]]);
  }

  PerturbedPassport same = perturb(FullPassport::parse("2^3 -3^2"));
  CHECK(same.unchanged);
  for (const auto& e : same.epsilon) CHECK(e == 0);
  CHECK(same.perturbed == same.base);
}

TEST_CASE("perturbation bounds on every subset") {
  for (const auto& fp : passports_up_to_weight(5)) {
    if (!is_decomposable(fp)) continue;
    CAPTURE(fp.to_string());
    PerturbedPassport p = perturb(fp);
    CHECK_FALSE(is_decomposable(p.perturbed));
    Rational total = 0;
    for (const auto& e : p.epsilon) total += e;
    CHECK(total == 0);
    const std::size_t n = fp.size();
    for (Mask s = 1; s < fp.universe(); ++s) {
      Rational base = 0, shift = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> i & 1) base += fp.weight(i), shift += p.epsilon[i];
      }
      CHECK(abs(shift) < p.e0);
      if (base == 0) CHECK(((s >> p.s_minus & 1) ? shift < 0 : shift > 0));
      if (base != 0) CHECK(((base + shift > 0) == (base > 0)));
    }
  }
}
