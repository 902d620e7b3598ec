#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwbp/passport.hpp"

namespace lwbp {

/// An ordering (s_1, ..., s_N) of the index set of a full passport.
///
/// `order()[j]` is the canonical position of the label at 1-based position
/// j + 1. Cumulative sums are cached as scaled integers.
class Permutation {
 public:
  Permutation(PassportRef passport, std::vector<std::size_t> order);

  /// Comma separated label tokens, e.g. `2_2,2_3,-3_2,-3_1,2_1`. Surrounding
  /// parentheses and whitespace are ignored.
  static Permutation parse(PassportRef passport, std::string_view text);

  const PassportRef& passport_ref() const noexcept { return passport_; }
  const FullPassport& passport() const noexcept { return *passport_; }
  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  /// Canonical position of s_pos, 1 <= pos <= N.
  std::size_t at(std::size_t pos) const { return order_.at(pos - 1); }

  /// H_0..H_N multiplied by passport().scale().
  std::span<const std::int64_t> scaled_heights() const noexcept { return heights_; }
  /// Exact H_0..H_N.
  std::vector<Rational> cumulative_sums() const;
  Rational height(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return *a.passport_ == *b.passport_ && a.order_ == b.order_;
  }

 private:
  PassportRef passport_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> heights_;
};

struct PermClass {
  bool positive = false;
  bool nonnegative = false;
  bool tree = false;
  bool positive_tree = false;
  /// Positions i with H_{i-1} * H_i < 0; filled for tree permutations only.
  std::vector<std::size_t> sign_changes;
};

/// Classifies a height sequence H_0..H_N (any positive scaling).
PermClass classify_heights(std::span<const std::int64_t> heights);
PermClass classify(const Permutation& p);

std::vector<std::size_t> sign_changing_points(const Permutation& p);
/// Canonical positions of the labels at positions (1, sign changes..., N).
std::vector<std::size_t> mark_path(const Permutation& p);

enum class PermFilter { all, positive, nonnegative, tree, positive_tree };

PermFilter parse_perm_filter(std::string_view name);
const char* to_string(PermFilter filter) noexcept;
bool matches(const PermClass& c, PermFilter filter) noexcept;

inline constexpr std::size_t kDefaultPermutationLimit = 12;

/// Streams the permutations of a class in lexicographic order of canonical
/// positions. Throws SizeGuardError when N exceeds `max_n`.
void for_each_permutation(const PassportRef& passport, PermFilter filter,
                          const std::function<void(const Permutation&)>& visit,
                          std::size_t max_n = kDefaultPermutationLimit);

std::vector<Permutation> list_permutations(const PassportRef& passport, PermFilter filter,
                                           std::size_t max_n = kDefaultPermutationLimit);

struct ClassCounts {
  BigInt all;
  BigInt positive;
  BigInt nonnegative;
  BigInt tree;
  BigInt positive_tree;

  const BigInt& get(PermFilter filter) const;
};

/// One pass over all N! orders.
ClassCounts count_classes(const FullPassport& fp, std::size_t max_n = kDefaultPermutationLimit);
BigInt count_permutations(const FullPassport& fp, PermFilter filter, std::size_t max_n = kDefaultPermutationLimit);

}  // namespace lwbp
