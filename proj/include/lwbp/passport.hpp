#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwbp/rational.hpp"

namespace lwbp {

/// An element of a passport's index set: a weight plus a distinguishing subscript.
struct IndexLabel {
  Weight weight;
  unsigned subscript = 1;
  /// Written as `w_k` in the input; such labels keep their subscript when printed.
  bool explicit_subscript = false;

  friend bool operator==(const IndexLabel& a, const IndexLabel& b) {
    return a.weight == b.weight && a.subscript == b.subscript;
  }
};

/// Canonical order: positives by descending weight, then negatives by
/// descending magnitude; ties broken by ascending subscript.
bool canonical_less(const IndexLabel& a, const IndexLabel& b);

/// Parses a single `w[_k]` token. A missing subscript means 1.
IndexLabel parse_label(std::string_view token);

/// `w` or `w_k`; the subscript is printed when `show_subscript` is set.
std::string format_label(const IndexLabel& label, bool show_subscript);

struct PassportEntry {
  IndexLabel label;
  unsigned multiplicity = 1;
};

/// Weighted vertex data with multiplicities, kept in canonical order.
///
/// Construction validates that the weighted sum is exactly zero, that both
/// colors occur and that labels are unique.
class Passport {
 public:
  explicit Passport(std::vector<PassportEntry> entries);

  /// Power notation: whitespace separated `w[_k][^m]` terms.
  static Passport parse(std::string_view text);

  const std::vector<PassportEntry>& entries() const noexcept { return entries_; }

  unsigned black_count() const noexcept { return black_count_; }
  unsigned white_count() const noexcept { return white_count_; }
  unsigned vertex_count() const noexcept { return black_count_ + white_count_; }
  /// Half the sum of |weight| over all vertices.
  const Rational& total_weight() const noexcept { return total_weight_; }
  bool is_full() const noexcept;

  /// Canonical power notation, e.g. `3 1_1 1_2 -4 -1` or `1^3 -3`.
  std::string to_string() const;

 private:
  std::vector<PassportEntry> entries_;
  unsigned black_count_ = 0;
  unsigned white_count_ = 0;
  Rational total_weight_;
};

/// Whether any weighted bicolored plane tree realizes the passport:
/// (p + q - 1) * gcd(wt) <= total weight, with gcd taken over rationals.
bool existence_check(const Passport& passport);

/// Subset of the index set of a full passport, bit i = canonical position i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxFullPassportSize = 62;

/// Passport with every multiplicity equal to one. Position i in canonical
/// order identifies the label with the integer i (0-based internally).
///
/// Weights are also held as integers scaled by the lcm of the denominators,
/// so every sign and equality test on sums runs on machine integers.
class FullPassport {
 public:
  explicit FullPassport(std::vector<IndexLabel> labels);

  /// Parses power notation and expands multiplicities.
  static FullPassport parse(std::string_view text);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<IndexLabel>& labels() const noexcept { return labels_; }
  const IndexLabel& label(std::size_t i) const { return labels_.at(i); }
  const Rational& weight(std::size_t i) const { return labels_.at(i).weight.value(); }
  bool is_black(std::size_t i) const { return labels_.at(i).weight.is_black(); }

  /// weight(i) == scaled_weight(i) / scale()
  std::int64_t scaled_weight(std::size_t i) const { return scaled_.at(i); }
  std::span<const std::int64_t> scaled_weights() const noexcept { return scaled_; }
  const BigInt& scale() const noexcept { return scale_; }

  std::int64_t scaled_sum(Mask subset) const;
  Mask universe() const noexcept;

  std::string label_text(std::size_t i) const;
  std::optional<std::size_t> find(const IndexLabel& label) const;
  /// Resolves a label token such as `-3_2`; throws ValidationError if absent.
  std::size_t index_of(std::string_view token) const;

  /// Subpassport on the given positions; order is inherited.
  FullPassport sub(Mask subset) const;

  Passport as_passport() const;
  std::string to_string() const;

  friend bool operator==(const FullPassport& a, const FullPassport& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<IndexLabel> labels_;
  std::vector<std::int64_t> scaled_;
  BigInt scale_;
  std::vector<bool> show_subscript_;
};

FullPassport expand_full(const Passport& passport);

/// Shared immutable handle; permutations and forests refer to their passport through it.
using PassportRef = std::shared_ptr<const FullPassport>;

inline PassportRef make_passport_ref(FullPassport fp) {
  return std::make_shared<const FullPassport>(std::move(fp));
}

// ---------------------------------------------------------------------------
// Partitions into zero-sum blocks

/// A set partition of the index set (or of a subset of it) into nonempty,
/// pairwise disjoint blocks. Blocks are sorted by their smallest element.
class Partition {
 public:
  Partition(Mask universe, std::vector<Mask> blocks);

  Mask universe() const noexcept { return universe_; }
  const std::vector<Mask>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Mask universe_;
  std::vector<Mask> blocks_;
};

/// Sequence of blocks whose underlying set is a partition.
struct OrderedPartition {
  std::vector<Mask> blocks;
};

using PartitionVisitor = std::function<void(const Partition&)>;

/// Visits every partition of `subset` into zero-sum blocks exactly once. The
/// first partition visited is the trivial one-block partition. Each new block
/// is seeded with the smallest unassigned element.
void for_each_partition(const FullPassport& fp, Mask subset, const PartitionVisitor& visit);
void for_each_partition(const FullPassport& fp, const PartitionVisitor& visit);

std::vector<Partition> enumerate_partitions(const FullPassport& fp);
BigInt count_partitions(const FullPassport& fp);
bool is_decomposable(const FullPassport& fp);
std::size_t max_partition_length(const FullPassport& fp);

/// Product over blocks of (|block| - 1)!.
BigInt x_value(const Partition& p);

/// True iff every block of `finer` lies inside some block of `coarser`.
bool is_finer(const Partition& finer, const Partition& coarser);

std::string format_block(const FullPassport& fp, Mask block);
std::string format_partition(const FullPassport& fp, const Partition& p);

// ---------------------------------------------------------------------------
// Perturbation

/// A non-decomposable passport obtained by adding a small zero-sum shift to
/// the weights of a decomposable one.
struct PerturbedPassport {
  FullPassport base;
  FullPassport perturbed;
  /// Shift per base position.
  std::vector<Rational> epsilon;
  /// Base position of the label with the negative shift.
  std::size_t s_minus = 0;
  /// Minimum nonzero |subset sum| of the base weights.
  Rational e0;
  Rational eps0;
  /// perturbed position -> base position
  std::vector<std::size_t> to_base;
  /// Set when the input was already non-decomposable; epsilon is then zero.
  bool unchanged = false;
};

PerturbedPassport perturb(const FullPassport& fp);

}  // namespace lwbp
