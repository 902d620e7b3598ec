#include <algorithm>
#include <bit>

#include "lwbp/errors.hpp"
#include "lwbp/passport.hpp"

namespace lwbp {

Partition::Partition(Mask universe, std::vector<Mask> blocks) : universe_(universe), blocks_(std::move(blocks)) {
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw ValidationError(ValidationKind::schema, "empty block in partition");
    if (seen & b) throw ValidationError(ValidationKind::schema, "overlapping blocks in partition");
    seen |= b;
  }
  if (seen != universe_) throw ValidationError(ValidationKind::schema, "blocks do not cover the index set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

namespace {

class PartitionWalker {
 public:
  PartitionWalker(const FullPassport& fp, Mask universe, const PartitionVisitor& visit)
      : fp_(fp), universe_(universe), visit_(visit) {
    if (fp.size() <= 16) {
      table_.assign(std::size_t{1} << fp.size(), 0);
      for (std::size_t m = 1; m < table_.size(); ++m) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
        table_[m] = table_[m & (m - 1)] + fp.scaled_weight(low);
      }
    }
  }

  void run() {
    if (sum(universe_) != 0) return;
    walk(universe_);
  }

 private:
  std::int64_t sum(Mask m) const { return table_.empty() ? fp_.scaled_sum(m) : table_[m]; }

  void walk(Mask remaining) {
    if (remaining == 0) {
      visit_(Partition(universe_, blocks_));
      return;
    }
    Mask low = remaining & (~remaining + 1);
    Mask rest = remaining ^ low;
    // Descending submasks: the largest block comes first.
    Mask s = rest;
    while (true) {
      Mask block = low | s;
      if (sum(block) == 0) {
        blocks_.push_back(block);
        walk(rest ^ s);
        blocks_.pop_back();
      }
      if (s == 0) break;
      s = (s - 1) & rest;
    }
  }

  const FullPassport& fp_;
  Mask universe_;
  const PartitionVisitor& visit_;
  std::vector<std::int64_t> table_;
  std::vector<Mask> blocks_;
};

}  // namespace

void for_each_partition(const FullPassport& fp, Mask subset, const PartitionVisitor& visit) {
  if (subset & ~fp.universe()) throw ValidationError(ValidationKind::mismatched_passport, "subset outside index set");
  if (subset == 0) return;
  PartitionWalker(fp, subset, visit).run();
}

void for_each_partition(const FullPassport& fp, const PartitionVisitor& visit) {
  for_each_partition(fp, fp.universe(), visit);
}

std::vector<Partition> enumerate_partitions(const FullPassport& fp) {
  std::vector<Partition> out;
  for_each_partition(fp, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt count_partitions(const FullPassport& fp) {
  BigInt n = 0;
  for_each_partition(fp, [&](const Partition&) { ++n; });
  return n;
}

bool is_decomposable(const FullPassport& fp) {
  // Some proper block containing position 0 is zero-sum iff a second partition exists.
  Mask rest = fp.universe() ^ 1;
  for (Mask s = (rest - 1) & rest;; s = (s - 1) & rest) {
    if (fp.scaled_sum(s | 1) == 0) return true;
    if (s == 0) break;
  }
  return false;
}

std::size_t max_partition_length(const FullPassport& fp) {
  std::size_t m = 0;
  for_each_partition(fp, [&](const Partition& p) { m = std::max(m, p.size()); });
  return m;
}

BigInt x_value(const Partition& p) {
  BigInt x = 1;
  for (Mask b : p.blocks()) x *= factorial(static_cast<unsigned>(std::popcount(b)) - 1);
  return x;
}

bool is_finer(const Partition& finer, const Partition& coarser) {
  if (finer.universe() != coarser.universe()) {
    throw ValidationError(ValidationKind::mismatched_passport, "partitions of different index sets");
  }
  for (Mask q : finer.blocks()) {
    bool inside = std::any_of(coarser.blocks().begin(), coarser.blocks().end(),
                              [q](Mask p) { return (q & ~p) == 0; });
    if (!inside) return false;
  }
  return true;
}

std::string format_block(const FullPassport& fp, Mask block) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (!(block >> i & 1)) continue;
    if (!first) s += ',';
    s += fp.label_text(i);
    first = false;
  }
  return s + "}";
}

std::string format_partition(const FullPassport& fp, const Partition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += format_block(fp, p.blocks()[i]);
  }
  return s + "}";
}

}  // namespace lwbp
