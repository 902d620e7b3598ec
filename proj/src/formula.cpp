#include "lwbp/formula.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace lwbp {

namespace {

Rational power(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

BigInt power(const BigInt& x, unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

BigInt exact_divide(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string(what) + " is not divisible by N-1");
  return num / den;
}

class RecursivePositive {
 public:
  explicit RecursivePositive(const FullPassport& fp) : fp_(fp) {}

  BigInt count(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    BigInt total = count_pos_tree(fp_, mask);
    for (Mask s0 = (mask - 1) & mask; s0 != 0; s0 = (s0 - 1) & mask) {
      if (fp_.scaled_sum(s0) != 0) continue;
      BigInt trees = count_pos_tree(fp_, s0);
      if (trees == 0) continue;
      const unsigned n0 = popcount(s0);
      BigInt inner = 0;
      for_each_partition(fp_, mask ^ s0, [&](const Partition& p) {
        BigInt term = numerator(rising_factorial(Rational(n0 - 1), static_cast<unsigned>(p.size())));
        for (Mask b : p.blocks()) term *= count(b);
        inner += term;
      });
      total += trees * inner;
    }
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const FullPassport& fp_;
  std::map<Mask, BigInt> memo_;
};

std::string show(const Rational& a, const Rational& b) { return to_string(a) + " vs " + to_string(b); }

}  // namespace

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("stirling2 needs k <= n");
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Rational falling_factorial(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x - i;
  return r;
}

Rational rising_factorial(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

BigInt np_plus(const FullPassport& fp, Mask subset) {
  BigInt total = 0;
  for_each_partition(fp, subset, [&](const Partition& p) {
    if (p.size() % 2 == 1) {
      total += x_value(p);
    } else {
      total -= x_value(p);
    }
  });
  return total;
}

BigInt count_pos_tree(const FullPassport& fp, Mask subset) {
  const BigInt n1 = popcount(subset) - 1;
  BigInt total = 0;
  for_each_partition(fp, subset, [&](const Partition& p) {
    BigInt term = power(n1, static_cast<unsigned>(p.size() - 1)) * x_value(p);
    if (p.size() % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  });
  return total;
}

BigInt np_plus(const FullPassport& fp) { return np_plus(fp, fp.universe()); }

BigInt count_nonneg(const FullPassport& fp) {
  BigInt total = 0;
  for_each_partition(fp, [&](const Partition& p) { total += x_value(p); });
  return total;
}

BigInt count_pos_tree(const FullPassport& fp) { return count_pos_tree(fp, fp.universe()); }

BigInt kochetkov_count(const FullPassport& fp) {
  return exact_divide(count_pos_tree(fp), BigInt(fp.size() - 1), "positive tree count");
}

BigInt recursive_pos_count(const FullPassport& fp) { return RecursivePositive(fp).count(fp.universe()); }

BigInt count_zero_edge_trees(const FullPassport& fp) {
  const BigInt n1 = fp.size() - 1;
  BigInt total = 0;
  for_each_partition(fp, [&](const Partition& p) { total += power(n1, static_cast<unsigned>(p.size() - 1)) * x_value(p); });
  return exact_divide(total, n1, "zero-edge tree sum");
}

std::vector<PartitionTerm> kochetkov_terms(const FullPassport& fp) {
  const Rational n1 = fp.size() - 1;
  std::vector<PartitionTerm> out;
  for_each_partition(fp, [&](const Partition& p) {
    BigInt x = x_value(p);
    Rational term = power(n1, static_cast<unsigned>(p.size() - 1)) / n1 * x;
    if (p.size() % 2 == 0) term = -term;
    out.push_back(PartitionTerm{p, x, term});
  });
  return out;
}

CountReport count_report(const FullPassport& fp) {
  CountReport r;
  r.passport = fp.to_string();
  r.trees = kochetkov_count(fp);
  r.pos_tree_perms = count_pos_tree(fp);
  r.pos_perms = np_plus(fp);
  r.nonneg_perms = count_nonneg(fp);
  r.tree_perms = r.trees * fp.size() * (fp.size() - 1);
  r.partitions = count_partitions(fp);
  r.zero_edge_trees = count_zero_edge_trees(fp);
  return r;
}

bool IdentityReport::pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

IdentityResult check_stirling_inversion(unsigned n, const Rational& x) {
  Rational falling = 0, rising = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rational s(stirling2(n, k));
    falling += s * falling_factorial(x, k);
    Rational r = s * rising_factorial(x, k);
    rising += k % 2 ? Rational(-r) : r;
  }
  Rational lhs1 = power(x, n), lhs2 = power(Rational(-x), n);
  IdentityResult out{"stirling_inversion n=" + std::to_string(n) + " x=" + to_string(x), lhs1 == falling && lhs2 == rising,
                     ""};
  if (!out.pass) out.detail = show(lhs1, falling) + "; " + show(lhs2, rising);
  return out;
}

Rational subset_sum_power(const Rational& y, const std::vector<Rational>& xs, unsigned k) {
  if (xs.size() > 30) throw std::invalid_argument("subset_sum_power supports at most 30 terms");
  Rational total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << xs.size()); ++a) {
    Rational s = y;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (a >> i & 1) s += xs[i];
    }
    Rational t = power(s, k);
    total += std::popcount(a) % 2 ? Rational(-t) : t;
  }
  return total;
}

IdentityReport identity_suite(const FullPassport& fp, const std::vector<Rational>& x_samples) {
  IdentityReport report;
  auto parts = enumerate_partitions(fp);
  std::map<Mask, BigInt> np;
  for (const auto& p : parts) {
    for (Mask b : p.blocks()) {
      if (!np.count(b)) np[b] = np_plus(fp, b);
    }
  }
  auto block_product = [&](const Partition& p, std::map<Mask, BigInt>& counts) {
    BigInt prod = 1;
    for (Mask b : p.blocks()) prod *= counts.at(b);
    return prod;
  };

  for (const Rational& x : x_samples) {
    Rational lhs = 0, rhs = 0;
    for (const auto& p : parts) {
      const unsigned len = static_cast<unsigned>(p.size());
      lhs += rising_factorial(x, len) * Rational(block_product(p, np));
      rhs += power(x, len) * Rational(x_value(p));
    }
    IdentityResult r{"rising_power_sum x=" + to_string(x), lhs == rhs, ""};
    if (!r.pass) r.detail = show(lhs, rhs);
    report.results.push_back(r);
  }

  const BigInt target = factorial(static_cast<unsigned>(fp.size() - 1));
  BigInt sum = 0;
  for (const auto& p : parts) sum += factorial(static_cast<unsigned>(p.size() - 1)) * block_product(p, np);
  report.results.push_back({"ordered_block_sum", sum == target, sum == target ? "" : show(sum, target)});

  RecursivePositive rec(fp);
  std::map<Mask, BigInt> rec_counts;
  for (const auto& [b, v] : np) rec_counts[b] = rec.count(b);
  sum = 0;
  for (const auto& p : parts) sum += factorial(static_cast<unsigned>(p.size() - 1)) * block_product(p, rec_counts);
  report.results.push_back({"ordered_block_sum_recursive", sum == target, sum == target ? "" : show(sum, target)});

  bool vanish = true;
  std::string detail;
  for (const auto& p : parts) {
    std::vector<Rational> sizes;
    for (Mask b : p.blocks()) sizes.push_back(Rational(popcount(b)));
    for (unsigned k = 0; k < p.size(); ++k) {
      Rational v = subset_sum_power(Rational(-1), sizes, k);
      if (v != 0) {
        vanish = false;
        detail = format_partition(fp, p) + " k=" + std::to_string(k) + " gives " + to_string(v);
      }
    }
  }
  report.results.push_back({"subset_sum_power", vanish, detail});
  return report;
}

}  // namespace lwbp
