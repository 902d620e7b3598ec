#pragma once

#include <string>
#include <vector>

#include "lwbp/passport.hpp"

namespace lwbp {

/// Number of k-block partitions of an n-set. Throws std::out_of_range if k > n.
BigInt stirling2(unsigned n, unsigned k);
/// x (x-1) ... (x-n+1)
Rational falling_factorial(const Rational& x, unsigned n);
/// x (x+1) ... (x+n-1)
Rational rising_factorial(const Rational& x, unsigned n);

/// Count of positive permutations: sum of (-1)^(|p|-1) X(p).
BigInt np_plus(const FullPassport& fp);
/// Count of nonnegative permutations: sum of X(p).
BigInt count_nonneg(const FullPassport& fp);
/// Count of positive tree permutations: sum of (-1)^(|p|-1) (N-1)^(|p|-1) X(p).
BigInt count_pos_tree(const FullPassport& fp);
/// Number of labeled trees: count_pos_tree / (N-1), checked exact.
BigInt kochetkov_count(const FullPassport& fp);
/// Positive permutations counted by peeling off the tree part and the
/// nested zero-sum pieces; agrees with np_plus.
BigInt recursive_pos_count(const FullPassport& fp);
/// Trees that may also carry zero-weight edges: sum of (N-1)^(|p|-2) X(p).
BigInt count_zero_edge_trees(const FullPassport& fp);

/// Subset restricted variants; `subset` must be zero-sum.
BigInt np_plus(const FullPassport& fp, Mask subset);
BigInt count_pos_tree(const FullPassport& fp, Mask subset);

/// One summand of the tree count: (-1)^(|p|-1) (N-1)^(|p|-2) X(p).
struct PartitionTerm {
  Partition partition;
  BigInt x;
  Rational term;
};

std::vector<PartitionTerm> kochetkov_terms(const FullPassport& fp);

struct CountReport {
  std::string passport;
  BigInt trees;
  BigInt pos_tree_perms;
  BigInt pos_perms;
  BigInt nonneg_perms;
  BigInt tree_perms;
  BigInt partitions;
  BigInt zero_edge_trees;
};

CountReport count_report(const FullPassport& fp);

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool pass() const;
};

/// x^n = sum S(n,k) (x)_k and (-x)^n = sum S(n,k) (-1)^k x^(k).
IdentityResult check_stirling_inversion(unsigned n, const Rational& x);

/// sum over A of [m] of (-1)^|A| (y + sum_{i in A} x_i)^k; zero whenever k < m.
Rational subset_sum_power(const Rational& y, const std::vector<Rational>& xs, unsigned k);

/// Partition identities at every sample x:
///  - sum x^(|p|) prod NP+(blocks) = sum x^|p| X(p)
///  - sum (|p|-1)! prod NP+(blocks) = (N-1)!
///  - the same with blocks counted by recursive_pos_count
///  - subset_sum_power vanishes on block sizes with y = -1, k < |p|
IdentityReport identity_suite(const FullPassport& fp, const std::vector<Rational>& x_samples);

}  // namespace lwbp
