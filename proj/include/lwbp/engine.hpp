#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lwbp/combing.hpp"
#include "lwbp/formula.hpp"
#include "lwbp/passport.hpp"
#include "lwbp/permutation.hpp"
#include "lwbp/planetree.hpp"

namespace lwbp {

inline constexpr std::size_t kDefaultEngineLimit = 8;
inline constexpr std::size_t kMaxEngineLimit = 12;

struct CatalogEntry {
  std::string canonical;
  PlaneForest tree;
  /// Permutations that comb to this tree, in lexicographic order.
  std::vector<Permutation> witnesses;
};

/// Distinct trees of a passport, sorted by canonical form.
struct TreeCatalog {
  PassportRef passport;
  std::vector<CatalogEntry> trees;
};

/// Combs every positive tree permutation and groups by canonical form. Each
/// tree must be reached exactly N-1 times.
TreeCatalog enumerate_trees(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit);

/// Combs every tree permutation and forgets both marks. Each tree must be
/// reached exactly N(N-1) times.
TreeCatalog brute_force_trees(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit);

struct CheckStatus {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::string passport;
  std::vector<CheckStatus> checks;
  bool pass() const;
};

struct VerifyOptions {
  std::size_t max_n = kDefaultEngineLimit;
  /// Above this size the forest checks only visit tree permutations.
  std::size_t exhaustive_forest_limit = 8;
  std::vector<Rational> x_samples{0, 1, 2, 3, 4, 5, 6};
};

/// Formula against enumeration and brute force.
CheckStatus check_formulas(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit);
/// fold(comb(P)) = P on every tree permutation, comb(fold(T;a,b)) = (T;a,b)
/// on every marking of every tree.
CheckStatus check_roundtrip(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit);
/// Structure of every combed forest: connectivity, nesting, mark paths, roots.
CheckStatus check_forests(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit,
                          std::size_t exhaustive_limit = 8);
CheckStatus check_identities(const FullPassport& fp, const std::vector<Rational>& x_samples);
/// Shift bounds on all subsets, the perturbed positive count, containment in
/// the nonnegative class, and the block decomposition of positive orders.
CheckStatus check_perturbation(const PassportRef& passport, std::size_t max_n = kDefaultEngineLimit);

VerifyReport verify(const PassportRef& passport, const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Tables over integer partitions

using IntPartition = std::vector<unsigned>;

/// Partitions of n with parts in non-increasing order, listed in decreasing
/// lexicographic order: (n), (n-1, 1), ...
std::vector<IntPartition> integer_partitions(unsigned n);
/// e.g. "2 1^2"
std::string format_int_partition(const IntPartition& p);
/// Black vertices carry the parts of `black`, white ones the parts of `white`.
FullPassport passport_from_parts(const IntPartition& black, const IntPartition& white);

struct TreeTable {
  unsigned n = 0;
  std::vector<IntPartition> parts;
  /// values[r][c]: trees with black partition parts[r], white partition parts[c].
  std::vector<std::vector<BigInt>> values;
};

/// Full matrix; throws std::logic_error if it is not symmetric.
TreeTable tree_table(unsigned n);
std::string format_table_text(const TreeTable& t);
std::string format_table_csv(const TreeTable& t);

/// All full passports of total weight w for w = 1..max_weight, from pairs of
/// integer partitions.
std::vector<FullPassport> passports_up_to_weight(unsigned max_weight);

}  // namespace lwbp
