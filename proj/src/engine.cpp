#include "lwbp/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "lwbp/errors.hpp"

namespace lwbp {

namespace {

void guard(const FullPassport& fp, std::size_t max_n) {
  if (max_n > kMaxEngineLimit) {
    throw SizeGuardError("the vertex limit can be raised to at most " + std::to_string(kMaxEngineLimit));
  }
  if (fp.size() > max_n) {
    throw SizeGuardError("passport has " + std::to_string(fp.size()) + " labels; the limit is " + std::to_string(max_n) +
                         " (raise it with --max-n)");
  }
}

TreeCatalog group_trees(const PassportRef& passport, PermFilter filter, std::size_t expected, std::size_t max_n) {
  guard(*passport, max_n);
  std::map<std::string, CatalogEntry> groups;
  for_each_permutation(
      passport, filter,
      [&](const Permutation& p) {
        TwiceMarkedForest t = comb(p);
        std::string key = t.forest.canonical_form();
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, CatalogEntry{key, t.forest, {}}).first;
        it->second.witnesses.push_back(p);
      },
      max_n);
  TreeCatalog out{passport, {}};
  for (auto& [key, entry] : groups) {
    if (entry.witnesses.size() != expected) {
      throw std::logic_error("tree " + key + " reached " + std::to_string(entry.witnesses.size()) + " times, expected " +
                             std::to_string(expected));
    }
    out.trees.push_back(std::move(entry));
  }
  return out;
}

/// Collects failure messages; a check passes when none were recorded.
class Findings {
 public:
  template <class A, class B>
  void expect_eq(const std::string& what, const A& a, const B& b) {
    if (!(a == b)) {
      std::ostringstream os;
      os << what << ": " << a << " != " << b;
      add(os.str());
    }
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) add(what);
  }
  void add(const std::string& msg) {
    if (count_++ < 5) detail_ += (detail_.empty() ? "" : "; ") + msg;
  }
  CheckStatus finish(std::string name, double seconds) const {
    std::string d = detail_;
    if (count_ > 5) d += "; " + std::to_string(count_ - 5) + " more";
    return CheckStatus{std::move(name), count_ == 0, d, seconds};
  }

 private:
  std::size_t count_ = 0;
  std::string detail_;
};

template <class F>
CheckStatus timed(const std::string& name, F&& body) {
  auto start = std::chrono::steady_clock::now();
  Findings f;
  try {
    body(f);
  } catch (const SizeGuardError&) {
    throw;
  } catch (const std::exception& e) {
    f.add(std::string("exception: ") + e.what());
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return f.finish(name, dt.count());
}

std::set<std::string> keys(const TreeCatalog& c) {
  std::set<std::string> s;
  for (const auto& e : c.trees) s.insert(e.canonical);
  return s;
}

}  // namespace

TreeCatalog enumerate_trees(const PassportRef& passport, std::size_t max_n) {
  return group_trees(passport, PermFilter::positive_tree, passport->size() - 1, max_n);
}

TreeCatalog brute_force_trees(const PassportRef& passport, std::size_t max_n) {
  const std::size_t n = passport->size();
  return group_trees(passport, PermFilter::tree, n * (n - 1), max_n);
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckStatus& c) { return c.pass; });
}

CheckStatus check_formulas(const PassportRef& passport, std::size_t max_n) {
  const FullPassport& fp = *passport;
  guard(fp, max_n);
  return timed("formula_vs_enumeration", [&](Findings& f) {
    const std::size_t n = fp.size();
    ClassCounts counts = count_classes(fp, max_n);
    TreeCatalog fast = enumerate_trees(passport, max_n);
    TreeCatalog slow = brute_force_trees(passport, max_n);
    BigInt trees = kochetkov_count(fp);
    BigInt np = np_plus(fp);
    f.expect_eq("tree count vs enumeration", trees, BigInt(fast.trees.size()));
    f.expect_eq("tree count vs brute force", trees, BigInt(slow.trees.size()));
    f.expect(keys(fast) == keys(slow), "enumerated and brute-force trees differ");
    f.expect_eq("positive count", np, counts.positive);
    f.expect_eq("nonnegative count", count_nonneg(fp), counts.nonnegative);
    f.expect_eq("positive tree count", count_pos_tree(fp), counts.positive_tree);
    f.expect_eq("tree permutation count", trees * n * (n - 1), counts.tree);
    f.expect_eq("recursive positive count", recursive_pos_count(fp), np);
    if (!is_decomposable(fp)) {
      f.expect_eq("non-decomposable tree count", trees, factorial(static_cast<unsigned>(n - 2)));
      f.expect_eq("non-decomposable tree permutations", counts.tree, factorial(static_cast<unsigned>(n)));
    }
  });
}

CheckStatus check_roundtrip(const PassportRef& passport, std::size_t max_n) {
  guard(*passport, max_n);
  return timed("bijection_roundtrip", [&](Findings& f) {
    for_each_permutation(
        passport, PermFilter::tree,
        [&](const Permutation& p) {
          Permutation back = fold(comb(p));
          f.expect(back == p, "fold(comb(" + p.to_string() + ")) = " + back.to_string());
        },
        max_n);
    TreeCatalog cat = enumerate_trees(passport, max_n);
    for (const auto& entry : cat.trees) {
      for (const auto& marked : all_markings(entry.tree)) {
        Permutation p = fold(marked);
        TwiceMarkedForest again = comb(p);
        f.expect(same_marked(again, marked), "comb(fold(T)) differs for " + p.to_string());
      }
    }
  });
}

CheckStatus check_forests(const PassportRef& passport, std::size_t max_n, std::size_t exhaustive_limit) {
  const FullPassport& fp = *passport;
  guard(fp, max_n);
  PermFilter filter = fp.size() <= exhaustive_limit ? PermFilter::all : PermFilter::tree;
  return timed("forest_invariants", [&](Findings& f) {
    for_each_permutation(
        passport, filter,
        [&](const Permutation& p) {
          PermClass cls = classify(p);
          TwiceMarkedForest t = comb(p);
          const std::string where = " at " + p.to_string();
          f.expect(t.forest.is_connected() == cls.tree, "connectivity disagrees with tree test" + where);
          f.expect(t.forest.edges().size() + t.forest.component_count() == p.size(), "edge count is not N - components" + where);
          auto rects = horizontal_decomposition(build_region(p));
          f.expect(lengths_decrease_outward(rects), "rectangle lengths not monotone" + where);
          for (const auto& r : rects) {
            f.expect(fp.is_black(p.at(r.k)) == (r.side == Side::above), "rectangle side disagrees with colors" + where);
            for (const auto& o : rects) {
              bool inner_k = o.k > r.k && o.k < r.l, inner_l = o.l > r.k && o.l < r.l;
              bool outer_k = o.k < r.k || o.k > r.l, outer_l = o.l < r.k || o.l > r.l;
              f.expect(!(inner_k && outer_l) && !(inner_l && outer_k), "edge escapes a nested span" + where);
            }
          }
          if (cls.tree) {
            f.expect(mark_path(p) == path_between(t.forest, t.a, t.b), "mark path differs from tree path" + where);
            f.expect(is_rooted(t) == cls.positive_tree, "rootedness disagrees with positivity" + where);
          }
        },
        max_n);
    TreeCatalog cat = enumerate_trees(passport, max_n);
    for (const auto& entry : cat.trees) {
      for (const auto& rooted : rooted_markings(entry.tree)) {
        f.expect(classify(fold(rooted)).positive_tree, "rooted tree folds to a non-positive permutation");
      }
    }
  });
}

CheckStatus check_identities(const FullPassport& fp, const std::vector<Rational>& x_samples) {
  return timed("identity_suite", [&](Findings& f) {
    for (const auto& r : identity_suite(fp, x_samples).results) f.expect(r.pass, r.name + " " + r.detail);
  });
}

CheckStatus check_perturbation(const PassportRef& passport, std::size_t max_n) {
  const FullPassport& fp = *passport;
  guard(fp, max_n);
  return timed("perturbation_checks", [&](Findings& f) {
    const std::size_t n = fp.size();
    PerturbedPassport pp = perturb(fp);
    const BigInt target = factorial(static_cast<unsigned>(n - 1));
    auto tilde = make_passport_ref(pp.perturbed);
    f.expect(!is_decomposable(pp.perturbed), "perturbed passport is decomposable");
    if (pp.unchanged) {
      f.expect(!is_decomposable(fp), "only non-decomposable input may stay unchanged");
      f.expect(std::all_of(pp.epsilon.begin(), pp.epsilon.end(), [](const Rational& e) { return e == 0; }),
               "unchanged passport with nonzero shift");
      f.expect_eq("positive count", count_classes(fp, max_n).positive, target);
      return;
    }

    Rational eps_total = 0;
    for (const auto& e : pp.epsilon) eps_total += e;
    f.expect(eps_total == 0, "shifts do not sum to zero");
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pp.s_minus) {
        f.expect(pp.epsilon[i] < 0 && pp.epsilon[i] > -pp.e0, "negative shift out of range");
      } else {
        f.expect(pp.epsilon[i] > 0 && pp.epsilon[i] < pp.eps0, "positive shift out of range");
      }
    }
    const Mask all = fp.universe();
    for (Mask a = 0; a <= all; ++a) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (a >> i & 1) s += pp.epsilon[i];
      }
      f.expect(abs(s) < pp.e0, "shift sum reaches the smallest nonzero subset sum");
      if (a != 0 && a != all) {
        bool has_minus = a >> pp.s_minus & 1;
        f.expect(s != 0 && ((s > 0) == !has_minus), "shift sign rule fails on " + format_block(fp, a));
      }
    }

    std::map<Mask, BigInt> block_counts;
    auto positive_count = [&](Mask b) -> const BigInt& {
      auto it = block_counts.find(b);
      if (it == block_counts.end()) it = block_counts.emplace(b, count_classes(fp.sub(b), max_n).positive).first;
      return it->second;
    };

    std::map<std::vector<Mask>, BigInt> by_ordered;
    BigInt total = 0;
    for_each_permutation(
        tilde, PermFilter::positive,
        [&](const Permutation& q) {
          ++total;
          std::vector<std::int64_t> h{0};
          std::vector<Mask> blocks;
          Mask current = 0;
          bool inner_positive = true;
          for (std::size_t j = 0; j < n; ++j) {
            std::size_t base = pp.to_base[q.order()[j]];
            h.push_back(h.back() + fp.scaled_weight(base));
            current |= Mask{1} << base;
            if (h.back() < 0) inner_positive = false;
            if (h.back() == 0) {
              blocks.push_back(current);
              current = 0;
            }
          }
          f.expect(inner_positive, "perturbed positive order is negative somewhere in the base passport");
          f.expect(!blocks.empty() && (blocks.back() >> pp.s_minus & 1), "last block misses the negative shift");
          ++by_ordered[blocks];
        },
        max_n);
    f.expect_eq("perturbed positive count", total, target);

    for (const auto& [blocks, count] : by_ordered) {
      BigInt product = 1;
      for (Mask b : blocks) product *= positive_count(b);
      f.expect_eq("orders over one ordered partition", count, product);
    }
    BigInt sum = 0;
    for_each_partition(fp, [&](const Partition& p) {
      BigInt product = factorial(static_cast<unsigned>(p.size() - 1));
      for (Mask b : p.blocks()) product *= positive_count(b);
      sum += product;
    });
    f.expect_eq("ordered block sum", sum, target);
  });
}

VerifyReport verify(const PassportRef& passport, const VerifyOptions& options) {
  guard(*passport, options.max_n);
  VerifyReport report{passport->to_string(), {}};
  report.checks.push_back(check_formulas(passport, options.max_n));
  report.checks.push_back(check_roundtrip(passport, options.max_n));
  report.checks.push_back(check_forests(passport, options.max_n, options.exhaustive_forest_limit));
  report.checks.push_back(check_identities(*passport, options.x_samples));
  report.checks.push_back(check_perturbation(passport, options.max_n));
  return report;
}

}  // namespace lwbp
