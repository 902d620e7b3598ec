#include "lwbp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lwbp/errors.hpp"

namespace lwbp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void fill_heights(const FullPassport& fp, const std::vector<std::size_t>& order, std::vector<std::int64_t>& h) {
  h.resize(order.size() + 1);
  h[0] = 0;
  for (std::size_t j = 0; j < order.size(); ++j) h[j + 1] = h[j] + fp.scaled_weight(order[j]);
}

void check_size(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw SizeGuardError("exhaustive permutation scan over " + std::to_string(n) + " labels exceeds the limit of " +
                         std::to_string(max_n));
  }
}

}  // namespace

Permutation::Permutation(PassportRef passport, std::vector<std::size_t> order)
    : passport_(std::move(passport)), order_(std::move(order)) {
  const std::size_t n = passport_->size();
  if (order_.size() != n) {
    throw ValidationError(ValidationKind::not_a_permutation,
                          "expected " + std::to_string(n) + " labels, got " + std::to_string(order_.size()));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i : order_) {
    if (i >= n || seen[i]) throw ValidationError(ValidationKind::not_a_permutation, "labels must each occur once");
    seen[i] = true;
  }
  fill_heights(*passport_, order_, heights_);
  if (heights_.back() != 0) throw std::logic_error("cumulative sum does not return to zero");
}

Permutation Permutation::parse(PassportRef passport, std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ParseError("empty permutation");
  std::vector<std::size_t> order;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view token = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (token.empty()) throw ParseError("empty label in permutation '" + std::string(text) + "'");
    order.push_back(passport->index_of(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(passport), std::move(order));
}

std::vector<Rational> Permutation::cumulative_sums() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < heights_.size(); ++i) out.push_back(height(i));
  return out;
}

Rational Permutation::height(std::size_t i) const { return Rational(BigInt(heights_.at(i)), passport_->scale()); }

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < order_.size(); ++j) {
    if (j) s += ',';
    s += passport_->label_text(order_[j]);
  }
  return s;
}

// ---------------------------------------------------------------------------

PermClass classify_heights(std::span<const std::int64_t> h) {
  PermClass c;
  const std::size_t n = h.size() - 1;
  c.positive = c.nonnegative = true;
  bool no_zero = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (h[i] <= 0) c.positive = false;
    if (h[i] < 0) c.nonnegative = false;
    if (h[i] == 0) no_zero = false;
  }
  c.tree = no_zero;
  // A horizontal pair k < l with H_{k-1} = H_l whose span never dips past that level.
  for (std::size_t k = 1; c.tree && k < n; ++k) {
    const std::int64_t base = h[k - 1];
    if (base == 0) continue;
    std::int64_t lo = h[k], hi = h[k];
    for (std::size_t l = k + 1; l <= n; ++l) {
      if (h[l] == base) {
        if ((base > 0 && lo >= base) || (base < 0 && hi <= base)) {
          c.tree = false;
          break;
        }
      }
      lo = std::min(lo, h[l]);
      hi = std::max(hi, h[l]);
    }
  }
  c.positive_tree = c.positive && c.tree;
  if (c.tree) {
    for (std::size_t i = 1; i <= n; ++i) {
      if ((h[i - 1] < 0 && h[i] > 0) || (h[i - 1] > 0 && h[i] < 0)) c.sign_changes.push_back(i);
    }
  }
  return c;
}

PermClass classify(const Permutation& p) { return classify_heights(p.scaled_heights()); }

std::vector<std::size_t> sign_changing_points(const Permutation& p) {
  PermClass c = classify(p);
  if (!c.tree) throw ValidationError(ValidationKind::not_a_tree_permutation, p.to_string() + " is not a tree permutation");
  return c.sign_changes;
}

std::vector<std::size_t> mark_path(const Permutation& p) {
  std::vector<std::size_t> path{p.at(1)};
  for (std::size_t i : sign_changing_points(p)) path.push_back(p.at(i));
  path.push_back(p.at(p.size()));
  return path;
}

PermFilter parse_perm_filter(std::string_view name) {
  if (name == "all") return PermFilter::all;
  if (name == "positive") return PermFilter::positive;
  if (name == "nonnegative") return PermFilter::nonnegative;
  if (name == "tree") return PermFilter::tree;
  if (name == "positive_tree") return PermFilter::positive_tree;
  throw ParseError("unknown permutation class '" + std::string(name) + "'");
}

const char* to_string(PermFilter filter) noexcept {
  switch (filter) {
    case PermFilter::all: return "all";
    case PermFilter::positive: return "positive";
    case PermFilter::nonnegative: return "nonnegative";
    case PermFilter::tree: return "tree";
    case PermFilter::positive_tree: return "positive_tree";
  }
  return "all";
}

bool matches(const PermClass& c, PermFilter filter) noexcept {
  switch (filter) {
    case PermFilter::all: return true;
    case PermFilter::positive: return c.positive;
    case PermFilter::nonnegative: return c.nonnegative;
    case PermFilter::tree: return c.tree;
    case PermFilter::positive_tree: return c.positive_tree;
  }
  return false;
}

void for_each_permutation(const PassportRef& passport, PermFilter filter,
                          const std::function<void(const Permutation&)>& visit, std::size_t max_n) {
  const std::size_t n = passport->size();
  check_size(n, max_n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::int64_t> h;
  do {
    fill_heights(*passport, order, h);
    if (filter == PermFilter::all || matches(classify_heights(h), filter)) visit(Permutation(passport, order));
  } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<Permutation> list_permutations(const PassportRef& passport, PermFilter filter, std::size_t max_n) {
  std::vector<Permutation> out;
  for_each_permutation(passport, filter, [&](const Permutation& p) { out.push_back(p); }, max_n);
  return out;
}

const BigInt& ClassCounts::get(PermFilter filter) const {
  switch (filter) {
    case PermFilter::positive: return positive;
    case PermFilter::nonnegative: return nonnegative;
    case PermFilter::tree: return tree;
    case PermFilter::positive_tree: return positive_tree;
    case PermFilter::all: break;
  }
  return all;
}

ClassCounts count_classes(const FullPassport& fp, std::size_t max_n) {
  const std::size_t n = fp.size();
  check_size(n, max_n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::int64_t> h;
  std::uint64_t all = 0, pos = 0, nonneg = 0, tree = 0, pos_tree = 0;
  do {
    fill_heights(fp, order, h);
    PermClass c = classify_heights(h);
    ++all;
    pos += c.positive;
    nonneg += c.nonnegative;
    tree += c.tree;
    pos_tree += c.positive_tree;
  } while (std::next_permutation(order.begin(), order.end()));
  return ClassCounts{all, pos, nonneg, tree, pos_tree};
}

BigInt count_permutations(const FullPassport& fp, PermFilter filter, std::size_t max_n) {
  return count_classes(fp, max_n).get(filter);
}

}  // namespace lwbp
