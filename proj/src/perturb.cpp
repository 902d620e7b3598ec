#include <algorithm>
#include <cstdlib>
#include <map>

#include "lwbp/errors.hpp"
#include "lwbp/passport.hpp"

namespace lwbp {

namespace {

std::int64_t min_nonzero_subset_sum(const FullPassport& fp) {
  if (fp.size() > 26) throw SizeGuardError("perturbation needs a subset scan; at most 26 labels");
  const std::size_t n = fp.size();
  std::vector<std::int64_t> sums(std::size_t{1} << n, 0);
  std::int64_t best = 0;
  for (std::size_t m = 1; m < sums.size(); ++m) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
    sums[m] = sums[m & (m - 1)] + fp.scaled_weight(low);
    std::int64_t a = std::llabs(sums[m]);
    if (a != 0 && (best == 0 || a < best)) best = a;
  }
  return best;
}

}  // namespace

PerturbedPassport perturb(const FullPassport& fp) {
  const std::size_t n = fp.size();
  Rational e0(BigInt(min_nonzero_subset_sum(fp)), fp.scale());
  Rational eps0 = e0 / Rational(n - 1);

  PerturbedPassport out{fp, fp, std::vector<Rational>(n, Rational(0)), n - 1, e0, eps0, {}, false};
  out.to_base.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.to_base[i] = i;
  if (!is_decomposable(fp)) {
    out.unchanged = true;
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    out.epsilon[i] = i == out.s_minus ? Rational(-Rational(n - 1) * eps0 / Rational(2 * n))
                                      : Rational(eps0 / Rational(2 * n));
  }

  std::vector<std::pair<IndexLabel, std::size_t>> shifted;
  for (std::size_t i = 0; i < n; ++i) {
    shifted.push_back({IndexLabel{Weight(fp.weight(i) + out.epsilon[i]), fp.label(i).subscript, false}, i});
  }
  auto by_label = [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); };
  std::stable_sort(shifted.begin(), shifted.end(), by_label);
  bool collision = false;
  for (std::size_t i = 1; i < n; ++i) collision |= shifted[i - 1].first == shifted[i].first;
  if (collision) {
    std::map<Rational, unsigned> next;
    for (auto& [label, base] : shifted) label.subscript = ++next[label.weight.value()];
  }

  std::vector<IndexLabel> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(shifted[i].first);
    out.to_base[i] = shifted[i].second;
  }
  out.perturbed = FullPassport(std::move(labels));
  if (is_decomposable(out.perturbed)) throw std::logic_error("perturbed passport is still decomposable");
  return out;
}

}  // namespace lwbp
