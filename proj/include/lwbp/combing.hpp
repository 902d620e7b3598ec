#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lwbp/permutation.hpp"
#include "lwbp/planetree.hpp"

namespace lwbp {

enum class Side { above, below };

const char* to_string(Side side) noexcept;

/// Column i (1-based) spans [i, i+1] x [min(0,H_i), max(0,H_i)].
struct VerticalRect {
  std::size_t i;
  Rational y_min;
  Rational y_max;
};

/// Rectangle between the vertical lines of positions k < l.
struct HorizontalRect {
  std::size_t k;
  std::size_t l;
  Rational lo;
  Rational hi;
  Side side;

  Rational weight() const { return hi - lo; }
  friend bool operator==(const HorizontalRect&, const HorizontalRect&) = default;
};

/// Histogram of the cumulative sums of a permutation.
class Region {
 public:
  explicit Region(const Permutation& p);
  /// Heights H_0..H_N given as integers over `scale`.
  Region(std::vector<std::int64_t> scaled_heights, BigInt scale);

  std::size_t size() const noexcept { return heights_.size() - 1; }
  std::span<const std::int64_t> scaled_heights() const noexcept { return heights_; }
  const BigInt& scale() const noexcept { return scale_; }
  std::vector<VerticalRect> columns() const;

 private:
  std::vector<std::int64_t> heights_;
  BigInt scale_;
};

Region build_region(const Permutation& p);

struct EdgeInfo {
  Rational weight;
  Side side;
};

/// Direct test for a rectangle between positions k < l (1-based).
std::optional<EdgeInfo> edge_exists(const Permutation& p, std::size_t k, std::size_t l);

/// Sweep over the cut heights, merged per (k, l, side) and sorted by (k, l).
/// Throws std::logic_error if the result disagrees with edge_exists or with
/// the length monotonicity of stacked rectangles.
std::vector<HorizontalRect> horizontal_decomposition(const Region& region);

/// At every vertical line, on each side and each half-plane, rectangle lengths
/// strictly decrease moving away from the x-axis.
bool lengths_decrease_outward(const std::vector<HorizontalRect>& rects);

/// Forest of a permutation with marks (s_1, s_N). Edge ids follow the
/// decomposition order.
TwiceMarkedForest comb(const Permutation& p);

}  // namespace lwbp
