#include "lwbp/combing.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lwbp {

namespace {

struct ScaledRect {
  std::size_t k, l;
  std::int64_t lo, hi;
  Side side;
};

struct ScaledEdge {
  std::int64_t weight;
  Side side;
};

std::optional<ScaledEdge> scaled_edge(std::span<const std::int64_t> h, std::size_t k, std::size_t l) {
  std::int64_t lo = h[k], hi = h[k];
  for (std::size_t j = k + 1; j < l; ++j) {
    lo = std::min(lo, h[j]);
    hi = std::max(hi, h[j]);
  }
  std::int64_t top = std::max({h[k - 1], h[l], std::int64_t{0}});
  if (lo > top) return ScaledEdge{lo - top, Side::above};
  std::int64_t bottom = std::min({h[k - 1], h[l], std::int64_t{0}});
  if (hi < bottom) return ScaledEdge{bottom - hi, Side::below};
  return std::nullopt;
}

std::vector<ScaledRect> sweep(std::span<const std::int64_t> h) {
  const std::size_t n = h.size() - 1;
  std::vector<std::int64_t> levels(h.begin(), h.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::map<std::tuple<std::size_t, std::size_t, Side>, std::pair<std::int64_t, std::int64_t>> merged;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const std::int64_t y0 = levels[j], y1 = levels[j + 1];
    const bool above = y0 >= 0;
    std::size_t i = 1;
    while (i <= n) {
      auto inside = [&](std::size_t c) { return above ? h[c] >= y1 : h[c] <= y0; };
      if (!inside(i)) {
        ++i;
        continue;
      }
      std::size_t a = i;
      while (i <= n && inside(i)) ++i;
      auto key = std::make_tuple(a, i, above ? Side::above : Side::below);
      auto [it, fresh] = merged.try_emplace(key, y0, y1);
      if (!fresh) {
        it->second.first = std::min(it->second.first, y0);
        it->second.second = std::max(it->second.second, y1);
      }
    }
  }
  std::vector<ScaledRect> out;
  for (const auto& [key, span] : merged) {
    out.push_back(ScaledRect{std::get<0>(key), std::get<1>(key), span.first, span.second, std::get<2>(key)});
  }
  std::sort(out.begin(), out.end(), [](const ScaledRect& a, const ScaledRect& b) {
    return std::tie(a.k, a.l) < std::tie(b.k, b.l);
  });
  return out;
}

void cross_check(std::span<const std::int64_t> h, const std::vector<ScaledRect>& rects) {
  const std::size_t n = h.size() - 1;
  std::size_t found = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k + 1; l <= n; ++l) {
      auto e = scaled_edge(h, k, l);
      if (!e) continue;
      ++found;
      auto it = std::find_if(rects.begin(), rects.end(), [&](const ScaledRect& r) { return r.k == k && r.l == l; });
      if (it == rects.end() || it->side != e->side || it->hi - it->lo != e->weight) {
        throw std::logic_error("horizontal decomposition disagrees with the edge criterion");
      }
    }
  }
  if (found != rects.size()) throw std::logic_error("horizontal decomposition has extra rectangles");
}

template <class Rect>
bool monotone(const std::vector<Rect>& rects) {
  std::size_t n = 0;
  for (const auto& r : rects) n = std::max(n, r.l);
  for (std::size_t x = 1; x <= n; ++x) {
    for (bool right : {true, false}) {
      for (Side side : {Side::above, Side::below}) {
        std::vector<const Rect*> group;
        for (const auto& r : rects) {
          if ((right ? r.k : r.l) == x && r.side == side) group.push_back(&r);
        }
        // Order by distance from the axis.
        std::sort(group.begin(), group.end(), [side](const Rect* a, const Rect* b) {
          return side == Side::above ? a->lo < b->lo : a->hi > b->hi;
        });
        for (std::size_t j = 1; j < group.size(); ++j) {
          if (group[j]->l - group[j]->k >= group[j - 1]->l - group[j - 1]->k) return false;
        }
      }
    }
  }
  return true;
}

std::vector<ScaledRect> checked_rects(std::span<const std::int64_t> h) {
  auto rects = sweep(h);
  cross_check(h, rects);
  if (!monotone(rects)) throw std::logic_error("rectangle lengths do not decrease away from the axis");
  return rects;
}

}  // namespace

const char* to_string(Side side) noexcept { return side == Side::above ? "above" : "below"; }

Region::Region(const Permutation& p)
    : heights_(p.scaled_heights().begin(), p.scaled_heights().end()), scale_(p.passport().scale()) {}

Region::Region(std::vector<std::int64_t> scaled_heights, BigInt scale)
    : heights_(std::move(scaled_heights)), scale_(std::move(scale)) {
  if (heights_.size() < 2 || heights_.front() != 0 || heights_.back() != 0) {
    throw std::invalid_argument("heights must start and end at zero");
  }
}

std::vector<VerticalRect> Region::columns() const {
  std::vector<VerticalRect> out;
  for (std::size_t i = 1; i < heights_.size(); ++i) {
    Rational y(BigInt(heights_[i]), scale_);
    out.push_back(VerticalRect{i, y < 0 ? y : Rational(0), y > 0 ? y : Rational(0)});
  }
  return out;
}

Region build_region(const Permutation& p) { return Region(p); }

std::optional<EdgeInfo> edge_exists(const Permutation& p, std::size_t k, std::size_t l) {
  if (k < 1 || k >= l || l > p.size()) throw std::out_of_range("edge_exists needs 1 <= k < l <= N");
  auto e = scaled_edge(p.scaled_heights(), k, l);
  if (!e) return std::nullopt;
  return EdgeInfo{Rational(BigInt(e->weight), p.passport().scale()), e->side};
}

std::vector<HorizontalRect> horizontal_decomposition(const Region& region) {
  std::vector<HorizontalRect> out;
  for (const auto& r : checked_rects(region.scaled_heights())) {
    out.push_back(HorizontalRect{r.k, r.l, Rational(BigInt(r.lo), region.scale()), Rational(BigInt(r.hi), region.scale()),
                                 r.side});
  }
  return out;
}

bool lengths_decrease_outward(const std::vector<HorizontalRect>& rects) { return monotone(rects); }

TwiceMarkedForest comb(const Permutation& p) {
  const std::size_t n = p.size();
  auto rects = checked_rects(p.scaled_heights());
  std::vector<Edge> edges;
  for (std::size_t id = 0; id < rects.size(); ++id) {
    const auto& r = rects[id];
    std::size_t left = p.at(r.k), right = p.at(r.l);
    Rational w(BigInt(r.hi - r.lo), p.passport().scale());
    if (r.side == Side::above) {
      edges.push_back(Edge{id, left, right, w});
    } else {
      edges.push_back(Edge{id, right, left, w});
    }
  }
  // Anticlockwise around the line at position x: rectangles on its right
  // bottom to top, then those on its left top to bottom.
  std::vector<std::vector<std::size_t>> rotation(n);
  for (std::size_t x = 1; x <= n; ++x) {
    std::vector<std::size_t> right, left;
    for (std::size_t id = 0; id < rects.size(); ++id) {
      if (rects[id].k == x) right.push_back(id);
      if (rects[id].l == x) left.push_back(id);
    }
    std::sort(right.begin(), right.end(), [&](std::size_t a, std::size_t b) { return rects[a].lo < rects[b].lo; });
    std::sort(left.begin(), left.end(), [&](std::size_t a, std::size_t b) { return rects[a].lo > rects[b].lo; });
    auto& rot = rotation[p.at(x)];
    rot = right;
    rot.insert(rot.end(), left.begin(), left.end());
  }
  return TwiceMarkedForest(PlaneForest(p.passport_ref(), std::move(edges), std::move(rotation)), p.at(1), p.at(n));
}

}  // namespace lwbp
