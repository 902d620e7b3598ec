#include <algorithm>
#include <numeric>

#include "lwbp/errors.hpp"
#include "lwbp/planetree.hpp"

namespace lwbp {

namespace {

/// Edges met after `start` when turning around v; anticlockwise follows the
/// rotation list, clockwise reverses it.
std::vector<std::size_t> edges_after(const PlaneForest& f, std::size_t v, std::size_t start, bool anticlockwise) {
  const auto& rot = f.rotation(v);
  const std::size_t d = rot.size();
  std::size_t pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), start) - rot.begin());
  if (pos == d) throw std::logic_error("edge missing from rotation");
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < d; ++j) out.push_back(rot[anticlockwise ? (pos + j) % d : (pos + d - j) % d]);
  return out;
}

/// Children of path vertex l(k): forward ones continue past the edge to
/// l(k+1), backward ones past the edge to l(k-1).
struct PathSplit {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
};

PathSplit split_at_path_vertex(const PlaneForest& f, const std::vector<std::size_t>& path, std::size_t k) {
  const std::size_t last = path.size() - 1;
  const std::size_t v = path[k];
  const bool ccw = f.passport().is_black(v);
  PathSplit s;
  if (k == last) {
    s.backward = edges_after(f, v, f.edge_between(v, path[k - 1]), ccw);
    return s;
  }
  auto seq = edges_after(f, v, f.edge_between(v, path[k + 1]), ccw);
  if (k == 0) {
    s.forward = seq;
    return s;
  }
  std::size_t back = f.edge_between(v, path[k - 1]);
  auto it = std::find(seq.begin(), seq.end(), back);
  s.forward.assign(seq.begin(), it);
  s.backward.assign(it + 1, seq.end());
  return s;
}

std::vector<std::size_t> checked_path(const TwiceMarkedForest& t) {
  if (!t.forest.is_connected()) throw ValidationError(ValidationKind::disconnected, "folding needs a connected tree");
  return path_between(t.forest, t.a, t.b);
}

class Folder {
 public:
  explicit Folder(const PlaneForest& f) : f_(f) {}

  std::vector<std::size_t> run(const std::vector<std::size_t>& path) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      PathSplit s = split_at_path_vertex(f_, path, k);
      for (std::size_t id : s.backward) left_end(f_.other_end(id, path[k]), id);
      out_.push_back(path[k]);
      for (auto it = s.forward.rbegin(); it != s.forward.rend(); ++it) right_end(f_.other_end(*it, path[k]), *it);
    }
    return out_;
  }

 private:
  std::vector<std::size_t> children(std::size_t w, std::size_t parent) const {
    return edges_after(f_, w, parent, f_.passport().is_black(w));
  }

  // w sits at the left end of its parent edge; its subtree lies to its right.
  void left_end(std::size_t w, std::size_t parent) {
    out_.push_back(w);
    auto ch = children(w, parent);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) right_end(f_.other_end(*it, w), *it);
  }

  void right_end(std::size_t w, std::size_t parent) {
    for (std::size_t id : children(w, parent)) left_end(f_.other_end(id, w), id);
    out_.push_back(w);
  }

  const PlaneForest& f_;
  std::vector<std::size_t> out_;
};

class Layout {
 public:
  explicit Layout(const PlaneForest& f)
      : f_(f), x_(f.vertex_count()), lo_(f.vertex_count()), hi_(f.vertex_count()), seen_(f.vertex_count(), false) {}

  FoldLayout run(const std::vector<std::size_t>& path) {
    std::vector<FoldLayout::Rect> spine;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      std::size_t id = f_.edge_between(path[k], path[k + 1]);
      const Rational& w = f_.edge(id).weight;
      bool above = f_.passport().is_black(path[k]);
      spine.push_back({id, Rational(k), Rational(k + 1), above ? Rational(0) : Rational(-w), above ? w : Rational(0)});
      add(spine.back());
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      const std::size_t v = path[k];
      place(v, Rational(k));
      PathSplit s = split_at_path_vertex(f_, path, k);
      if (!s.forward.empty()) stack(v, s.forward, spine[k], true);
      if (!s.backward.empty()) stack(v, s.backward, spine[k - 1], false);
    }
    FoldLayout out;
    out.x = x_;
    out.y_min = lo_;
    out.y_max = hi_;
    out.rects = rects_;
    return out;
  }

 private:
  void place(std::size_t v, const Rational& x) {
    if (seen_[v]) throw std::logic_error("vertex placed twice");
    seen_[v] = true;
    x_[v] = x;
  }

  void add(const FoldLayout::Rect& r) {
    rects_.push_back(r);
    for (std::size_t v : {f_.edge(r.edge).black, f_.edge(r.edge).white}) {
      if (touched_.size() < f_.vertex_count()) touched_.assign(f_.vertex_count(), false);
      if (!touched_[v]) {
        lo_[v] = r.y0;
        hi_[v] = r.y1;
        touched_[v] = true;
      } else {
        lo_[v] = std::min(lo_[v], r.y0);
        hi_[v] = std::max(hi_[v], r.y1);
      }
    }
  }

  // Stacks the rectangles of `edges` beyond `base` (away from the axis),
  // aligned at v's segment. `v_left` says v is the left end of those edges.
  void stack(std::size_t v, const std::vector<std::size_t>& edges, const FoldLayout::Rect& base, bool v_left) {
    const bool above = base.y0 >= 0;
    const Rational width = base.x1 - base.x0;
    Rational scale = width;
    Rational level = above ? base.y1 : base.y0;
    std::vector<std::pair<std::size_t, FoldLayout::Rect>> placed;
    for (std::size_t id : edges) {
      scale /= 3;
      const Rational& w = f_.edge(id).weight;
      FoldLayout::Rect r{id, v_left ? x_[v] : Rational(x_[v] - scale), v_left ? Rational(x_[v] + scale) : x_[v],
                         above ? level : Rational(level - w), above ? Rational(level + w) : level};
      level = above ? r.y1 : r.y0;
      add(r);
      std::size_t u = f_.other_end(id, v);
      place(u, v_left ? r.x1 : r.x0);
      placed.push_back({u, r});
    }
    for (const auto& [u, r] : placed) {
      std::size_t parent = r.edge;
      auto ch = edges_after(f_, u, parent, f_.passport().is_black(u));
      if (!ch.empty()) stack(u, ch, r, !v_left);
    }
  }

  const PlaneForest& f_;
  std::vector<Rational> x_, lo_, hi_;
  std::vector<bool> seen_;
  std::vector<bool> touched_;
  std::vector<FoldLayout::Rect> rects_;
};

}  // namespace

Permutation fold(const TwiceMarkedForest& t) {
  auto order = Folder(t.forest).run(checked_path(t));
  return Permutation(t.forest.passport_ref(), std::move(order));
}

FoldLayout fold_layout(const TwiceMarkedForest& t) { return Layout(t.forest).run(checked_path(t)); }

}  // namespace lwbp
