#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lwbp/passport.hpp"
#include "lwbp/permutation.hpp"

namespace lwbp {

/// Endpoints are canonical positions in the passport.
struct Edge {
  std::size_t id = 0;
  std::size_t black = 0;
  std::size_t white = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled weighted bicolored forest with a rotation system.
///
/// Vertices are the labels of the passport. Edge ids equal their index in
/// `edges()`. `rotation(v)` lists the edges at v in anticlockwise order.
/// Construction validates the whole structure and throws ValidationError.
class PlaneForest {
 public:
  PlaneForest(PassportRef passport, std::vector<Edge> edges, std::vector<std::vector<std::size_t>> rotation);

  const PassportRef& passport_ref() const noexcept { return passport_; }
  const FullPassport& passport() const noexcept { return *passport_; }
  std::size_t vertex_count() const noexcept { return passport_->size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_.at(v); }
  std::size_t other_end(std::size_t edge_id, std::size_t v) const;
  /// Edge joining u and v, or edges().size() if there is none.
  std::size_t edge_between(std::size_t u, std::size_t v) const;

  /// Component index per vertex, numbered in order of smallest member.
  const std::vector<std::size_t>& components() const noexcept { return component_; }
  std::size_t component_count() const noexcept { return component_count_; }
  bool is_connected() const noexcept { return component_count_ == 1; }

  /// Per vertex in canonical order, the rotation as (neighbor, weight) pairs
  /// starting at the smallest neighbor.
  std::string canonical_form() const;

 private:
  PassportRef passport_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

bool is_isomorphic(const PlaneForest& f1, const PlaneForest& f2);

/// Forest with an ordered pair of distinct marked vertices.
struct TwiceMarkedForest {
  TwiceMarkedForest(PlaneForest forest, std::size_t a, std::size_t b);

  PlaneForest forest;
  std::size_t a;
  std::size_t b;
};

bool same_marked(const TwiceMarkedForest& x, const TwiceMarkedForest& y);

/// Connected, with marks (black, white) spanning one edge.
bool is_rooted(const TwiceMarkedForest& t);

/// Vertices of the unique path from a to b.
std::vector<std::size_t> path_between(const PlaneForest& f, std::size_t a, std::size_t b);

/// Inverse of combing: orders the vertices of a twice-marked tree.
Permutation fold(const TwiceMarkedForest& t);

/// Rectangle placement with nested widths 3^-i.
struct FoldLayout {
  struct Rect {
    std::size_t edge;
    Rational x0, x1, y0, y1;
  };
  /// x-coordinate of each vertex's boundary segment.
  std::vector<Rational> x;
  std::vector<Rational> y_min;
  std::vector<Rational> y_max;
  std::vector<Rect> rects;
};

FoldLayout fold_layout(const TwiceMarkedForest& t);

/// All N(N-1) ordered markings of a tree.
std::vector<TwiceMarkedForest> all_markings(const PlaneForest& tree);
/// One marking (black end, white end) per edge, in edge order.
std::vector<TwiceMarkedForest> rooted_markings(const PlaneForest& tree);

}  // namespace lwbp
