#include "lwbp/planetree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "lwbp/errors.hpp"

namespace lwbp {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

[[noreturn]] void fail(ValidationKind kind, const std::string& what) { throw ValidationError(kind, what); }

}  // namespace

PlaneForest::PlaneForest(PassportRef passport, std::vector<Edge> edges, std::vector<std::vector<std::size_t>> rotation)
    : passport_(std::move(passport)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const FullPassport& fp = *passport_;
  const std::size_t n = fp.size();
  auto name = [&](std::size_t v) { return fp.label_text(v); };

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != i) fail(ValidationKind::schema, "edge ids must be 0..E-1 in order");
    if (e.black >= n || e.white >= n) fail(ValidationKind::bad_vertex, "edge " + std::to_string(i) + " has an unknown endpoint");
    if (e.weight <= 0) fail(ValidationKind::nonpositive_edge_weight, "edge " + std::to_string(i) + " has weight " + to_string(e.weight));
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.black, e.white);
    if (e.black != e.white && !pairs.insert(key).second) {
      fail(ValidationKind::parallel_edge, "parallel edges between " + name(e.black) + " and " + name(e.white));
    }
  }

  std::vector<std::vector<std::size_t>> incident(n);
  for (const Edge& e : edges_) {
    incident[e.black].push_back(e.id);
    if (e.white != e.black) incident[e.white].push_back(e.id);
  }

  // Two-coloring of the underlying graph, ignoring vertex colors.
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t id : incident[v]) {
        const Edge& e = edges_[id];
        std::size_t u = e.black == v ? e.white : e.black;
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          fail(ValidationKind::odd_cycle, "odd cycle through " + name(v));
        }
      }
    }
  }

  for (const Edge& e : edges_) {
    bool b = fp.is_black(e.black), w = !fp.is_black(e.white);
    if (fp.is_black(e.black) == fp.is_black(e.white)) {
      fail(ValidationKind::monochromatic_edge, "edge " + name(e.black) + " - " + name(e.white) + " joins vertices of one color");
    }
    if (!b || !w) fail(ValidationKind::bad_vertex, "edge endpoints listed with swapped colors");
  }

  DisjointSets dsu(n);
  for (const Edge& e : edges_) {
    if (!dsu.unite(e.black, e.white)) fail(ValidationKind::cycle, "cycle through " + name(e.black) + " - " + name(e.white));
  }

  if (rotation_.size() != n) fail(ValidationKind::rotation_mismatch, "rotation must list every vertex");
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> a = rotation_[v], b = incident[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) fail(ValidationKind::rotation_mismatch, "rotation at " + name(v) + " does not list its incident edges");
  }

  for (std::size_t v = 0; v < n; ++v) {
    Rational sum = 0;
    for (std::size_t id : incident[v]) sum += edges_[id].weight;
    if (sum != abs(fp.weight(v))) {
      fail(ValidationKind::weight_mismatch,
           "edges at " + name(v) + " sum to " + to_string(sum) + " instead of " + to_string(abs(fp.weight(v))));
    }
  }

  component_.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = dsu.find(v);
    if (id_of_root[r] == n) id_of_root[r] = component_count_++;
    component_[v] = id_of_root[r];
  }
}

std::size_t PlaneForest::other_end(std::size_t edge_id, std::size_t v) const {
  const Edge& e = edges_.at(edge_id);
  if (e.black == v) return e.white;
  if (e.white == v) return e.black;
  throw std::logic_error("edge is not incident to vertex");
}

std::size_t PlaneForest::edge_between(std::size_t u, std::size_t v) const {
  for (std::size_t id : rotation_.at(u)) {
    if (other_end(id, u) == v) return id;
  }
  return edges_.size();
}

std::string PlaneForest::canonical_form() const {
  std::string s = passport_->to_string() + " |";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const auto& rot = rotation_[v];
    std::size_t start = 0;
    for (std::size_t j = 1; j < rot.size(); ++j) {
      if (other_end(rot[j], v) < other_end(rot[start], v)) start = j;
    }
    s += ' ' + passport_->label_text(v) + '[';
    for (std::size_t j = 0; j < rot.size(); ++j) {
      std::size_t id = rot[(start + j) % rot.size()];
      if (j) s += ' ';
      s += passport_->label_text(other_end(id, v)) + ':' + to_string(edges_[id].weight);
    }
    s += ']';
  }
  return s;
}

bool is_isomorphic(const PlaneForest& f1, const PlaneForest& f2) {
  if (!(f1.passport() == f2.passport())) {
    throw ValidationError(ValidationKind::mismatched_passport, "forests over different passports");
  }
  return f1.canonical_form() == f2.canonical_form();
}

TwiceMarkedForest::TwiceMarkedForest(PlaneForest f, std::size_t a_, std::size_t b_)
    : forest(std::move(f)), a(a_), b(b_) {
  if (a >= forest.vertex_count() || b >= forest.vertex_count() || a == b) {
    throw ValidationError(ValidationKind::bad_marks, "marks must be two distinct vertices");
  }
}

bool same_marked(const TwiceMarkedForest& x, const TwiceMarkedForest& y) {
  return x.a == y.a && x.b == y.b && is_isomorphic(x.forest, y.forest);
}

bool is_rooted(const TwiceMarkedForest& t) {
  const FullPassport& fp = t.forest.passport();
  return t.forest.is_connected() && fp.is_black(t.a) && !fp.is_black(t.b) &&
         t.forest.edge_between(t.a, t.b) != t.forest.edges().size();
}

std::vector<std::size_t> path_between(const PlaneForest& f, std::size_t a, std::size_t b) {
  const std::size_t n = f.vertex_count();
  if (a >= n || b >= n || a == b) throw ValidationError(ValidationKind::bad_marks, "path needs two distinct vertices");
  if (f.components()[a] != f.components()[b]) {
    throw ValidationError(ValidationKind::disconnected, "no path between " + f.passport().label_text(a) + " and " +
                                                            f.passport().label_text(b));
  }
  std::vector<std::size_t> prev(n, n);
  prev[a] = a;
  std::deque<std::size_t> queue{a};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t id : f.rotation(v)) {
      std::size_t u = f.other_end(id, v);
      if (prev[u] == n) {
        prev[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<TwiceMarkedForest> all_markings(const PlaneForest& tree) {
  if (!tree.is_connected()) throw ValidationError(ValidationKind::disconnected, "markings need a tree");
  std::vector<TwiceMarkedForest> out;
  for (std::size_t a = 0; a < tree.vertex_count(); ++a) {
    for (std::size_t b = 0; b < tree.vertex_count(); ++b) {
      if (a != b) out.emplace_back(tree, a, b);
    }
  }
  return out;
}

std::vector<TwiceMarkedForest> rooted_markings(const PlaneForest& tree) {
  if (!tree.is_connected()) throw ValidationError(ValidationKind::disconnected, "markings need a tree");
  std::vector<TwiceMarkedForest> out;
  for (const Edge& e : tree.edges()) out.emplace_back(tree, e.black, e.white);
  return out;
}

}  // namespace lwbp
