#include "lwbp/json_io.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lwbp/errors.hpp"

namespace lwbp {

namespace {

[[noreturn]] void schema(const std::string& what) { throw ValidationError(ValidationKind::schema, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_value(const Json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  schema(std::string(what) + " must be an integer or a rational string");
}

std::size_t size_value(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Side side_value(const Json& v) {
  if (v == "above") return Side::above;
  if (v == "below") return Side::below;
  schema("side must be 'above' or 'below'");
}

}  // namespace

Json forest_to_json(const PlaneForest& forest, const Marks& marks) {
  const FullPassport& fp = forest.passport();
  std::vector<std::size_t> order(forest.edges().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = forest.edge(a);
    const Edge& y = forest.edge(b);
    return std::tie(x.black, x.white) < std::tie(y.black, y.white);
  });
  std::vector<std::size_t> new_id(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  Json j;
  j["passport"] = fp.to_string();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < fp.size(); ++v) {
    vertices.push_back({{"label", fp.label_text(v)},
                        {"color", fp.is_black(v) ? "black" : "white"},
                        {"weight", to_string(fp.weight(v))}});
  }
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge& e = forest.edge(order[i]);
    edges.push_back({{"id", i},
                     {"black", fp.label_text(e.black)},
                     {"white", fp.label_text(e.white)},
                     {"weight", to_string(e.weight)}});
  }
  j["edges"] = edges;
  Json rotation = Json::object();
  for (std::size_t v = 0; v < fp.size(); ++v) {
    const auto& rot = forest.rotation(v);
    std::size_t start = 0;
    for (std::size_t k = 1; k < rot.size(); ++k) {
      if (forest.other_end(rot[k], v) < forest.other_end(rot[start], v)) start = k;
    }
    Json ids = Json::array();
    for (std::size_t k = 0; k < rot.size(); ++k) ids.push_back(new_id[rot[(start + k) % rot.size()]]);
    rotation[fp.label_text(v)] = ids;
  }
  j["rotation"] = rotation;
  if (marks) j["marks"] = {fp.label_text(marks->first), fp.label_text(marks->second)};
  return j;
}

Json forest_to_json(const TwiceMarkedForest& t) { return forest_to_json(t.forest, std::make_pair(t.a, t.b)); }

ParsedForest forest_from_json(const Json& j) {
  if (!j.is_object()) schema("tree JSON must be an object");
  auto passport = make_passport_ref(FullPassport::parse(string_field(j, "passport")));
  const FullPassport& fp = *passport;

  if (j.contains("vertices")) {
    const Json& vs = j.at("vertices");
    if (!vs.is_array() || vs.size() != fp.size()) schema("vertices must list every label of the passport once");
    for (const Json& v : vs) {
      std::size_t idx = fp.index_of(string_field(v, "label"));
      if (v.contains("weight") && rational_value(v.at("weight"), "vertex weight") != fp.weight(idx)) {
        schema("vertex " + fp.label_text(idx) + " has a weight different from the passport");
      }
      if (v.contains("color")) {
        std::string color = string_field(v, "color");
        if (color != (fp.is_black(idx) ? "black" : "white")) schema("vertex " + fp.label_text(idx) + " has the wrong color");
      }
    }
  }

  const Json& es = field(j, "edges");
  if (!es.is_array()) schema("edges must be an array");
  std::map<std::size_t, std::size_t> remap;
  std::vector<Edge> edges;
  for (const Json& e : es) {
    std::size_t id = size_value(field(e, "id"), "edge id");
    if (!remap.emplace(id, edges.size()).second) schema("duplicate edge id " + std::to_string(id));
    edges.push_back(Edge{edges.size(), fp.index_of(string_field(e, "black")), fp.index_of(string_field(e, "white")),
                         rational_value(field(e, "weight"), "edge weight")});
  }

  std::vector<std::vector<std::size_t>> rotation(fp.size());
  const Json& rot = field(j, "rotation");
  if (!rot.is_object()) schema("rotation must be an object keyed by label");
  for (const auto& [label, ids] : rot.items()) {
    std::size_t v = fp.index_of(label);
    if (!ids.is_array()) schema("rotation entries must be arrays of edge ids");
    for (const Json& id : ids) {
      auto it = remap.find(size_value(id, "edge id"));
      if (it == remap.end()) throw ValidationError(ValidationKind::rotation_mismatch, "rotation names an unknown edge");
      rotation[v].push_back(it->second);
    }
  }

  Marks marks;
  if (j.contains("marks") && !j.at("marks").is_null()) {
    const Json& m = j.at("marks");
    if (!m.is_array() || m.size() != 2 || !m[0].is_string() || !m[1].is_string()) {
      schema("marks must be a pair of labels");
    }
    marks = std::make_pair(fp.index_of(m[0].get<std::string>()), fp.index_of(m[1].get<std::string>()));
  }
  return ParsedForest{PlaneForest(passport, std::move(edges), std::move(rotation)), marks};
}

Json region_to_json(const Permutation& p) {
  Region region = build_region(p);
  Json j;
  j["passport"] = p.passport().to_string();
  j["permutation"] = p.to_string();
  Json heights = Json::array();
  for (const auto& h : p.cumulative_sums()) heights.push_back(to_string(h));
  j["heights"] = heights;
  Json vertical = Json::array();
  for (const auto& c : region.columns()) {
    vertical.push_back({{"i", c.i}, {"y_min", to_string(c.y_min)}, {"y_max", to_string(c.y_max)}});
  }
  j["vertical"] = vertical;
  Json horizontal = Json::array();
  for (const auto& r : horizontal_decomposition(region)) {
    horizontal.push_back(
        {{"k", r.k}, {"l", r.l}, {"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"side", to_string(r.side)}});
  }
  j["horizontal"] = horizontal;
  return j;
}

ParsedRegion region_from_json(const Json& j) {
  if (!j.is_object()) schema("region JSON must be an object");
  ParsedRegion out;
  const Json& vs = field(j, "vertical");
  if (!vs.is_array()) schema("vertical must be an array");
  for (const Json& c : vs) {
    VerticalRect r{size_value(field(c, "i"), "column index"), rational_value(field(c, "y_min"), "y_min"),
                   rational_value(field(c, "y_max"), "y_max")};
    if (r.y_min > r.y_max) schema("column with y_min > y_max");
    out.columns.push_back(r);
  }
  const Json& hs = field(j, "horizontal");
  if (!hs.is_array()) schema("horizontal must be an array");
  for (const Json& h : hs) {
    HorizontalRect r{size_value(field(h, "k"), "k"), size_value(field(h, "l"), "l"), rational_value(field(h, "lo"), "lo"),
                     rational_value(field(h, "hi"), "hi"), side_value(field(h, "side"))};
    if (r.k >= r.l || r.lo >= r.hi) schema("degenerate horizontal rectangle");
    out.rects.push_back(r);
  }
  return out;
}

Json class_to_json(const Permutation& p, const PermClass& c) {
  Json j;
  j["passport"] = p.passport().to_string();
  j["permutation"] = p.to_string();
  Json heights = Json::array();
  for (const auto& h : p.cumulative_sums()) heights.push_back(to_string(h));
  j["heights"] = heights;
  j["positive"] = c.positive;
  j["nonnegative"] = c.nonnegative;
  j["tree"] = c.tree;
  j["positive_tree"] = c.positive_tree;
  if (c.tree) {
    j["sign_changes"] = c.sign_changes;
    Json path = Json::array();
    for (std::size_t v : mark_path(p)) path.push_back(p.passport().label_text(v));
    j["mark_path"] = path;
  }
  return j;
}

Json count_to_json(const CountReport& r, const std::vector<PartitionTerm>& terms, const FullPassport& fp) {
  Json j;
  j["passport"] = r.passport;
  j["trees"] = r.trees.str();
  j["pos_tree_perms"] = r.pos_tree_perms.str();
  j["pos_perms"] = r.pos_perms.str();
  j["nonneg_perms"] = r.nonneg_perms.str();
  j["tree_perms"] = r.tree_perms.str();
  j["partitions"] = r.partitions.str();
  j["zero_edge_trees"] = r.zero_edge_trees.str();
  Json ts = Json::array();
  for (const auto& t : terms) {
    ts.push_back({{"partition", format_partition(fp, t.partition)},
                  {"blocks", t.partition.size()},
                  {"x", t.x.str()},
                  {"term", to_string(t.term)}});
  }
  j["terms"] = ts;
  return j;
}

Json catalog_to_json(const TreeCatalog& c) {
  Json j;
  j["passport"] = c.passport->to_string();
  j["count"] = c.trees.size();
  Json trees = Json::array();
  for (const auto& e : c.trees) {
    Json w = Json::array();
    for (const auto& p : e.witnesses) w.push_back(p.to_string());
    trees.push_back({{"canonical", e.canonical}, {"tree", forest_to_json(e.tree)}, {"witnesses", w}});
  }
  j["trees"] = trees;
  return j;
}

Json verify_to_json(const VerifyReport& r) {
  Json j;
  j["passport"] = r.passport;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  j["checks"] = checks;
  return j;
}

Json table_to_json(const TreeTable& t) {
  Json j;
  j["n"] = t.n;
  Json parts = Json::array();
  for (const auto& p : t.parts) parts.push_back(format_int_partition(p));
  j["partitions"] = parts;
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.parts.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c <= r; ++c) row.push_back(t.values[r][c].str());
    rows.push_back(row);
  }
  j["lower_triangle"] = rows;
  return j;
}

}  // namespace lwbp
