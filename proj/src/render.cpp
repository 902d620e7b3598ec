#include "lwbp/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lwbp {

namespace {

constexpr double kUnitX = 120.0;
constexpr double kUnitY = 40.0;
constexpr double kMargin = 30.0;
constexpr double kGap = 60.0;

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

struct ComponentView {
  PlaneForest forest;
  std::vector<std::size_t> to_parent;
};

ComponentView component_view(const PlaneForest& f, std::size_t comp) {
  const std::size_t n = f.vertex_count();
  Mask mask = 0;
  std::vector<std::size_t> to_parent, to_child(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (f.components()[v] == comp) {
      mask |= Mask{1} << v;
      to_child[v] = to_parent.size();
      to_parent.push_back(v);
    }
  }
  std::vector<std::size_t> edge_map(f.edges().size(), f.edges().size());
  std::vector<Edge> edges;
  for (const Edge& e : f.edges()) {
    if (f.components()[e.black] != comp) continue;
    edge_map[e.id] = edges.size();
    edges.push_back(Edge{edges.size(), to_child[e.black], to_child[e.white], e.weight});
  }
  std::vector<std::vector<std::size_t>> rotation(to_parent.size());
  for (std::size_t c = 0; c < to_parent.size(); ++c) {
    for (std::size_t id : f.rotation(to_parent[c])) rotation[c].push_back(edge_map[id]);
  }
  return ComponentView{PlaneForest(make_passport_ref(f.passport().sub(mask)), std::move(edges), std::move(rotation)),
                       std::move(to_parent)};
}

std::pair<std::size_t, std::size_t> default_marks(const PlaneForest& f) {
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    if (f.passport().is_black(v)) return {v, f.other_end(f.rotation(v).front(), v)};
  }
  return {0, f.other_end(f.rotation(0).front(), 0)};
}

}  // namespace

std::string render_forest_svg(const PlaneForest& forest, const Marks& marks) {
  const FullPassport& fp = forest.passport();
  const std::size_t n = fp.size();
  std::vector<double> px(n), py(n);
  std::vector<bool> marked(n, false);
  double offset = kMargin, top = 0, bottom = 0;

  for (std::size_t comp = 0; comp < forest.component_count(); ++comp) {
    ComponentView view = forest.is_connected() ? ComponentView{forest, {}} : component_view(forest, comp);
    if (forest.is_connected()) {
      view.to_parent.resize(n);
      for (std::size_t v = 0; v < n; ++v) view.to_parent[v] = v;
    }
    std::pair<std::size_t, std::size_t> m = default_marks(view.forest);
    if (marks) {
      auto a = std::find(view.to_parent.begin(), view.to_parent.end(), marks->first);
      auto b = std::find(view.to_parent.begin(), view.to_parent.end(), marks->second);
      if (a != view.to_parent.end() && b != view.to_parent.end()) {
        m = {static_cast<std::size_t>(a - view.to_parent.begin()), static_cast<std::size_t>(b - view.to_parent.begin())};
        marked[marks->first] = marked[marks->second] = true;
      }
    }
    FoldLayout layout = fold_layout(TwiceMarkedForest(view.forest, m.first, m.second));
    double width = 0;
    for (std::size_t c = 0; c < view.to_parent.size(); ++c) {
      std::size_t v = view.to_parent[c];
      px[v] = offset + to_double(layout.x[c]) * kUnitX;
      py[v] = -to_double((layout.y_min[c] + layout.y_max[c]) / 2) * kUnitY;
      width = std::max(width, to_double(layout.x[c]) * kUnitX);
      top = std::min(top, py[v]);
      bottom = std::max(bottom, py[v]);
    }
    offset += width + kGap;
  }

  const double height = bottom - top + 2 * kMargin;
  const double shift = kMargin - top;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(offset - kGap + kMargin)
     << "\" height=\"" << num(height) << "\">\n";
  for (const Edge& e : forest.edges()) {
    double x1 = px[e.black], y1 = py[e.black] + shift, x2 = px[e.white], y2 = py[e.white] + shift;
    os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    os << "  <text class=\"weight\" x=\"" << num((x1 + x2) / 2) << "\" y=\"" << num((y1 + y2) / 2 - 4)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << to_string(e.weight) << "</text>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool black = fp.is_black(v);
    os << "  <circle cx=\"" << num(px[v]) << "\" cy=\"" << num(py[v] + shift) << "\" r=\"7\" fill=\""
       << (black ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"" << (marked[v] ? "3" : "1.5") << "\"/>\n";
    os << "  <text class=\"label\" x=\"" << num(px[v] + 9) << "\" y=\"" << num(py[v] + shift + 16)
       << "\" font-size=\"12\">" << fp.label_text(v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_forest_dot(const PlaneForest& forest) {
  const FullPassport& fp = forest.passport();
  std::ostringstream os;
  os << "graph forest {\n";
  for (std::size_t v = 0; v < fp.size(); ++v) {
    os << "  \"" << fp.label_text(v) << "\" [shape=circle, style=filled, fillcolor="
       << (fp.is_black(v) ? "black, fontcolor=white" : "white") << "];\n";
  }
  for (const Edge& e : forest.edges()) {
    os << "  \"" << fp.label_text(e.black) << "\" -- \"" << fp.label_text(e.white) << "\" [label=\""
       << to_string(e.weight) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_region_svg(const ParsedRegion& region) {
  double top = 0, bottom = 0;
  std::size_t last = 1;
  for (const auto& c : region.columns) {
    top = std::min(top, -to_double(c.y_max) * kUnitY);
    bottom = std::max(bottom, -to_double(c.y_min) * kUnitY);
    last = std::max(last, c.i + 1);
  }
  const double shift = kMargin - top;
  auto X = [](double x) { return kMargin + (x - 1) * kUnitX / 2; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(X(static_cast<double>(last)) + kMargin)
     << "\" height=\"" << num(bottom - top + 2 * kMargin) << "\">\n";
  for (const auto& c : region.columns) {
    if (c.y_min == c.y_max) continue;
    double x = X(static_cast<double>(c.i));
    os << "  <rect x=\"" << num(x) << "\" y=\"" << num(-to_double(c.y_max) * kUnitY + shift) << "\" width=\""
       << num(kUnitX / 2) << "\" height=\"" << num(to_double(c.y_max - c.y_min) * kUnitY)
       << "\" fill=\"lightgray\" stroke=\"black\"/>\n";
  }
  for (const auto& r : region.rects) {
    for (const Rational& y : {r.lo, r.hi}) {
      os << "  <line x1=\"" << num(X(static_cast<double>(r.k))) << "\" y1=\"" << num(-to_double(y) * kUnitY + shift)
         << "\" x2=\"" << num(X(static_cast<double>(r.l))) << "\" y2=\"" << num(-to_double(y) * kUnitY + shift)
         << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    os << "  <text class=\"weight\" x=\"" << num((X(static_cast<double>(r.k)) + X(static_cast<double>(r.l))) / 2)
       << "\" y=\"" << num(-to_double((r.lo + r.hi) / 2) * kUnitY + shift + 4)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << to_string(r.weight()) << "</text>\n";
  }
  os << "  <line x1=\"" << num(X(1)) << "\" y1=\"" << num(shift) << "\" x2=\"" << num(X(static_cast<double>(last) - 1))
     << "\" y2=\"" << num(shift) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_region_dot(const ParsedRegion& region) {
  std::ostringstream os;
  os << "graph region {\n";
  for (const auto& c : region.columns) os << "  \"" << c.i << "\" [shape=circle];\n";
  for (const auto& r : region.rects) {
    os << "  \"" << r.k << "\" -- \"" << r.l << "\" [label=\"" << to_string(r.weight()) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lwbp
