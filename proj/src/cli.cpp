#include "lwbp/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lwbp/errors.hpp"
#include "lwbp/json_io.hpp"
#include "lwbp/render.hpp"

namespace lwbp {

namespace {

enum class Format { text, json, csv };

struct Globals {
  std::string format = "text";
  std::string out_path;
  std::size_t max_n = kDefaultEngineLimit;
  std::uint64_t seed = 1;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void no_csv(const Globals& g, const char* command) {
  if (g.fmt() == Format::csv) throw UsageError(std::string("--format csv is not available for ") + command);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string count_command(const Globals& g, const std::string& text) {
  FullPassport fp = FullPassport::parse(text);
  CountReport report = count_report(fp);
  std::vector<PartitionTerm> terms = kochetkov_terms(fp);
  std::ostringstream os;
  switch (g.fmt()) {
    case Format::json:
      return dump(count_to_json(report, terms, fp));
    case Format::csv:
      os << "partition,blocks,x,term\n";
      for (const auto& t : terms) {
        os << '"' << format_partition(fp, t.partition) << "\"," << t.partition.size() << ',' << t.x << ','
           << to_string(t.term) << '\n';
      }
      return os.str();
    case Format::text:
      break;
  }
  os << report.trees << '\n';
  for (const auto& t : terms) {
    os << "  " << (t.term < 0 ? "- " : "+ ") << to_string(abs(t.term)) << "  " << format_partition(fp, t.partition)
       << "  X = " << t.x << '\n';
  }
  return os.str();
}

std::string enumerate_command(const Globals& g, const std::string& text, const std::string& list, bool brute) {
  auto passport = make_passport_ref(FullPassport::parse(text));
  std::ostringstream os;
  if (!list.empty()) {
    no_csv(g, "enumerate --list");
    auto perms = list_permutations(passport, parse_perm_filter(list), g.max_n);
    if (g.fmt() == Format::json) {
      Json arr = Json::array();
      for (const auto& p : perms) arr.push_back(p.to_string());
      return dump(Json{{"passport", passport->to_string()}, {"filter", list}, {"count", perms.size()}, {"permutations", arr}});
    }
    for (const auto& p : perms) os << p.to_string() << '\n';
    return os.str();
  }
  TreeCatalog catalog = brute ? brute_force_trees(passport, g.max_n) : enumerate_trees(passport, g.max_n);
  if (g.fmt() == Format::json) return dump(catalog_to_json(catalog));
  if (g.fmt() == Format::csv) {
    os << "tree,permutation\n";
    for (std::size_t i = 0; i < catalog.trees.size(); ++i) {
      for (const auto& w : catalog.trees[i].witnesses) os << i + 1 << ",\"" << w.to_string() << "\"\n";
    }
    return os.str();
  }
  os << catalog.trees.size() << " trees for " << passport->to_string() << '\n';
  for (std::size_t i = 0; i < catalog.trees.size(); ++i) {
    const auto& e = catalog.trees[i];
    os << "T" << i + 1 << ": " << e.canonical << '\n';
    for (const auto& w : e.witnesses) os << "    " << w.to_string() << '\n';
  }
  return os.str();
}

std::string comb_command(const Globals& g, const std::string& text, const std::string& perm) {
  no_csv(g, "comb");
  auto passport = make_passport_ref(FullPassport::parse(text));
  Permutation p = Permutation::parse(passport, perm);
  TwiceMarkedForest t = comb(p);
  if (g.fmt() == Format::json) return dump(Json{{"forest", forest_to_json(t)}, {"region", region_to_json(p)}});
  const FullPassport& fp = *passport;
  std::ostringstream os;
  os << "forest: " << t.forest.canonical_form() << '\n';
  os << "marks: " << fp.label_text(t.a) << ' ' << fp.label_text(t.b) << '\n';
  os << "components: " << t.forest.component_count() << '\n';
  os << "rectangles:\n";
  for (const auto& r : horizontal_decomposition(build_region(p))) {
    os << "  [" << r.k << ',' << r.l << "] " << to_string(r.lo) << ".." << to_string(r.hi) << ' ' << to_string(r.side)
       << " weight " << to_string(r.weight()) << '\n';
  }
  return os.str();
}

std::string fold_command(const Globals& g, const std::string& path, const std::string& a, const std::string& b) {
  no_csv(g, "fold");
  ParsedForest parsed = forest_from_json(read_json_file(path));
  const FullPassport& fp = parsed.forest.passport();
  Permutation p = fold(TwiceMarkedForest(parsed.forest, fp.index_of(a), fp.index_of(b)));
  if (g.fmt() == Format::json) return dump(Json{{"passport", fp.to_string()}, {"permutation", p.to_string()}});
  return p.to_string() + "\n";
}

std::string classify_command(const Globals& g, const std::string& text, const std::string& perm) {
  no_csv(g, "classify");
  auto passport = make_passport_ref(FullPassport::parse(text));
  Permutation p = Permutation::parse(passport, perm);
  PermClass c = classify(p);
  if (g.fmt() == Format::json) return dump(class_to_json(p, c));
  std::ostringstream os;
  os << "heights:";
  for (const auto& h : p.cumulative_sums()) os << ' ' << to_string(h);
  os << '\n';
  os << "positive: " << std::boolalpha << c.positive << '\n';
  os << "nonnegative: " << c.nonnegative << '\n';
  os << "tree: " << c.tree << '\n';
  os << "positive_tree: " << c.positive_tree << '\n';
  if (c.tree) {
    os << "sign_changes:";
    for (std::size_t i : c.sign_changes) os << ' ' << i;
    os << "\nmark_path:";
    for (std::size_t v : mark_path(p)) os << ' ' << passport->label_text(v);
    os << '\n';
  }
  return os.str();
}

std::string verify_command(const Globals& g, const std::string& text, unsigned samples, bool& pass) {
  auto passport = make_passport_ref(FullPassport::parse(text));
  VerifyOptions options;
  options.max_n = g.max_n;
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (unsigned i = 0; i < samples; ++i) options.x_samples.push_back(Rational(num(rng), den(rng)));
  VerifyReport report = verify(passport, options);
  pass = report.pass();
  if (g.fmt() == Format::json) return dump(verify_to_json(report));
  std::ostringstream os;
  if (g.fmt() == Format::csv) {
    os << "check,pass,seconds,detail\n";
    for (const auto& c : report.checks) {
      os << c.name << ',' << (c.pass ? "true" : "false") << ',' << std::fixed << std::setprecision(3) << c.seconds
         << ",\"" << c.detail << "\"\n";
    }
    return os.str();
  }
  os << "passport " << report.passport << '\n';
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (pass ? "all checks passed\n" : "some checks failed\n");
  return os.str();
}

std::string table_command(const Globals& g, unsigned n) {
  TreeTable t = tree_table(n);
  switch (g.fmt()) {
    case Format::json:
      return dump(table_to_json(t));
    case Format::csv:
      return format_table_csv(t);
    case Format::text:
      break;
  }
  return format_table_text(t);
}

std::string render_command(const Globals& g, const std::string& path, const std::string& to) {
  no_csv(g, "render");
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("forest") && j.contains("region")) j = j.at("forest");
  bool region = j.is_object() && j.contains("vertical");
  if (region) {
    ParsedRegion r = region_from_json(j);
    return to == "dot" ? render_region_dot(r) : render_region_svg(r);
  }
  ParsedForest f = forest_from_json(j);
  return to == "dot" ? render_forest_dot(f.forest) : render_forest_svg(f.forest, f.marks);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of labeled weighted bi-colored plane trees", "lwbp"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-n", g.max_n, "Vertex limit for exhaustive enumeration")
      ->check(CLI::Range(std::size_t{1}, kMaxEngineLimit));
  app.add_option("--seed", g.seed, "Seed for sampled checks");

  std::string passport, perm, path, a, b, list, to = "svg";
  bool brute = false;
  unsigned n = 0, samples = 3;

  auto* count = app.add_subcommand("count", "Count trees with a passport and show the partition sum");
  count->add_option("passport", passport)->required();
  auto* enumerate = app.add_subcommand("enumerate", "List the trees of a passport with their permutations");
  enumerate->add_option("passport", passport)->required();
  enumerate->add_option("--list", list, "List permutations of a class instead")
      ->check(CLI::IsMember({"all", "positive", "nonnegative", "tree", "positive_tree"}));
  enumerate->add_flag("--brute-force", brute, "Group all tree permutations instead of positive ones");
  auto* comb_cmd = app.add_subcommand("comb", "Comb a permutation into a marked forest");
  comb_cmd->add_option("passport", passport)->required();
  comb_cmd->add_option("permutation", perm)->required();
  auto* fold_cmd = app.add_subcommand("fold", "Fold a twice-marked tree into a permutation");
  fold_cmd->add_option("tree", path)->required();
  fold_cmd->add_option("a", a)->required();
  fold_cmd->add_option("b", b)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify a permutation by its cumulative sums");
  classify_cmd->add_option("passport", passport)->required();
  classify_cmd->add_option("permutation", perm)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check formulas, bijection and invariants");
  verify_cmd->add_option("passport", passport)->required();
  verify_cmd->add_option("--samples", samples, "Extra random rational points for the identities");
  auto* table = app.add_subcommand("table", "Tree counts over pairs of integer partitions of n");
  table->add_option("n", n)->required()->check(CLI::Range(1u, 30u));
  auto* render = app.add_subcommand("render", "Draw forest or region JSON");
  render->add_option("input", path)->required();
  render->add_option("--to", to, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  int status = 0;
  std::string text;
  try {
    if (count->parsed()) {
      text = count_command(g, passport);
    } else if (enumerate->parsed()) {
      text = enumerate_command(g, passport, list, brute);
    } else if (comb_cmd->parsed()) {
      text = comb_command(g, passport, perm);
    } else if (fold_cmd->parsed()) {
      text = fold_command(g, path, a, b);
    } else if (classify_cmd->parsed()) {
      text = classify_command(g, passport, perm);
    } else if (verify_cmd->parsed()) {
      bool pass = true;
      text = verify_command(g, passport, samples, pass);
      if (!pass) status = 2;
    } else if (table->parsed()) {
      text = table_command(g, n);
    } else if (render->parsed()) {
      text = render_command(g, path, to);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "invalid input (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  } catch (const SizeGuardError& e) {
    err << "too large: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 1;
  }

  if (g.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(g.out_path);
    if (!file) {
      err << "cannot write " << g.out_path << '\n';
      return 1;
    }
    file << text;
  }
  return status;
}

}  // namespace lwbp
