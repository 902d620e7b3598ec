#include <algorithm>
#include <map>
#include <sstream>

#include "lwbp/engine.hpp"

namespace lwbp {

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, IntPartition& prefix, std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void append_labels(const IntPartition& parts, int sign, std::vector<IndexLabel>& labels) {
  std::map<unsigned, unsigned> next;
  for (unsigned part : parts) labels.push_back(IndexLabel{Weight(Rational(sign * static_cast<int>(part))), ++next[part], false});
}

}  // namespace

std::vector<IntPartition> integer_partitions(unsigned n) {
  std::vector<IntPartition> out;
  IntPartition prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::string format_int_partition(const IntPartition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += ' ';
    s += std::to_string(p[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

FullPassport passport_from_parts(const IntPartition& black, const IntPartition& white) {
  std::vector<IndexLabel> labels;
  append_labels(black, 1, labels);
  append_labels(white, -1, labels);
  return FullPassport(std::move(labels));
}

TreeTable tree_table(unsigned n) {
  if (n < 1) throw std::invalid_argument("table needs n >= 1");
  TreeTable t;
  t.n = n;
  t.parts = integer_partitions(n);
  const std::size_t m = t.parts.size();
  t.values.assign(m, std::vector<BigInt>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) t.values[r][c] = kochetkov_count(passport_from_parts(t.parts[r], t.parts[c]));
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (t.values[r][c] != t.values[c][r]) throw std::logic_error("tree table is not symmetric");
    }
  }
  return t;
}

std::string format_table_text(const TreeTable& t) {
  const std::size_t m = t.parts.size();
  std::vector<std::string> labels;
  std::size_t label_width = 0;
  for (const auto& p : t.parts) {
    labels.push_back(format_int_partition(p));
    label_width = std::max(label_width, labels.back().size());
  }
  std::vector<std::size_t> width(m);
  for (std::size_t c = 0; c < m; ++c) {
    width[c] = labels[c].size();
    for (std::size_t r = c; r < m; ++r) width[c] = std::max(width[c], t.values[r][c].str().size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::ostringstream os;
  os << "n = " << t.n << " (rows: black vertices, columns: white vertices)\n";
  os << std::string(label_width, ' ');
  for (std::size_t c = 0; c < m; ++c) os << "  " << pad(labels[c], width[c]);
  os << '\n';
  for (std::size_t r = 0; r < m; ++r) {
    os << labels[r] << std::string(label_width - labels[r].size(), ' ');
    for (std::size_t c = 0; c <= r; ++c) os << "  " << pad(t.values[r][c].str(), width[c]);
    os << '\n';
  }
  return os.str();
}

std::string format_table_csv(const TreeTable& t) {
  const std::size_t m = t.parts.size();
  std::ostringstream os;
  os << "black\\white";
  for (const auto& p : t.parts) os << ',' << format_int_partition(p);
  os << '\n';
  for (std::size_t r = 0; r < m; ++r) {
    os << format_int_partition(t.parts[r]);
    for (std::size_t c = 0; c < m; ++c) {
      os << ',';
      if (c <= r) os << t.values[r][c].str();
    }
    os << '\n';
  }
  return os.str();
}

std::vector<FullPassport> passports_up_to_weight(unsigned max_weight) {
  std::vector<FullPassport> out;
  for (unsigned w = 1; w <= max_weight; ++w) {
    auto parts = integer_partitions(w);
    for (const auto& b : parts) {
      for (const auto& c : parts) out.push_back(passport_from_parts(b, c));
    }
  }
  return out;
}

}  // namespace lwbp
