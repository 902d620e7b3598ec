#include "lwbp/passport.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "lwbp/errors.hpp"

namespace lwbp {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

unsigned parse_positive(std::string_view s, std::string_view token, const char* what) {
  if (s.empty() || s.size() > 9) {
    throw ParseError(std::string("bad ") + what + " in '" + std::string(token) + "'");
  }
  unsigned v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("bad ") + what + " in '" + std::string(token) + "'");
    }
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  if (v == 0) throw ParseError(std::string(what) + " must be positive in '" + std::string(token) + "'");
  return v;
}

struct Term {
  IndexLabel label;
  unsigned multiplicity;
  bool explicit_subscript;
};

Term parse_term(std::string_view token) {
  std::string_view body = token;
  unsigned mult = 1;
  if (auto caret = body.find('^'); caret != std::string_view::npos) {
    mult = parse_positive(body.substr(caret + 1), token, "multiplicity");
    body = body.substr(0, caret);
  }
  unsigned sub = 1;
  bool explicit_sub = false;
  if (auto us = body.find('_'); us != std::string_view::npos) {
    sub = parse_positive(body.substr(us + 1), token, "subscript");
    body = body.substr(0, us);
    explicit_sub = true;
  }
  if (body.empty()) throw ParseError("missing weight in '" + std::string(token) + "'");
  return Term{IndexLabel{Weight(parse_rational(body)), sub, explicit_sub}, mult, explicit_sub};
}

std::string power_token(const IndexLabel& label, bool show_subscript, unsigned mult) {
  std::string s = format_label(label, show_subscript);
  if (mult > 1) s += "^" + std::to_string(mult);
  return s;
}

}  // namespace

bool canonical_less(const IndexLabel& a, const IndexLabel& b) {
  const Rational& x = a.weight.value();
  const Rational& y = b.weight.value();
  if (x != y) {
    if ((x > 0) != (y > 0)) return x > 0;
    return x > 0 ? x > y : x < y;
  }
  return a.subscript < b.subscript;
}

IndexLabel parse_label(std::string_view token) {
  if (token.find('^') != std::string_view::npos) {
    throw ParseError("a label cannot carry a multiplicity: '" + std::string(token) + "'");
  }
  return parse_term(token).label;
}

std::string format_label(const IndexLabel& label, bool show_subscript) {
  std::string s = to_string(label.weight.value());
  if (show_subscript) s += "_" + std::to_string(label.subscript);
  return s;
}

// ---------------------------------------------------------------------------

Passport::Passport(std::vector<PassportEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError(ValidationKind::weight_sum, "empty passport");
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const PassportEntry& a, const PassportEntry& b) { return canonical_less(a.label, b.label); });
  Rational sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.multiplicity == 0) throw ValidationError(ValidationKind::schema, "multiplicity must be positive");
    if (i > 0 && entries_[i - 1].label == e.label) {
      throw ValidationError(ValidationKind::duplicate_label,
                            "duplicate label " + format_label(e.label, true));
    }
    sum += e.multiplicity * e.label.weight.value();
    if (e.label.weight.is_black()) {
      black_count_ += e.multiplicity;
      total_weight_ += e.multiplicity * e.label.weight.value();
    } else {
      white_count_ += e.multiplicity;
    }
  }
  if (sum != 0) {
    throw ValidationError(ValidationKind::weight_sum, "weights sum to " + lwbp::to_string(sum) + ", not 0");
  }
  if (black_count_ == 0 || white_count_ == 0) {
    throw ValidationError(ValidationKind::single_color, "both signs must occur");
  }
}

Passport Passport::parse(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("empty passport");
  // Bare repeated weights merge into one entry: "1 1 -2" reads as "1^2 -2".
  std::vector<PassportEntry> entries;
  std::vector<bool> bare;
  for (auto token : tokens) {
    Term t = parse_term(token);
    bool merged = false;
    if (!t.explicit_subscript) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (bare[i] && entries[i].label.weight == t.label.weight) {
          entries[i].multiplicity += t.multiplicity;
          merged = true;
          break;
        }
      }
    }
    if (!merged) {
      entries.push_back(PassportEntry{t.label, t.multiplicity});
      bare.push_back(!t.explicit_subscript);
    }
  }
  return Passport(std::move(entries));
}

bool Passport::is_full() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const PassportEntry& e) { return e.multiplicity == 1; });
}

std::string Passport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    bool shared = (i > 0 && entries_[i - 1].label.weight == e.label.weight) ||
                  (i + 1 < entries_.size() && entries_[i + 1].label.weight == e.label.weight);
    if (i) os << ' ';
    os << power_token(e.label, shared || e.label.subscript != 1 || e.label.explicit_subscript, e.multiplicity);
  }
  return os.str();
}

bool existence_check(const Passport& passport) {
  BigInt scale = 1;
  for (const auto& e : passport.entries()) scale = lcm(scale, denominator(e.label.weight.value()));
  BigInt g = 0;
  for (const auto& e : passport.entries()) {
    Rational scaled = e.label.weight.magnitude() * scale;
    g = boost::multiprecision::gcd(g, numerator(scaled));
  }
  Rational gcd_wt(g, scale);
  return Rational(passport.vertex_count() - 1) * gcd_wt <= passport.total_weight();
}

// ---------------------------------------------------------------------------

FullPassport::FullPassport(std::vector<IndexLabel> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw ValidationError(ValidationKind::weight_sum, "a full passport needs at least two labels");
  if (labels_.size() > kMaxFullPassportSize) {
    throw ValidationError(ValidationKind::too_large, "at most 62 labels are supported");
  }
  std::stable_sort(labels_.begin(), labels_.end(), canonical_less);
  Rational sum = 0;
  bool black = false, white = false;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0 && labels_[i - 1] == labels_[i]) {
      throw ValidationError(ValidationKind::duplicate_label, "duplicate label " + format_label(labels_[i], true));
    }
    sum += labels_[i].weight.value();
    (labels_[i].weight.is_black() ? black : white) = true;
  }
  if (sum != 0) {
    throw ValidationError(ValidationKind::weight_sum, "weights sum to " + lwbp::to_string(sum) + ", not 0");
  }
  if (!black || !white) throw ValidationError(ValidationKind::single_color, "both signs must occur");

  scale_ = 1;
  for (const auto& l : labels_) scale_ = lcm(scale_, denominator(l.weight.value()));
  BigInt abs_total = 0;
  scaled_.reserve(labels_.size());
  for (const auto& l : labels_) {
    Rational s = l.weight.value() * scale_;
    abs_total += abs(numerator(s));
    scaled_.push_back(0);
    if (abs_total > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
      throw ValidationError(ValidationKind::too_large, "weights too large for exact machine arithmetic");
    }
    scaled_.back() = numerator(s).convert_to<std::int64_t>();
  }

  show_subscript_.resize(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    bool shared = (i > 0 && labels_[i - 1].weight == labels_[i].weight) ||
                  (i + 1 < labels_.size() && labels_[i + 1].weight == labels_[i].weight);
    show_subscript_[i] = shared || labels_[i].subscript != 1 || labels_[i].explicit_subscript;
  }
}

FullPassport FullPassport::parse(std::string_view text) { return expand_full(Passport::parse(text)); }

std::int64_t FullPassport::scaled_sum(Mask subset) const {
  std::int64_t s = 0;
  while (subset) {
    s += scaled_[static_cast<std::size_t>(__builtin_ctzll(subset))];
    subset &= subset - 1;
  }
  return s;
}

Mask FullPassport::universe() const noexcept { return (Mask{1} << labels_.size()) - 1; }

std::string FullPassport::label_text(std::size_t i) const { return format_label(labels_.at(i), show_subscript_.at(i)); }

std::optional<std::size_t> FullPassport::find(const IndexLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FullPassport::index_of(std::string_view token) const {
  auto idx = find(parse_label(token));
  if (!idx) throw ValidationError(ValidationKind::unknown_label, "unknown label '" + std::string(token) + "'");
  return *idx;
}

FullPassport FullPassport::sub(Mask subset) const {
  std::vector<IndexLabel> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (subset >> i & 1) out.push_back(labels_[i]);
  }
  return FullPassport(std::move(out));
}

Passport FullPassport::as_passport() const {
  std::vector<PassportEntry> entries;
  for (const auto& l : labels_) entries.push_back(PassportEntry{l, 1});
  return Passport(std::move(entries));
}

std::string FullPassport::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ' ';
    s += label_text(i);
  }
  return s;
}

FullPassport expand_full(const Passport& passport) {
  // A weight keeps its subscripts when every entry of that weight is single;
  // otherwise its copies are renumbered 1..count in canonical order.
  std::map<Rational, bool> renumber;
  for (const auto& e : passport.entries()) {
    if (e.multiplicity > 1) renumber[e.label.weight.value()] = true;
  }
  std::vector<IndexLabel> labels;
  std::map<Rational, unsigned> next;
  for (const auto& e : passport.entries()) {
    const Rational& w = e.label.weight.value();
    if (renumber.count(w)) {
      for (unsigned k = 0; k < e.multiplicity; ++k) labels.push_back(IndexLabel{e.label.weight, ++next[w], false});
    } else {
      labels.push_back(e.label);
    }
  }
  return FullPassport(std::move(labels));
}

}  // namespace lwbp
