#include "fuzzynf/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <limits>

#include "fuzzynf/error.hpp"

namespace fuzzynf {

namespace {

bool in_unit_interval(const SimilarityDegree::Rational& v) {
  return v >= SimilarityDegree::Rational(0) && v <= SimilarityDegree::Rational(1);
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 18 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ArgumentError("invalid degree '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return value;
}

}  // namespace

SimilarityDegree::SimilarityDegree(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("degree with zero denominator");
  Rational v(num, den);
  if (!in_unit_interval(v)) {
    throw ArgumentError("degree " + std::to_string(num) + "/" + std::to_string(den) +
                        " is outside [0, 1]");
  }
  value_ = v;
}

SimilarityDegree::SimilarityDegree(Rational value) : value_(value) {
  if (!in_unit_interval(value_)) throw ArgumentError("degree outside [0, 1]");
}

SimilarityDegree SimilarityDegree::parse(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), whole);
    const auto den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ArgumentError("invalid degree '" + std::string(whole) + "': zero denominator");
    if (num > den) throw ArgumentError("degree '" + std::string(whole) + "' is outside [0, 1]");
    return SimilarityDegree(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty()) int_part = "0";
    if (frac_part.empty() || frac_part.size() > 17) {
      throw ArgumentError("invalid degree '" + std::string(whole) + "'");
    }
    const auto whole_units = parse_digits(int_part, whole);
    const auto frac = parse_digits(frac_part, whole);
    if (whole_units > 1) throw ArgumentError("degree '" + std::string(whole) + "' is outside [0, 1]");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational v = Rational(whole_units) + Rational(frac, scale);
    if (!in_unit_interval(v)) throw ArgumentError("degree '" + std::string(whole) + "' is outside [0, 1]");
    return SimilarityDegree(v);
  }
  const auto n = parse_digits(text, whole);
  if (n > 1) throw ArgumentError("degree '" + std::string(whole) + "' is outside [0, 1]");
  return SimilarityDegree(n, 1);
}

std::string SimilarityDegree::display() const {
  // round(100 * num / den) half-up, then place the decimal point
  const std::int64_t num = value_.numerator();
  const std::int64_t den = value_.denominator();
  const std::int64_t hundredths = (200 * num + den) / (2 * den);
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, 1, '0');
  return std::to_string(hundredths / 100) + "." + frac;
}

std::string SimilarityDegree::exact() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

bool is_valid_label(std::string_view text) noexcept {
  if (text.empty()) return false;
  return std::none_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) || c == ',' || c == ';' || c == '"';
  });
}

SetValue::SetValue(std::initializer_list<Label> labels) : SetValue(std::set<Label>(labels)) {}

SetValue::SetValue(std::set<Label> labels) : elements_(std::move(labels)) {
  if (elements_.empty()) throw ArgumentError("set value must have at least one label");
  for (const auto& label : elements_) {
    if (!is_valid_label(label)) throw ArgumentError("invalid label '" + label + "'");
  }
}

std::string_view to_string(AttributeKind kind) noexcept {
  return kind == AttributeKind::Atom ? "atom" : "set";
}

AttributeValue AttributeValue::atom(Label label) {
  return AttributeValue(AttributeKind::Atom, SetValue{std::move(label)});
}

AttributeValue AttributeValue::multi(SetValue set) {
  return AttributeValue(AttributeKind::MultiSet, std::move(set));
}

std::string AttributeValue::to_string() const {
  if (kind_ == AttributeKind::Atom) return label();
  std::string out = "{";
  bool first = true;
  for (const auto& l : set_.elements()) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

SimilarityDegree sim_directed(const SetValue& x, const SetValue& y) {
  std::vector<Label> common;
  std::set_intersection(x.elements().begin(), x.elements().end(), y.elements().begin(),
                        y.elements().end(), std::back_inserter(common));
  if (common.empty()) return SimilarityDegree::zero();
  if (x == y) return SimilarityDegree::one();

  const auto shared = static_cast<std::int64_t>(common.size());
  const auto only_x = static_cast<std::int64_t>(x.size()) - shared;
  const auto symmetric_difference = static_cast<std::int64_t>(x.size() + y.size()) - 2 * shared;
  return SimilarityDegree(SimilarityDegree::Rational(1) -
                          SimilarityDegree::Rational(only_x, symmetric_difference));
}

SimilarityDegree ds_value(const AttributeValue& x, const AttributeValue& y) {
  return std::min(sim_directed(x.as_set(), y.as_set()), sim_directed(y.as_set(), x.as_set()));
}

}  // namespace fuzzynf
