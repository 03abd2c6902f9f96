#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace fuzzynf {

/// An exact rational in [0, 1]. Every membership value, directed similarity
/// and degree of similarity is carried as one of these; nothing is ever
/// compared after rounding.
class SimilarityDegree {
 public:
  using Rational = boost::rational<std::int64_t>;

  constexpr SimilarityDegree() = default;
  /// Throws ArgumentError when the value lies outside [0, 1] or den == 0.
  SimilarityDegree(std::int64_t num, std::int64_t den);
  explicit SimilarityDegree(Rational value);

  static SimilarityDegree zero() { return SimilarityDegree{}; }
  static SimilarityDegree one() { return SimilarityDegree{1, 1}; }

  /// Accepts "p/q", "1", "0" or a decimal such as "0.4" (read as exactly 2/5).
  static SimilarityDegree parse(std::string_view text);

  std::int64_t numerator() const noexcept { return value_.numerator(); }
  std::int64_t denominator() const noexcept { return value_.denominator(); }
  const Rational& value() const noexcept { return value_; }

  /// Rounded half-up to two decimals, e.g. "0.33" for 1/3 and "1.00" for 1.
  std::string display() const;
  /// "1/2", or "1" / "0" for integral values.
  std::string exact() const;

  friend bool operator==(const SimilarityDegree& a, const SimilarityDegree& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const SimilarityDegree& a, const SimilarityDegree& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

using Label = std::string;

/// True when `text` is usable as a label: nonempty, no whitespace, no `,` or `;`.
bool is_valid_label(std::string_view text) noexcept;

/// A finite nonempty set of labels: one multivalued cell such as {P1,P2}.
class SetValue {
 public:
  /// Throws ArgumentError on an empty set or an invalid label.
  SetValue(std::initializer_list<Label> labels);
  explicit SetValue(std::set<Label> labels);

  const std::set<Label>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const SetValue&, const SetValue&) = default;
  friend auto operator<=>(const SetValue&, const SetValue&) = default;

 private:
  std::set<Label> elements_;
};

enum class AttributeKind { Atom, MultiSet };

std::string_view to_string(AttributeKind kind) noexcept;

/// A cell of a relation: either an atomic label or a set of labels. Atoms are
/// stored as singletons so the similarity functions have one code path.
class AttributeValue {
 public:
  static AttributeValue atom(Label label);
  static AttributeValue multi(SetValue set);

  AttributeKind kind() const noexcept { return kind_; }
  const SetValue& as_set() const noexcept { return set_; }
  /// The single label of an atom. Only meaningful when kind() == Atom.
  const Label& label() const noexcept { return *set_.elements().begin(); }

  /// "ABC" for atoms, "{P1,P2}" for sets.
  std::string to_string() const;

  // Equality and ordering look at the label set only, so Atom(a) == MultiSet({a}).
  friend bool operator==(const AttributeValue& a, const AttributeValue& b) {
    return a.set_ == b.set_;
  }
  friend auto operator<=>(const AttributeValue& a, const AttributeValue& b) {
    return a.set_ <=> b.set_;
  }

 private:
  AttributeValue(AttributeKind kind, SetValue set) : kind_(kind), set_(std::move(set)) {}

  AttributeKind kind_;
  SetValue set_;
};

/// Directed set similarity: 0 for disjoint sets, 1 for equal sets, otherwise
/// 1 - |x \ (x∩y)| / |(x∪y) \ (x∩y)|.
SimilarityDegree sim_directed(const SetValue& x, const SetValue& y);

/// Symmetric degree of similarity of two cells: the smaller of the two
/// directed similarities. Equals 1 exactly when the cells are equal.
SimilarityDegree ds_value(const AttributeValue& x, const AttributeValue& y);

}  // namespace fuzzynf
