#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fuzzynf/similarity.hpp"

namespace fuzzynf {

struct AttributeDef {
  std::string name;
  AttributeKind kind = AttributeKind::Atom;

  friend bool operator==(const AttributeDef&, const AttributeDef&) = default;
};

/// A set of attribute names. Resolved against a schema when used; printing
/// and enumeration always follow schema order, never the set's own order.
using AttributeSubset = std::set<std::string>;

/// True when `name` is an identifier: [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_attribute_name(std::string_view name) noexcept;

class Schema {
 public:
  /// Throws SchemaError on an empty attribute list, duplicate or invalid names.
  explicit Schema(std::vector<AttributeDef> attributes);

  std::size_t arity() const noexcept { return attributes_.size(); }
  const std::vector<AttributeDef>& attributes() const noexcept { return attributes_; }
  const AttributeDef& at(std::size_t index) const { return attributes_.at(index); }

  std::optional<std::size_t> find(std::string_view name) const noexcept;
  /// Throws SchemaError for unknown names.
  std::size_t index_of(std::string_view name) const;
  /// Column indices of `subset` in ascending schema order.
  std::vector<std::size_t> indices_of(const AttributeSubset& subset) const;
  /// Names of `subset` in schema order.
  std::vector<std::string> ordered(const AttributeSubset& subset) const;
  AttributeSubset all() const;
  bool contains(const AttributeSubset& subset) const noexcept;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<AttributeDef> attributes_;
};

using Tuple = std::vector<AttributeValue>;

/// A schema plus a duplicate-free sequence of tuples. Immutable once built;
/// input order is kept for reporting only.
class RelationInstance {
 public:
  /// Throws SchemaError when a tuple has the wrong arity or kind, or when two
  /// tuples are exactly equal.
  RelationInstance(Schema schema, std::vector<Tuple> tuples);

  /// Like the constructor but silently drops exact duplicates (first wins).
  static RelationInstance deduplicated(Schema schema, std::vector<Tuple> tuples);

  const Schema& schema() const noexcept { return schema_; }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  const Tuple& operator[](std::size_t i) const { return tuples_[i]; }

  bool contains(const Tuple& t) const;
  bool all_atomic() const noexcept;

  /// Set equality of tuples over equal schemas; tuple order is ignored.
  bool same_tuples(const RelationInstance& other) const;

 private:
  struct Unchecked {};
  RelationInstance(Unchecked, Schema schema, std::vector<Tuple> tuples)
      : schema_(std::move(schema)), tuples_(std::move(tuples)) {}

  Schema schema_;
  std::vector<Tuple> tuples_;
};

/// Degree of similarity over a set of columns: the minimum of per-column ds,
/// or 1 for no columns.
SimilarityDegree ds_tuple(const Tuple& t1, const Tuple& t2, std::span<const std::size_t> columns);
SimilarityDegree ds_tuple(const Schema& schema, const Tuple& t1, const Tuple& t2,
                          const AttributeSubset& w);

/// Restriction to `w` in schema order, deduplicated. Throws ArgumentError for
/// an empty `w` and SchemaError for unknown names.
RelationInstance project(const RelationInstance& r, const AttributeSubset& w);

/// Similarity join. Pairs whose ds over the shared attributes reaches `alpha`
/// are merged: shared sets take the union, shared atoms the left value. The
/// result schema is r1's attributes followed by r2's unshared ones. At
/// alpha = 1 this is the natural join.
RelationInstance fuzzy_join(const RelationInstance& r1, const RelationInstance& r2,
                            SimilarityDegree alpha);

/// Same attribute set as `r`, columns permuted into `target` order.
RelationInstance align_to(const RelationInstance& r, const Schema& target);

/// True iff some tuple of `r` is at least `alpha`-similar to `t` on every attribute.
bool covers(const RelationInstance& r, const Tuple& t, SimilarityDegree alpha);

struct SimilarityMatrix {
  std::string attribute;
  std::vector<AttributeValue> labels;
  std::vector<std::vector<SimilarityDegree>> entries;

  const SimilarityDegree& at(std::size_t row, std::size_t col) const {
    return entries.at(row).at(col);
  }
  /// Index of `value` among the labels, if present.
  std::optional<std::size_t> find(const AttributeValue& value) const;
};

/// Pairwise ds over the distinct values of one column, in first-occurrence order.
SimilarityMatrix sim_matrix(const RelationInstance& r, std::string_view attribute);

}  // namespace fuzzynf
