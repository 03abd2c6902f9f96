#include "fuzzynf/relation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fuzzynf/error.hpp"

namespace fuzzynf {

bool is_valid_attribute_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

Schema::Schema(std::vector<AttributeDef> attributes) : attributes_(std::move(attributes)) {
  if (attributes_.empty()) throw SchemaError("schema needs at least one attribute");
  std::set<std::string_view> seen;
  for (const auto& a : attributes_) {
    if (!is_valid_attribute_name(a.name)) throw SchemaError("invalid attribute name '" + a.name + "'");
    if (!seen.insert(a.name).second) throw SchemaError("duplicate attribute name '" + a.name + "'");
  }
}

std::optional<std::size_t> Schema::find(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SchemaError("unknown attribute '" + std::string(name) + "'");
}

std::vector<std::size_t> Schema::indices_of(const AttributeSubset& subset) const {
  std::vector<std::size_t> out;
  out.reserve(subset.size());
  for (const auto& name : subset) out.push_back(index_of(name));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Schema::ordered(const AttributeSubset& subset) const {
  std::vector<std::string> out;
  for (auto i : indices_of(subset)) out.push_back(attributes_[i].name);
  return out;
}

AttributeSubset Schema::all() const {
  AttributeSubset out;
  for (const auto& a : attributes_) out.insert(a.name);
  return out;
}

bool Schema::contains(const AttributeSubset& subset) const noexcept {
  return std::all_of(subset.begin(), subset.end(), [this](const std::string& n) { return find(n).has_value(); });
}

namespace {

void check_conformance(const Schema& schema, const Tuple& t, std::size_t row) {
  if (t.size() != schema.arity()) {
    throw SchemaError("tuple " + std::to_string(row + 1) + " has " + std::to_string(t.size()) +
                      " values, schema has " + std::to_string(schema.arity()));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind() != schema.at(i).kind) {
      throw SchemaError("tuple " + std::to_string(row + 1) + ": attribute '" + schema.at(i).name +
                        "' expects a " + std::string(to_string(schema.at(i).kind)) + " value");
    }
  }
}

}  // namespace

RelationInstance::RelationInstance(Schema schema, std::vector<Tuple> tuples)
    : schema_(std::move(schema)), tuples_(std::move(tuples)) {
  std::set<Tuple> seen;
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    check_conformance(schema_, tuples_[i], i);
    if (!seen.insert(tuples_[i]).second) {
      throw SchemaError("tuple " + std::to_string(i + 1) + " duplicates an earlier tuple");
    }
  }
}

RelationInstance RelationInstance::deduplicated(Schema schema, std::vector<Tuple> tuples) {
  std::set<Tuple> seen;
  std::vector<Tuple> kept;
  kept.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    check_conformance(schema, tuples[i], i);
    if (seen.insert(tuples[i]).second) kept.push_back(std::move(tuples[i]));
  }
  return RelationInstance(Unchecked{}, std::move(schema), std::move(kept));
}

bool RelationInstance::contains(const Tuple& t) const {
  return std::find(tuples_.begin(), tuples_.end(), t) != tuples_.end();
}

bool RelationInstance::all_atomic() const noexcept {
  return std::all_of(schema_.attributes().begin(), schema_.attributes().end(),
                     [](const AttributeDef& a) { return a.kind == AttributeKind::Atom; });
}

bool RelationInstance::same_tuples(const RelationInstance& other) const {
  if (!(schema_ == other.schema_)) return false;
  return std::set<Tuple>(tuples_.begin(), tuples_.end()) ==
         std::set<Tuple>(other.tuples_.begin(), other.tuples_.end());
}

SimilarityDegree ds_tuple(const Tuple& t1, const Tuple& t2, std::span<const std::size_t> columns) {
  auto result = SimilarityDegree::one();
  for (auto c : columns) {
    result = std::min(result, ds_value(t1.at(c), t2.at(c)));
    if (result == SimilarityDegree::zero()) break;
  }
  return result;
}

SimilarityDegree ds_tuple(const Schema& schema, const Tuple& t1, const Tuple& t2, const AttributeSubset& w) {
  const auto columns = schema.indices_of(w);
  return ds_tuple(t1, t2, columns);
}

RelationInstance project(const RelationInstance& r, const AttributeSubset& w) {
  if (w.empty()) throw ArgumentError("projection onto an empty attribute set");
  const auto columns = r.schema().indices_of(w);
  std::vector<AttributeDef> defs;
  for (auto c : columns) defs.push_back(r.schema().at(c));
  std::vector<Tuple> rows;
  rows.reserve(r.size());
  for (const auto& t : r.tuples()) {
    Tuple row;
    row.reserve(columns.size());
    for (auto c : columns) row.push_back(t[c]);
    rows.push_back(std::move(row));
  }
  return RelationInstance::deduplicated(Schema(std::move(defs)), std::move(rows));
}

RelationInstance fuzzy_join(const RelationInstance& r1, const RelationInstance& r2, SimilarityDegree alpha) {
  const auto& s1 = r1.schema();
  const auto& s2 = r2.schema();

  // (column in r1, column in r2) for shared names, and r2's private columns
  std::vector<std::size_t> shared_left;
  std::vector<std::size_t> shared_right;
  std::vector<std::size_t> private_right;
  for (std::size_t j = 0; j < s2.arity(); ++j) {
    if (auto i = s1.find(s2.at(j).name)) {
      if (s1.at(*i).kind != s2.at(j).kind) {
        throw SchemaError("attribute '" + s2.at(j).name + "' has different kinds on the two sides of a join");
      }
      shared_left.push_back(*i);
      shared_right.push_back(j);
    } else {
      private_right.push_back(j);
    }
  }

  std::vector<AttributeDef> defs = s1.attributes();
  for (auto j : private_right) defs.push_back(s2.at(j));

  std::vector<Tuple> rows;
  for (const auto& a : r1.tuples()) {
    for (const auto& b : r2.tuples()) {
      auto degree = SimilarityDegree::one();
      for (std::size_t k = 0; k < shared_left.size() && degree >= alpha; ++k) {
        degree = std::min(degree, ds_value(a[shared_left[k]], b[shared_right[k]]));
      }
      if (degree < alpha) continue;

      Tuple merged = a;
      for (std::size_t k = 0; k < shared_left.size(); ++k) {
        auto& cell = merged[shared_left[k]];
        if (cell.kind() == AttributeKind::MultiSet && !(cell == b[shared_right[k]])) {
          auto labels = cell.as_set().elements();
          const auto& other = b[shared_right[k]].as_set().elements();
          labels.insert(other.begin(), other.end());
          cell = AttributeValue::multi(SetValue(std::move(labels)));
        }
      }
      for (auto j : private_right) merged.push_back(b[j]);
      rows.push_back(std::move(merged));
    }
  }
  return RelationInstance::deduplicated(Schema(std::move(defs)), std::move(rows));
}

RelationInstance align_to(const RelationInstance& r, const Schema& target) {
  if (r.schema().arity() != target.arity() || !(r.schema().all() == target.all())) {
    throw SchemaError("cannot align relations over different attribute sets");
  }
  std::vector<std::size_t> source;
  for (const auto& a : target.attributes()) {
    const auto i = r.schema().index_of(a.name);
    if (r.schema().at(i).kind != a.kind) throw SchemaError("attribute '" + a.name + "' changes kind");
    source.push_back(i);
  }
  std::vector<Tuple> rows;
  rows.reserve(r.size());
  for (const auto& t : r.tuples()) {
    Tuple row;
    for (auto i : source) row.push_back(t[i]);
    rows.push_back(std::move(row));
  }
  return RelationInstance::deduplicated(target, std::move(rows));
}

bool covers(const RelationInstance& r, const Tuple& t, SimilarityDegree alpha) {
  std::vector<std::size_t> all(r.schema().arity());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return std::any_of(r.tuples().begin(), r.tuples().end(),
                     [&](const Tuple& u) { return ds_tuple(t, u, all) >= alpha; });
}

std::optional<std::size_t> SimilarityMatrix::find(const AttributeValue& value) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == value) return i;
  }
  return std::nullopt;
}

SimilarityMatrix sim_matrix(const RelationInstance& r, std::string_view attribute) {
  const auto column = r.schema().index_of(attribute);
  SimilarityMatrix m;
  m.attribute = std::string(attribute);
  for (const auto& t : r.tuples()) {
    if (!m.find(t[column])) m.labels.push_back(t[column]);
  }
  m.entries.resize(m.labels.size());
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    m.entries[i].reserve(m.labels.size());
    for (std::size_t j = 0; j < m.labels.size(); ++j) m.entries[i].push_back(ds_value(m.labels[i], m.labels[j]));
  }
  return m;
}

}  // namespace fuzzynf
