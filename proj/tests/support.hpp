#pragma once

// Fixtures and random generators shared by the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fuzzynf/dependency.hpp"

namespace fuzzynf::testing {

inline AttributeValue atom(const std::string& s) { return AttributeValue::atom(s); }
inline AttributeValue set(std::initializer_list<Label> labels) { return AttributeValue::multi(SetValue(labels)); }

/// The three-tuple supply instance.
inline RelationInstance supply() {
  Schema schema({{"supplier_name", AttributeKind::Atom},
                 {"part_name", AttributeKind::MultiSet},
                 {"project_name", AttributeKind::MultiSet}});
  return RelationInstance(schema, {{atom("ABC"), set({"P1", "P2"}), set({"ProjX", "ProjY"})},
                                   {atom("MNO"), set({"P1", "P3"}), set({"ProjX", "ProjY"})},
                                   {atom("XYZ"), set({"P2"}), set({"ProjZ"})}});
}

inline JoinDep supply_jd() {
  return JoinDep{{{"supplier_name", "part_name"}, {"supplier_name", "project_name"}, {"part_name", "project_name"}}};
}

/// All-atom relation from rows of labels; duplicates are dropped.
inline RelationInstance atom_relation(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& rows) {
  std::vector<AttributeDef> defs;
  for (const auto& n : names) defs.push_back({n, AttributeKind::Atom});
  std::vector<Tuple> tuples;
  for (const auto& row : rows) {
    Tuple t;
    for (const auto& v : row) t.push_back(atom(v));
    tuples.push_back(std::move(t));
  }
  return RelationInstance::deduplicated(Schema(defs), std::move(tuples));
}

inline RelationInstance spj() {
  return atom_relation({"S", "P", "J"}, {{"s1", "p1", "j2"}, {"s1", "p2", "j1"}, {"s2", "p1", "j1"}, {"s1", "p1", "j1"}});
}

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  /// <= 4 attributes, <= 6 tuples, domain size <= 3 per attribute.
  RelationInstance crisp_instance() {
    const std::size_t arity = uniform(2, 4);
    const std::size_t domain = uniform(1, 3);
    const std::size_t rows = uniform(1, 6);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < arity; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    std::vector<std::vector<std::string>> data;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < arity; ++c) row.push_back(names[c] + std::to_string(uniform(0, domain - 1)));
      data.push_back(std::move(row));
    }
    return atom_relation(names, data);
  }

  /// Relation mixing atom and set columns over a small label pool.
  RelationInstance fuzzy_instance() {
    const std::size_t arity = uniform(1, 4);
    std::vector<AttributeDef> defs;
    for (std::size_t i = 0; i < arity; ++i) {
      defs.push_back({std::string(1, static_cast<char>('A' + i)), coin() ? AttributeKind::MultiSet : AttributeKind::Atom});
    }
    std::vector<Tuple> tuples;
    const std::size_t rows = uniform(1, 6);
    for (std::size_t r = 0; r < rows; ++r) {
      Tuple t;
      for (const auto& d : defs) {
        t.push_back(d.kind == AttributeKind::Atom ? atom("a" + std::to_string(uniform(0, 2))) : AttributeValue::multi(set_value()));
      }
      tuples.push_back(std::move(t));
    }
    return RelationInstance::deduplicated(Schema(defs), std::move(tuples));
  }

  SetValue set_value(std::size_t pool = 5) {
    std::set<Label> labels;
    const std::size_t n = uniform(1, 4);
    while (labels.size() < n) labels.insert("l" + std::to_string(uniform(0, pool - 1)));
    return SetValue(std::move(labels));
  }

  AttributeSubset subset(const Schema& schema, bool nonempty = true) {
    AttributeSubset out;
    for (const auto& a : schema.attributes()) {
      if (coin()) out.insert(a.name);
    }
    if (nonempty && out.empty()) out.insert(schema.at(uniform(0, schema.arity() - 1)).name);
    return out;
  }

  JoinDep join_dep(const Schema& schema, std::size_t max_components = 3) {
    JoinDep jd;
    const std::size_t k = uniform(2, max_components);
    for (std::size_t i = 0; i < k; ++i) jd.components.push_back(subset(schema));
    for (const auto& a : schema.attributes()) {
      const bool covered = std::any_of(jd.components.begin(), jd.components.end(),
                                       [&](const AttributeSubset& c) { return c.count(a.name) > 0; });
      if (!covered) jd.components[uniform(0, k - 1)].insert(a.name);
    }
    return jd;
  }

  Dependency dependency(const Schema& schema) {
    switch (uniform(0, 2)) {
      case 0: return FunctionalDep{subset(schema), subset(schema)};
      case 1: return MultivaluedDep{subset(schema), subset(schema)};
      default: return join_dep(schema);
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace fuzzynf::testing
