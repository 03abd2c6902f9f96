#include "fuzzynf/crisp_oracle.hpp"

#include <algorithm>
#include <map>

#include "fuzzynf/error.hpp"

namespace fuzzynf::crisp {

namespace {

std::size_t column(const Table& t, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  if (it == t.columns.end()) throw SchemaError("unknown attribute '" + name + "'");
  return static_cast<std::size_t>(it - t.columns.begin());
}

Row pick(const Row& row, const std::vector<std::size_t>& cols) {
  Row out;
  for (auto c : cols) out.push_back(row[c]);
  return out;
}

std::vector<std::size_t> columns_of(const Table& t, const AttributeSubset& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(column(t, n));
  return out;
}

Table ordered_like(const Table& t, const std::vector<std::string>& order) {
  std::vector<std::size_t> cols;
  for (const auto& n : order) cols.push_back(column(t, n));
  Table out{order, {}};
  for (const auto& row : t.rows) out.rows.insert(pick(row, cols));
  return out;
}

}  // namespace

CrispRelation::CrispRelation(const RelationInstance& r) : instance_(r) {
  for (const auto& a : r.schema().attributes()) {
    if (a.kind != AttributeKind::Atom) {
      throw SchemaError("attribute '" + a.name + "' is set-valued; the classical checkers need atoms only");
    }
    table_.columns.push_back(a.name);
  }
  for (const auto& t : r.tuples()) {
    Row row;
    for (const auto& v : t) row.push_back(v.label());
    table_.rows.insert(std::move(row));
  }
}

Table project(const Table& t, const std::vector<std::string>& columns) {
  return ordered_like(t, columns);
}

Table natural_join(const Table& a, const Table& b) {
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  std::vector<std::size_t> extra;
  Table out{a.columns, {}};
  for (std::size_t j = 0; j < b.columns.size(); ++j) {
    const auto it = std::find(a.columns.begin(), a.columns.end(), b.columns[j]);
    if (it != a.columns.end()) {
      shared.emplace_back(static_cast<std::size_t>(it - a.columns.begin()), j);
    } else {
      extra.push_back(j);
      out.columns.push_back(b.columns[j]);
    }
  }
  for (const auto& ra : a.rows) {
    for (const auto& rb : b.rows) {
      const bool match = std::all_of(shared.begin(), shared.end(),
                                     [&](const auto& p) { return ra[p.first] == rb[p.second]; });
      if (!match) continue;
      Row row = ra;
      for (auto j : extra) row.push_back(rb[j]);
      out.rows.insert(std::move(row));
    }
  }
  return out;
}

bool classical_fd(const CrispRelation& r, const FunctionalDep& fd) {
  const auto& t = r.table();
  const auto x = columns_of(t, fd.lhs);
  const auto y = columns_of(t, fd.rhs);
  std::map<Row, Row> image;
  for (const auto& row : t.rows) {
    auto [it, fresh] = image.emplace(pick(row, x), pick(row, y));
    if (!fresh && it->second != pick(row, y)) return false;
  }
  return true;
}

bool classical_mvd(const CrispRelation& r, const MultivaluedDep& mvd) {
  const auto& t = r.table();
  const auto x = columns_of(t, mvd.lhs);
  const auto y = columns_of(t, mvd.rhs);
  AttributeSubset rest;
  for (const auto& c : t.columns) {
    if (!mvd.lhs.count(c) && !mvd.rhs.count(c)) rest.insert(c);
  }
  const auto z = columns_of(t, rest);

  for (const auto& t1 : t.rows) {
    for (const auto& t2 : t.rows) {
      if (pick(t1, x) != pick(t2, x)) continue;
      const bool witnessed = std::any_of(t.rows.begin(), t.rows.end(), [&](const Row& t3) {
        return pick(t3, x) == pick(t1, x) && pick(t3, y) == pick(t1, y) && pick(t3, z) == pick(t2, z);
      });
      if (!witnessed) return false;
    }
  }
  return true;
}

bool classical_jd(const CrispRelation& r, const JoinDep& jd) {
  const auto& t = r.table();
  if (jd.components.empty()) return true;
  auto names = [](const AttributeSubset& s) { return std::vector<std::string>(s.begin(), s.end()); };
  Table joined = project(t, names(jd.components.front()));
  for (std::size_t k = 1; k < jd.components.size(); ++k) {
    joined = natural_join(joined, project(t, names(jd.components[k])));
  }
  return ordered_like(joined, t.columns).rows == t.rows;
}

bool classical(const CrispRelation& r, const Dependency& dep) {
  if (const auto* fd = std::get_if<FunctionalDep>(&dep)) return classical_fd(r, *fd);
  if (const auto* mvd = std::get_if<MultivaluedDep>(&dep)) return classical_mvd(r, *mvd);
  return classical_jd(r, std::get<JoinDep>(dep));
}

Agreement oracle_diff(const CrispRelation& r, const Dependency& dep) {
  validate(dep, r.instance().schema());
  Agreement a{dep};
  a.fuzzy_report = check(r.instance(), dep);
  a.fuzzy = a.fuzzy_report.holds;
  a.classical = classical(r, dep);
  return a;
}

}  // namespace fuzzynf::crisp
