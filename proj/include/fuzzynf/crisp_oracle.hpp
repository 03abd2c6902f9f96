#pragma once

// Brute-force textbook checkers over all-atom relations. They share no code
// with the similarity engine and serve as its ground truth at alpha = 1.

#include <set>
#include <string>
#include <vector>

#include "fuzzynf/dependency.hpp"

namespace fuzzynf::crisp {

using Row = std::vector<std::string>;

struct Table {
  std::vector<std::string> columns;
  std::set<Row> rows;
};

class CrispRelation {
 public:
  /// Throws SchemaError if any attribute is set-valued.
  explicit CrispRelation(const RelationInstance& r);

  const RelationInstance& instance() const noexcept { return instance_; }
  const Table& table() const noexcept { return table_; }

 private:
  RelationInstance instance_;
  Table table_;
};

Table project(const Table& t, const std::vector<std::string>& columns);
Table natural_join(const Table& a, const Table& b);

bool classical_fd(const CrispRelation& r, const FunctionalDep& fd);
bool classical_mvd(const CrispRelation& r, const MultivaluedDep& mvd);
bool classical_jd(const CrispRelation& r, const JoinDep& jd);
bool classical(const CrispRelation& r, const Dependency& dep);

struct Agreement {
  Dependency dependency;
  bool fuzzy = false;
  bool classical = false;
  bool agree() const noexcept { return fuzzy == classical; }
  CheckReport fuzzy_report;
};

/// Runs the similarity engine (alpha = 1, witness and reconstruction modes)
/// next to the classical checker.
Agreement oracle_diff(const CrispRelation& r, const Dependency& dep);

}  // namespace fuzzynf::crisp
