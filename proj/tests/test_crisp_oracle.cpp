#include <doctest.h>

#include "fuzzynf/crisp_oracle.hpp"
#include "fuzzynf/error.hpp"
#include "support.hpp"

using namespace fuzzynf;
using namespace fuzzynf::crisp;
using testing::atom_relation;

TEST_CASE("non-crisp input is rejected") {
  CHECK_THROWS_AS(CrispRelation(testing::supply()), SchemaError);
}

TEST_CASE("classical FD") {
  CHECK(classical_fd(CrispRelation(atom_relation({"A", "B"}, {{"a", "b"}, {"a", "b"}})), {{"A"}, {"B"}}));
  CHECK_FALSE(classical_fd(CrispRelation(atom_relation({"A", "B"}, {{"a", "b1"}, {"a", "b2"}})), {{"A"}, {"B"}}));
  const auto suppliers = project(testing::supply(), {"supplier_name"});
  CHECK(classical_fd(CrispRelation(suppliers), {{"supplier_name"}, {"supplier_name"}}));
}

TEST_CASE("classical MVD") {
  const auto full = atom_relation({"A", "B", "C"}, {{"a", "b1", "c1"}, {"a", "b2", "c2"}, {"a", "b1", "c2"}, {"a", "b2", "c1"}});
  CHECK(classical_mvd(CrispRelation(full), {{"A"}, {"B"}}));
  const auto missing = atom_relation({"A", "B", "C"}, {{"a", "b1", "c1"}, {"a", "b2", "c2"}, {"a", "b1", "c2"}});
  CHECK_FALSE(classical_mvd(CrispRelation(missing), {{"A"}, {"B"}}));
  CHECK(classical_mvd(CrispRelation(missing), {{"A"}, {"B", "C"}}));
}

TEST_CASE("classical JD") {
  CHECK(classical_jd(CrispRelation(testing::spj()), {{{"S", "P"}, {"P", "J"}, {"J", "S"}}}));
  const auto r = atom_relation({"A", "B", "C"}, {{"a1", "b1", "c1"}, {"a2", "b1", "c2"}});
  CHECK_FALSE(classical_jd(CrispRelation(r), {{{"A", "B"}, {"B", "C"}}}));
  CHECK(natural_join(project(CrispRelation(r).table(), {"A", "B"}), project(CrispRelation(r).table(), {"B", "C"})).rows.size() == 4);
  CHECK(classical_jd(CrispRelation(r), {{{"A", "B", "C"}, {"A"}}}));
}

TEST_CASE("binary JD is the MVD on the shared attributes") {
  testing::Generator gen(61);
  for (int i = 0; i < 500; ++i) {
    const CrispRelation r(gen.crisp_instance());
    const auto jd = gen.join_dep(r.instance().schema(), 2);
    AttributeSubset x, y;
    for (const auto& a : jd.components[0]) (jd.components[1].count(a) ? x : y).insert(a);
    REQUIRE(classical_jd(r, jd) == classical_mvd(r, {x, y}));
  }
}

TEST_CASE("oracle_diff agrees on random crisp instances") {
  testing::Generator gen(62);
  for (int i = 0; i < 300; ++i) {
    const CrispRelation r(gen.crisp_instance());
    const auto dep = gen.dependency(r.instance().schema());
    const auto a = oracle_diff(r, dep);
    INFO(format_dependency(dep, r.instance().schema()));
    REQUIRE(a.agree());
  }
}
