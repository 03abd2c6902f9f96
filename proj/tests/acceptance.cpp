// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzynf/crisp_oracle.hpp"
#include "fuzzynf/dependency.hpp"
#include "fuzzynf/fuzzynf.h"
#include "support.hpp"

using namespace fuzzynf;
using Json = nlohmann::json;

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failed(what);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failed("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owns a report produced through the C interface and returns its rendering.
class CReport {
 public:
  CReport() = default;
  CReport(const CReport&) = delete;
  CReport& operator=(const CReport&) = delete;
  ~CReport() { fnf_report_free(report_); }
  fnf_report** out() { return &report_; }
  fnf_verdict verdict() const { return fnf_report_verdict(report_); }
  std::string text() { return fnf_report_render(report_, FNF_FORMAT_TEXT); }
  Json json() { return Json::parse(fnf_report_render(report_, FNF_FORMAT_JSON)); }

 private:
  fnf_report* report_ = nullptr;
};

struct Inputs {
  fnf_relation* rel = nullptr;
  fnf_deps* deps = nullptr;
  Inputs(const std::string& rel_path, const std::string& deps_path) {
    if (fnf_relation_load(rel_path.c_str(), &rel) != FNF_OK) throw Failed(fnf_last_error());
    if (!deps_path.empty() && fnf_deps_load(deps_path.c_str(), &deps) != FNF_OK) throw Failed(fnf_last_error());
  }
  ~Inputs() {
    fnf_deps_free(deps);
    fnf_relation_free(rel);
  }
};

const std::string kData = FUZZYNF_DATA_DIR;
const std::string kGolden = FUZZYNF_GOLDEN_DIR;

bool degree_is(const Json& d, std::int64_t num, std::int64_t den) {
  return d["num"] == num && d["den"] == den;
}

Json sim_matrix_json(const std::string& attribute, std::string* text = nullptr) {
  Inputs in(kData + "/supply.csv", "");
  CReport r;
  if (fnf_sim_matrix(in.rel, attribute.c_str(), r.out()) != FNF_OK) throw Failed(fnf_last_error());
  if (text) *text = r.text();
  return r.json();
}

std::size_t label_index(const Json& matrix, const std::string& label) {
  const auto& labels = matrix["labels"];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw Failed("label " + label + " missing from matrix");
}

std::set<std::string> parse_label_set(const std::string& s) {
  std::set<std::string> out;
  std::string body = s.front() == '{' ? s.substr(1, s.size() - 2) : s;
  std::stringstream ss(body);
  for (std::string part; std::getline(ss, part, ',');) out.insert(part);
  return out;
}

// ---- criteria ----------------------------------------------------------------

void table_consistent_entries() {
  const auto parts = sim_matrix_json("part_name")["items"][0];
  const auto& e = parts["entries"];
  expect(parts["labels"].size() == 3 && e.size() == 3, "part_name matrix is 3x3");
  for (std::size_t i = 0; i < 3; ++i) {
    expect(degree_is(e[i][i], 1, 1), "unit diagonal");
    for (std::size_t j = 0; j < 3; ++j) expect(e[i][j] == e[j][i], "symmetric");
  }
  expect(degree_is(e[label_index(parts, "{P1,P2}")][label_index(parts, "{P2}")], 0, 1), "ds({P1,P2},{P2}) = 0");

  const auto projects = sim_matrix_json("project_name")["items"][0];
  const auto xy = label_index(projects, "{ProjX,ProjY}");
  expect(degree_is(projects["entries"][xy][xy], 1, 1), "ds({ProjX,ProjY},{ProjX,ProjY}) = 1");
}

void divergence_ledger() {
  std::string part_text;
  auto parts = sim_matrix_json("part_name", &part_text);
  auto projects = sim_matrix_json("project_name");
  const auto& pm = parts["items"][0];
  expect(degree_is(pm["entries"][label_index(pm, "{P1,P2}")][label_index(pm, "{P1,P3}")], 1, 2),
         "ds({P1,P2},{P1,P3}) = 1/2");
  for (const auto* report : {&parts, &projects}) {
    const auto& m = (*report)["items"][0];
    for (std::size_t i = 0; i < m["labels"].size(); ++i) {
      for (std::size_t j = 0; j < m["labels"].size(); ++j) {
        const auto a = parse_label_set(m["labels"][i]);
        const auto b = parse_label_set(m["labels"][j]);
        const bool disjoint = std::none_of(a.begin(), a.end(), [&](const std::string& l) { return b.count(l) > 0; });
        if (disjoint) expect(degree_is(m["entries"][i][j], 0, 1), "disjoint pair has ds 0");
      }
    }
  }
  std::set<std::string> flagged;
  for (const auto* report : {&parts, &projects}) {
    for (const auto& n : (*report)["notes"]) flagged.insert(n["reference"].get<std::string>());
  }
  expect(flagged == std::set<std::string>{"0.34", "0.5", "0.33", "0.7"}, "notes flag 0.34, 0.5, 0.33 and 0.7");

  parts.erase("inputs");
  projects.erase("inputs");
  expect(parts == Json::parse(slurp(kGolden + "/supply_part_name.json")), "part_name JSON matches golden file");
  expect(projects == Json::parse(slurp(kGolden + "/supply_project_name.json")), "project_name JSON matches golden file");
  expect(part_text == slurp(kGolden + "/supply_part_name.txt"), "part_name text matches golden file");
}

void supply_jd_holds() {
  Inputs in(kData + "/supply.csv", "");
  fnf_deps* deps = nullptr;
  const char* jd = "JD (supplier_name,part_name),(supplier_name,project_name),(part_name,project_name)\n";
  expect(fnf_deps_parse(jd, "supply-jd", &deps) == FNF_OK, "JD parses");
  CReport r;
  const auto status = fnf_check(in.rel, deps, FNF_MVD_WITNESS, FNF_JD_RECONSTRUCTION, {1, 1}, r.out());
  fnf_deps_free(deps);
  expect(status == FNF_OK, "check runs");
  expect(r.verdict() == FNF_VERDICT_HOLDS, "JD holds");
  const auto item = r.json()["items"][0];
  const auto expected = Json::parse(R"([["ABC","{P1,P2}","{ProjX,ProjY}"],["MNO","{P1,P3}","{ProjX,ProjY}"],["XYZ","{P2}","{ProjZ}"]])");
  auto joined = item["joined"];
  std::sort(joined.begin(), joined.end());
  expect(joined == expected, "project-join reproduces exactly the three tuples");
}

void supply_not_5nf() {
  const auto r = testing::supply();
  expect(candidate_keys(r) == std::vector<AttributeSubset>{{"supplier_name"}}, "keys = [{supplier_name}]");
  expect(!is_superkey(r, {"part_name"}), "{part_name} is not a superkey");
  expect(!is_superkey(r, {"part_name", "project_name"}), "{part_name,project_name} is not a superkey");

  Inputs in(kData + "/supply.csv", kData + "/supply.deps");
  for (auto rule : {FNF_RULE_COMPONENT, FNF_RULE_DETERMINANT}) {
    CReport nf;
    expect(fnf_is_5nf(in.rel, in.deps, rule, nf.out()) == FNF_OK, "is-5nf runs");
    expect(nf.verdict() == FNF_VERDICT_VIOLATED, "not in 5NF");
  }
  CReport d;
  expect(fnf_decompose(in.rel, in.deps, {1, 1}, FNF_RULE_COMPONENT, d.out()) == FNF_OK, "decompose runs");
  const auto tree = d.json()["items"][0]["tree"];
  expect(tree["lossless_verified"] == true, "root lossless_verified");
  const auto expected = Json::parse(R"([["supplier_name","part_name"],["supplier_name","project_name"],["part_name","project_name"]])");
  expect(tree["children"].size() == 3, "three components");
  for (std::size_t i = 0; i < 3; ++i) {
    expect(tree["children"][i]["attributes"] == expected[i], "component attributes");
    expect(tree["children"][i]["lossless_verified"] == true, "child lossless_verified");
  }
}

struct Corpus {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t agreements = 0;
};

void crisp_oracle_equivalence() {
  testing::Generator gen(2024);
  Corpus c;
  for (; c.instances < 300; ++c.instances) {
    const crisp::CrispRelation r(gen.crisp_instance());
    const auto& schema = r.instance().schema();
    const std::vector<Dependency> deps{FunctionalDep{gen.subset(schema), gen.subset(schema)},
                                       MultivaluedDep{gen.subset(schema), gen.subset(schema)}, gen.join_dep(schema)};
    for (const auto& d : deps) {
      ++c.checks;
      if (crisp::oracle_diff(r, d).agree()) ++c.agreements;
    }
  }
  expect(c.instances >= 200, "at least 200 instances");
  expect(c.agreements == c.checks, std::to_string(c.checks - c.agreements) + " disagreements out of " + std::to_string(c.checks));
}

void binary_jd_mvd_correspondence() {
  testing::Generator gen(2025);
  std::size_t cases = 0;
  for (int i = 0; i < 300; ++i) {
    const crisp::CrispRelation cr(gen.crisp_instance());
    const auto& r = cr.instance();
    auto jd = gen.join_dep(r.schema(), 2);
    const auto pivot = r.schema().at(gen.uniform(0, r.schema().arity() - 1)).name;
    jd.components[0].insert(pivot);
    jd.components[1].insert(pivot);
    AttributeSubset x, y;
    for (const auto& a : jd.components[0]) (jd.components[1].count(a) ? x : y).insert(a);
    const MultivaluedDep mvd{x, y};
    const bool jd_holds = check_fjd(r, jd, SimilarityDegree::one(), JdMode::Reconstruction).holds;
    const bool mvd_holds = check_fmvd(r, mvd, MvdMode::Witness).holds;
    expect(jd_holds == mvd_holds, "fuzzy verdicts differ on " + format_dependency(jd, r.schema()));
    expect(crisp::classical_jd(cr, jd) == crisp::classical_mvd(cr, mvd), "classical verdicts differ");
    ++cases;
  }
  expect(cases >= 200, "at least 200 cases");
}

void spj_classic() {
  const auto r = testing::spj();
  const auto one = SimilarityDegree::one();
  expect(check_fjd(r, {{{"S", "P"}, {"P", "J"}, {"J", "S"}}}, one, JdMode::Reconstruction).holds, "JD(SP,PJ,JS) holds");
  expect(!check_fjd(r, {{{"S", "P"}, {"S", "J"}}}, one, JdMode::Reconstruction).holds, "JD(SP,SJ) fails");
  expect(!check_fjd(r, {{{"S", "P"}, {"P", "J"}}}, one, JdMode::Reconstruction).holds, "JD(SP,PJ) fails");
  expect(!check_fmvd(r, {{"S"}, {"P"}}, MvdMode::Witness).holds, "S ->> P fails");
  expect(!check_fmvd(r, {{"P"}, {"S"}}, MvdMode::Witness).holds, "P ->> S fails");
}

void similarity_properties() {
  testing::Generator gen(2026);
  const auto zero = SimilarityDegree::zero();
  const auto one = SimilarityDegree::one();
  for (int i = 0; i < 2000; ++i) {
    const auto x = gen.set_value(4);
    const auto y = gen.set_value(4);
    const auto vx = AttributeValue::multi(x);
    const auto vy = AttributeValue::multi(y);
    const auto sxy = sim_directed(x, y);
    const auto syx = sim_directed(y, x);
    const auto d = ds_value(vx, vy);
    expect(zero <= sxy && sxy <= one && zero <= d && d <= one, "range");
    expect(d == ds_value(vy, vx), "symmetry");
    expect(ds_value(vx, vx) == one && (d == one) == (x == y), "identity");
    const bool disjoint = std::none_of(x.elements().begin(), x.elements().end(),
                                       [&](const Label& l) { return y.elements().count(l) > 0; });
    if (disjoint) expect(sxy == zero && syx == zero && d == zero, "disjointness gives 0");
    const bool strict = x.size() < y.size() &&
                        std::includes(y.elements().begin(), y.elements().end(), x.elements().begin(), x.elements().end());
    if (strict) expect(sxy == one && syx == zero && d == zero, "strict containment gives 0");
  }
  for (int i = 0; i < 1000; ++i) {
    const auto r = gen.fuzzy_instance();
    const auto& s = r.schema();
    const auto& t1 = r[gen.uniform(0, r.size() - 1)];
    const auto& t2 = r[gen.uniform(0, r.size() - 1)];
    const auto w1 = gen.subset(s, false);
    const auto w2 = gen.subset(s, false);
    AttributeSubset both = w1;
    both.insert(w2.begin(), w2.end());
    expect(ds_tuple(s, t1, t2, both) == std::min(ds_tuple(s, t1, t2, w1), ds_tuple(s, t1, t2, w2)), "min-decomposition");
  }
}

void covers_monotonicity() {
  testing::Generator gen(2027);
  std::size_t cases = 0;
  for (int i = 0; i < 600; ++i) {
    const auto r = gen.fuzzy_instance();
    const auto& t = r[gen.uniform(0, r.size() - 1)];
    // compare against r without t so the answer is not trivially 1
    std::vector<Tuple> rest;
    for (const auto& u : r.tuples()) if (!(u == t)) rest.push_back(u);
    const RelationInstance pool(r.schema(), rest);
    const SimilarityDegree a1(static_cast<std::int64_t>(gen.uniform(0, 6)), 6);
    const SimilarityDegree a2(static_cast<std::int64_t>(gen.uniform(0, 6)), 6);
    const auto lo = std::min(a1, a2);
    const auto hi = std::max(a1, a2);
    if (covers(pool, t, hi)) expect(covers(pool, t, lo), "covers is monotone in alpha");
    ++cases;
  }
  expect(cases >= 500, "at least 500 cases");
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "table-consistent similarity entries", 1.0, table_consistent_entries},
      {"AC2", "divergence notes and golden files", 1.0, divergence_ledger},
      {"AC3", "supply JD holds by reconstruction", 1.0, supply_jd_holds},
      {"AC4", "supply not in 5NF, lossless 3-way decomposition", 1.0, supply_not_5nf},
      {"AC5", "crisp oracle equivalence (FD, witness MVD, reconstruction JD)", 30.0, crisp_oracle_equivalence},
      {"AC6", "binary JD <=> MVD on the shared attributes", 30.0, binary_jd_mvd_correspondence},
      {"AC7", "SPJ classic verdicts", 1.0, spj_classic},
      {"AC8", "similarity-core property suite", 10.0, similarity_properties},
      {"AC9", "covers monotone in alpha", 10.0, covers_monotonicity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && seconds >= c.budget_seconds) {
      error = "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    }
    const bool pass = error.empty();
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << "  " << c.name << "  (" << static_cast<long>(seconds * 1000)
              << " ms)";
    if (!pass) std::cout << "  -- " << error;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
