#include "fuzzynf/dependency.hpp"

#include <algorithm>
#include <limits>

#include "fuzzynf/error.hpp"

namespace fuzzynf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

AttributeSubset set_union(const AttributeSubset& a, const AttributeSubset& b) {
  AttributeSubset out = a;
  out.insert(b.begin(), b.end());
  return out;
}

AttributeSubset set_intersection(const AttributeSubset& a, const AttributeSubset& b) {
  AttributeSubset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

AttributeSubset set_difference(const AttributeSubset& a, const AttributeSubset& b) {
  AttributeSubset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_subset(const AttributeSubset& a, const AttributeSubset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void require_in_schema(const AttributeSubset& subset, const Schema& schema, std::string_view what) {
  for (const auto& name : subset) {
    if (!schema.find(name)) {
      throw SchemaError(std::string(what) + " names unknown attribute '" + name + "'");
    }
  }
}

void validate_components(const std::vector<AttributeSubset>& components, const Schema& schema) {
  AttributeSubset covered;
  for (const auto& c : components) {
    if (c.empty()) throw SchemaError("join component is empty");
    require_in_schema(c, schema, "join component");
    covered.insert(c.begin(), c.end());
  }
  if (covered != schema.all()) {
    const auto missing = set_difference(schema.all(), covered);
    throw SchemaError("join components do not cover attribute(s) " + format_subset(missing, schema));
  }
}

std::vector<std::string> names_in_order(const AttributeSubset& subset, const Schema& schema) {
  std::vector<std::string> names(subset.begin(), subset.end());
  const auto rank = [&](const std::string& n) {
    return schema.find(n).value_or(std::numeric_limits<std::size_t>::max());
  };
  std::stable_sort(names.begin(), names.end(),
                   [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
  return names;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

// The conditional reading ds(X) <= ds(Y)  =>  ds(X) <= ds(Z), over unordered pairs.
// X may be empty here (pairwise JD mode with disjoint components).
CheckReport paper_mvd(const RelationInstance& r, const AttributeSubset& x, const AttributeSubset& y) {
  const auto& schema = r.schema();
  const auto z = set_difference(schema.all(), set_union(x, y));
  const auto xc = schema.indices_of(x);
  const auto yc = schema.indices_of(y);
  const auto zc = schema.indices_of(z);

  CheckReport report{MultivaluedDep{x, y}, std::string(to_string(MvdMode::Paper))};
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const auto dx = ds_tuple(r[i], r[j], xc);
      const auto dy = ds_tuple(r[i], r[j], yc);
      const auto dz = ds_tuple(r[i], r[j], zc);
      const bool ok = !(dx <= dy) || dx <= dz;
      std::vector<DegreeOnSet> degrees{{x, dx}, {y, dy}, {z, dz}};
      report.trace.push_back({{i, j}, degrees, ok});
      if (!ok) {
        report.counterexamples.push_back(
            {{i, j}, std::nullopt, std::move(degrees),
             "ds(X) <= ds(Y) but ds(X) > ds(Z)"});
      }
    }
  }
  report.holds = report.counterexamples.empty();
  return report;
}

bool superkey_unchecked(const RelationInstance& r, const AttributeSubset& x) {
  const auto xc = r.schema().indices_of(x);
  const auto rest = r.schema().indices_of(set_difference(r.schema().all(), x));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (ds_tuple(r[i], r[j], xc) > ds_tuple(r[i], r[j], rest)) return false;
    }
  }
  return true;
}

// Join of the projections onto `components`, columns in r's schema order.
RelationInstance reconstruct(const RelationInstance& r, const std::vector<AttributeSubset>& components,
                             SimilarityDegree alpha) {
  RelationInstance joined = project(r, components.front());
  for (std::size_t k = 1; k < components.size(); ++k) {
    joined = fuzzy_join(joined, project(r, components[k]), alpha);
  }
  return align_to(joined, r.schema());
}

struct CoverageGaps {
  std::vector<std::size_t> spurious;  // joined tuples not covered by r
  std::vector<std::size_t> lost;      // r tuples not covered by the join
};

CoverageGaps coverage_gaps(const RelationInstance& r, const RelationInstance& joined, SimilarityDegree alpha) {
  CoverageGaps gaps;
  for (std::size_t i = 0; i < joined.size(); ++i) {
    if (!covers(r, joined[i], alpha)) gaps.spurious.push_back(i);
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!covers(joined, r[i], alpha)) gaps.lost.push_back(i);
  }
  return gaps;
}

CheckReport check_mvd_witness(const RelationInstance& r, const MultivaluedDep& mvd) {
  const auto& schema = r.schema();
  const auto z = set_difference(schema.all(), set_union(mvd.lhs, mvd.rhs));
  const auto xc = schema.indices_of(mvd.lhs);
  const auto yc = schema.indices_of(mvd.rhs);
  const auto zc = schema.indices_of(z);

  CheckReport report{mvd, std::string(to_string(MvdMode::Witness))};
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (i == j) continue;
      const auto beta = ds_tuple(r[i], r[j], xc);
      std::optional<std::size_t> witness;
      for (std::size_t k = 0; k < r.size() && !witness; ++k) {
        if (ds_tuple(r[k], r[i], xc) >= beta && ds_tuple(r[k], r[j], xc) >= beta &&
            ds_tuple(r[k], r[i], yc) >= beta && ds_tuple(r[k], r[j], zc) >= beta) {
          witness = k;
        }
      }
      std::vector<std::size_t> tuples{i, j};
      if (witness) tuples.push_back(*witness);
      report.trace.push_back({tuples, {{mvd.lhs, beta}}, witness.has_value()});
      if (!witness) {
        report.counterexamples.push_back(
            {{i, j}, std::nullopt, {{mvd.lhs, beta}},
             "no tuple matches the first on Y and the second on Z at degree ds(X)"});
      }
    }
  }
  report.holds = report.counterexamples.empty();
  return report;
}

}  // namespace

void validate(const Dependency& dep, const Schema& schema) {
  std::visit(overloaded{
                 [&](const FunctionalDep& fd) {
                   if (fd.lhs.empty()) throw SchemaError("FD with an empty left-hand side");
                   require_in_schema(fd.lhs, schema, "FD");
                   require_in_schema(fd.rhs, schema, "FD");
                 },
                 [&](const MultivaluedDep& mvd) {
                   if (mvd.lhs.empty()) throw SchemaError("MVD with an empty left-hand side");
                   require_in_schema(mvd.lhs, schema, "MVD");
                   require_in_schema(mvd.rhs, schema, "MVD");
                 },
                 [&](const JoinDep& jd) {
                   if (jd.components.size() < 2) throw SchemaError("JD needs at least two components");
                   validate_components(jd.components, schema);
                 },
             },
             dep);
}

bool is_trivial(const JoinDep& jd, const Schema& schema) {
  const auto all = schema.all();
  return std::any_of(jd.components.begin(), jd.components.end(),
                     [&](const AttributeSubset& c) { return c == all; });
}

std::string format_subset(const AttributeSubset& subset, const Schema& schema) {
  return "{" + join_names(names_in_order(subset, schema)) + "}";
}

std::string format_dependency(const Dependency& dep, const Schema& schema) {
  return std::visit(overloaded{
                        [&](const FunctionalDep& fd) {
                          return "FD " + join_names(names_in_order(fd.lhs, schema)) + " -> " +
                                 join_names(names_in_order(fd.rhs, schema));
                        },
                        [&](const MultivaluedDep& mvd) {
                          return "MVD " + join_names(names_in_order(mvd.lhs, schema)) + " ->> " +
                                 join_names(names_in_order(mvd.rhs, schema));
                        },
                        [&](const JoinDep& jd) {
                          std::string out = "JD ";
                          for (std::size_t i = 0; i < jd.components.size(); ++i) {
                            if (i) out += ',';
                            out += "(" + join_names(names_in_order(jd.components[i], schema)) + ")";
                          }
                          return out;
                        },
                    },
                    dep);
}

std::string_view to_string(MvdMode mode) noexcept {
  return mode == MvdMode::Paper ? "paper" : "witness";
}

std::string_view to_string(JdMode mode) noexcept {
  return mode == JdMode::Pairwise ? "pairwise" : "reconstruction";
}

std::string_view to_string(KeyRule rule) noexcept {
  return rule == KeyRule::Component ? "component" : "determinant";
}

CheckReport check_ffd(const RelationInstance& r, const FunctionalDep& fd) {
  validate(fd, r.schema());
  const auto xc = r.schema().indices_of(fd.lhs);
  const auto yc = r.schema().indices_of(fd.rhs);

  CheckReport report{fd, "ffd"};
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const auto dx = ds_tuple(r[i], r[j], xc);
      const auto dy = ds_tuple(r[i], r[j], yc);
      const bool ok = dx <= dy;
      std::vector<DegreeOnSet> degrees{{fd.lhs, dx}, {fd.rhs, dy}};
      report.trace.push_back({{i, j}, degrees, ok});
      if (!ok) report.counterexamples.push_back({{i, j}, std::nullopt, std::move(degrees), "ds(X) > ds(Y)"});
    }
  }
  report.holds = report.counterexamples.empty();
  return report;
}

CheckReport check_fmvd(const RelationInstance& r, const MultivaluedDep& mvd, MvdMode mode) {
  validate(mvd, r.schema());
  if (mode == MvdMode::Witness) return check_mvd_witness(r, mvd);
  return paper_mvd(r, mvd.lhs, mvd.rhs);
}

CheckReport check_fjd(const RelationInstance& r, const JoinDep& jd, SimilarityDegree alpha, JdMode mode) {
  validate(jd, r.schema());
  CheckReport report{jd, std::string(to_string(mode))};

  if (mode == JdMode::Pairwise) {
    for (std::size_t a = 0; a < jd.components.size(); ++a) {
      for (std::size_t b = a + 1; b < jd.components.size(); ++b) {
        ComponentPairTrace pair;
        pair.first = a;
        pair.second = b;
        pair.determinant = set_intersection(jd.components[a], jd.components[b]);
        pair.dependent = set_difference(jd.components[a], jd.components[b]);
        pair.determinant_empty = pair.determinant.empty();
        pair.report = paper_mvd(r, pair.determinant, pair.dependent);
        for (auto ce : pair.report.counterexamples) {
          ce.reason = "components " + std::to_string(a + 1) + "," + std::to_string(b + 1) + ": " + ce.reason;
          report.counterexamples.push_back(std::move(ce));
        }
        report.pairs.push_back(std::move(pair));
      }
    }
    report.holds = report.counterexamples.empty();
    return report;
  }

  report.alpha = alpha;
  const auto joined = reconstruct(r, jd.components, alpha);
  const auto gaps = coverage_gaps(r, joined, alpha);
  for (auto i : gaps.spurious) {
    report.counterexamples.push_back({{}, joined[i], {}, "joined tuple is not covered by the instance"});
  }
  for (auto i : gaps.lost) {
    report.counterexamples.push_back({{i}, r[i], {}, "instance tuple is not covered by the join"});
  }
  report.joined = joined.tuples();
  report.holds = report.counterexamples.empty();
  return report;
}

CheckReport check(const RelationInstance& r, const Dependency& dep, const CheckOptions& options) {
  return std::visit(overloaded{
                        [&](const FunctionalDep& fd) { return check_ffd(r, fd); },
                        [&](const MultivaluedDep& mvd) { return check_fmvd(r, mvd, options.mvd_mode); },
                        [&](const JoinDep& jd) { return check_fjd(r, jd, options.alpha, options.jd_mode); },
                    },
                    dep);
}

bool is_superkey(const RelationInstance& r, const AttributeSubset& x) {
  if (x.empty()) throw ArgumentError("superkey test on an empty attribute set");
  require_in_schema(x, r.schema(), "superkey candidate");
  return superkey_unchecked(r, x);
}

std::vector<AttributeSubset> candidate_keys(const RelationInstance& r) {
  const auto& attrs = r.schema().attributes();
  const std::size_t n = attrs.size();
  std::vector<AttributeSubset> keys;

  // combinations of each size in lexicographic order of column indices
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      AttributeSubset candidate;
      for (auto c : pick) candidate.insert(attrs[c].name);
      const bool has_key = std::any_of(keys.begin(), keys.end(),
                                       [&](const AttributeSubset& k) { return is_subset(k, candidate); });
      if (!has_key && superkey_unchecked(r, candidate)) keys.push_back(std::move(candidate));

      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return keys;
}

bool verify_lossless(const RelationInstance& r, const std::vector<AttributeSubset>& components,
                     SimilarityDegree alpha) {
  if (components.empty()) throw SchemaError("no components given");
  validate_components(components, r.schema());
  const auto joined = reconstruct(r, components, alpha);
  const auto gaps = coverage_gaps(r, joined, alpha);
  return gaps.spurious.empty() && gaps.lost.empty();
}

namespace {

std::vector<KeyViolation> key_violations(const RelationInstance& r, const JoinDep& jd, std::size_t index,
                                         KeyRule rule) {
  std::vector<KeyViolation> out;
  const auto flag = [&](const AttributeSubset& s) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const KeyViolation& v) { return v.subset == s; });
    if (!seen && !superkey_unchecked(r, s)) out.push_back({index, s, rule});
  };
  if (rule == KeyRule::Component) {
    for (const auto& c : jd.components) flag(c);
  } else {
    for (std::size_t a = 0; a < jd.components.size(); ++a) {
      for (std::size_t b = a + 1; b < jd.components.size(); ++b) {
        flag(set_intersection(jd.components[a], jd.components[b]));
      }
    }
  }
  return out;
}

CheckReport check_for_normal_form(const RelationInstance& r, const Dependency& dep) {
  return check(r, dep, CheckOptions{MvdMode::Witness, JdMode::Reconstruction, SimilarityDegree::one()});
}

}  // namespace

NormalFormReport is_5nf(const RelationInstance& r, const std::vector<Dependency>& deps, KeyRule rule) {
  for (const auto& d : deps) validate(d, r.schema());

  NormalFormReport report;
  report.rule = rule;
  report.keys = candidate_keys(r);
  for (std::size_t i = 0; i < deps.size(); ++i) {
    report.checks.push_back(check_for_normal_form(r, deps[i]));
    const auto* jd = std::get_if<JoinDep>(&deps[i]);
    if (!jd || !report.checks.back().holds || is_trivial(*jd, r.schema())) continue;
    auto v = key_violations(r, *jd, i, rule);
    report.violations.insert(report.violations.end(), v.begin(), v.end());
  }
  report.holds = report.violations.empty();
  return report;
}

namespace {

AttributeSubset attributes_of(const Dependency& dep) {
  return std::visit(overloaded{
                        [](const FunctionalDep& fd) { return set_union(fd.lhs, fd.rhs); },
                        [](const MultivaluedDep& mvd) { return set_union(mvd.lhs, mvd.rhs); },
                        [](const JoinDep& jd) {
                          AttributeSubset all;
                          for (const auto& c : jd.components) all.insert(c.begin(), c.end());
                          return all;
                        },
                    },
                    dep);
}

DecompositionTree decompose_node(const RelationInstance& r, std::vector<Dependency> deps, SimilarityDegree alpha,
                                 KeyRule rule) {
  DecompositionTree node;
  node.attributes = r.schema().all();
  node.tuple_count = r.size();
  node.dependencies = std::move(deps);

  const auto nf = is_5nf(r, node.dependencies, rule);
  if (nf.holds) return node;

  std::optional<std::size_t> chosen;
  for (const auto& v : nf.violations) {
    const auto& jd = std::get<JoinDep>(node.dependencies[v.dependency_index]);
    if (!chosen || jd.components.size() > std::get<JoinDep>(node.dependencies[*chosen]).components.size()) {
      chosen = v.dependency_index;
    }
  }
  const auto applied = std::get<JoinDep>(node.dependencies[*chosen]);
  node.lossless_verified = verify_lossless(r, applied.components, alpha);

  for (const auto& component : applied.components) {
    std::vector<Dependency> inherited;
    for (const auto& d : node.dependencies) {
      if (is_subset(attributes_of(d), component)) inherited.push_back(d);
    }
    node.children.push_back(decompose_node(project(r, component), std::move(inherited), alpha, rule));
  }
  node.applied = applied;
  return node;
}

}  // namespace

DecompositionTree decompose_5nf(const RelationInstance& r, const std::vector<Dependency>& deps,
                                SimilarityDegree alpha, KeyRule rule) {
  for (const auto& d : deps) validate(d, r.schema());
  return decompose_node(r, deps, alpha, rule);
}

std::size_t DecompositionTree::depth() const noexcept {
  std::size_t deepest = 0;
  for (const auto& c : children) deepest = std::max(deepest, c.depth());
  return children.empty() ? 0 : deepest + 1;
}

std::size_t DecompositionTree::node_count() const noexcept {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

bool DecompositionTree::all_lossless() const noexcept {
  return lossless_verified &&
         std::all_of(children.begin(), children.end(), [](const DecompositionTree& c) { return c.all_lossless(); });
}

}  // namespace fuzzynf
