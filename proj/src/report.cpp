#include "fuzzynf/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "fuzzynf/error.hpp"

namespace fuzzynf {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---- shared helpers ----------------------------------------------------------

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Info: break;
  }
  return "info";
}

std::string_view dependency_keyword(const Dependency& d) {
  if (std::holds_alternative<FunctionalDep>(d)) return "FD";
  if (std::holds_alternative<MultivaluedDep>(d)) return "MVD";
  return "JD";
}

// format_dependency without the leading keyword
std::string dependency_body(const Dependency& d, const Schema& schema) {
  auto s = format_dependency(d, schema);
  return s.substr(s.find(' ') + 1);
}

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i].to_string();
  }
  return out + ")";
}

std::string tuple_refs(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += "t" + std::to_string(indices[i] + 1);
  }
  return out;
}

std::string components_text(const std::vector<AttributeSubset>& components, const Schema& schema) {
  return dependency_body(JoinDep{components}, schema);
}

// Schemas of decomposition nodes are subsets of the report schema; fall back
// to a schema built from the subset itself when none is attached.
Schema schema_for(const Report& report, const AttributeSubset& fallback) {
  if (report.schema) return *report.schema;
  std::vector<AttributeDef> defs;
  for (const auto& n : fallback) defs.push_back({n, AttributeKind::Atom});
  if (defs.empty()) defs.push_back({"_", AttributeKind::Atom});
  return Schema(defs);
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// ---- JSON ------------------------------------------------------------------

Json degree_json(const SimilarityDegree& d) {
  return Json{{"num", d.numerator()}, {"den", d.denominator()}, {"display", d.display()}};
}

Json subset_json(const AttributeSubset& s, const Schema& schema) {
  Json arr = Json::array();
  std::vector<std::string> names(s.begin(), s.end());
  std::stable_sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    return schema.find(a).value_or(SIZE_MAX) < schema.find(b).value_or(SIZE_MAX);
  });
  for (const auto& n : names) arr.push_back(n);
  return arr;
}

Json tuple_json(const Tuple& t) {
  Json arr = Json::array();
  for (const auto& v : t) arr.push_back(v.to_string());
  return arr;
}

Json indices_json(const std::vector<std::size_t>& indices) {
  Json arr = Json::array();
  for (auto i : indices) arr.push_back(i + 1);
  return arr;
}

Json degrees_json(const std::vector<DegreeOnSet>& degrees, const Schema& schema) {
  Json arr = Json::array();
  for (const auto& d : degrees) arr.push_back({{"attributes", subset_json(d.attributes, schema)}, {"degree", degree_json(d.degree)}});
  return arr;
}

Json check_json(const CheckReport& c, const Schema& schema) {
  Json j;
  j["type"] = "check";
  j["kind"] = dependency_keyword(c.dependency);
  j["dependency"] = format_dependency(c.dependency, schema);
  j["mode"] = c.mode;
  if (c.alpha) j["alpha"] = degree_json(*c.alpha);
  j["holds"] = c.holds;
  Json ces = Json::array();
  for (const auto& ce : c.counterexamples) {
    Json e;
    e["tuples"] = indices_json(ce.tuples);
    if (ce.tuple) e["tuple"] = tuple_json(*ce.tuple);
    e["degrees"] = degrees_json(ce.degrees, schema);
    e["reason"] = ce.reason;
    ces.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(ces);
  Json trace = Json::array();
  for (const auto& t : c.trace) {
    trace.push_back({{"tuples", indices_json(t.tuples)}, {"degrees", degrees_json(t.degrees, schema)}, {"satisfied", t.satisfied}});
  }
  j["trace"] = std::move(trace);
  if (!c.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& p : c.pairs) {
      pairs.push_back({{"components", Json::array({p.first + 1, p.second + 1})},
                       {"determinant", subset_json(p.determinant, schema)},
                       {"dependent", subset_json(p.dependent, schema)},
                       {"determinant_empty", p.determinant_empty},
                       {"report", check_json(p.report, schema)}});
    }
    j["pairs"] = std::move(pairs);
  }
  if (c.joined) {
    Json rows = Json::array();
    for (const auto& t : *c.joined) rows.push_back(tuple_json(t));
    j["joined"] = std::move(rows);
  }
  return j;
}

Json tree_json(const DecompositionTree& t, const Schema& schema) {
  Json j;
  j["attributes"] = subset_json(t.attributes, schema);
  j["tuple_count"] = t.tuple_count;
  Json deps = Json::array();
  for (const auto& d : t.dependencies) deps.push_back(format_dependency(d, schema));
  j["dependencies"] = std::move(deps);
  j["applied"] = t.applied ? Json(format_dependency(*t.applied, schema)) : Json(nullptr);
  j["lossless_verified"] = t.lossless_verified;
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(tree_json(c, schema));
  j["children"] = std::move(children);
  return j;
}

Json item_json(const ReportItem& item, const Report& report) {
  return std::visit(
      overloaded{
          [&](const SimilarityMatrix& m) {
            Json labels = Json::array();
            for (const auto& l : m.labels) labels.push_back(l.to_string());
            Json rows = Json::array();
            for (const auto& row : m.entries) {
              Json r = Json::array();
              for (const auto& d : row) r.push_back(degree_json(d));
              rows.push_back(std::move(r));
            }
            return Json{{"type", "similarity_matrix"}, {"attribute", m.attribute}, {"labels", labels}, {"entries", rows}};
          },
          [&](const CheckReport& c) { return check_json(c, schema_for(report, {})); },
          [&](const KeyList& k) {
            const auto schema = schema_for(report, {});
            Json keys = Json::array();
            for (const auto& key : k.keys) keys.push_back(subset_json(key, schema));
            return Json{{"type", "candidate_keys"}, {"keys", keys}};
          },
          [&](const NormalFormReport& nf) {
            const auto schema = schema_for(report, {});
            Json keys = Json::array();
            for (const auto& key : nf.keys) keys.push_back(subset_json(key, schema));
            Json checks = Json::array();
            for (const auto& c : nf.checks) checks.push_back(check_json(c, schema));
            Json violations = Json::array();
            for (const auto& v : nf.violations) {
              violations.push_back({{"dependency_index", v.dependency_index + 1},
                                    {"role", v.rule == KeyRule::Component ? "component" : "determinant"},
                                    {"attributes", subset_json(v.subset, schema)}});
            }
            return Json{{"type", "normal_form"}, {"rule", to_string(nf.rule)}, {"in_5nf", nf.holds},
                        {"candidate_keys", keys}, {"violations", violations}, {"checks", checks}};
          },
          [&](const DecompositionTree& t) {
            return Json{{"type", "decomposition"}, {"depth", t.depth()}, {"tree", tree_json(t, schema_for(report, t.attributes))}};
          },
          [&](const LosslessResult& l) {
            const auto schema = schema_for(report, {});
            Json comps = Json::array();
            for (const auto& c : l.components) comps.push_back(subset_json(c, schema));
            return Json{{"type", "lossless"}, {"components", comps}, {"alpha", degree_json(l.alpha)}, {"lossless", l.lossless}};
          },
          [&](const crisp::Agreement& a) {
            const auto schema = schema_for(report, {});
            return Json{{"type", "oracle_diff"},
                        {"dependency", format_dependency(a.dependency, schema)},
                        {"fuzzy", a.fuzzy},
                        {"classical", a.classical},
                        {"agree", a.agree()},
                        {"fuzzy_report", check_json(a.fuzzy_report, schema)}};
          },
      },
      item);
}

std::string note_message(const DivergenceNote& n) {
  return "reference value " + n.reference + " for " + n.attribute + " (" + n.row.to_string() + ", " +
         n.column.to_string() + ") differs from the computed degree " + n.computed.exact() + " (" +
         n.computed.display() + ")";
}

std::string render_json(const Report& report) {
  Json j = Json::object();
  if (!report.command.empty()) j["command"] = report.command;
  if (!report.inputs.empty()) {
    Json inputs = Json::array();
    for (const auto& in : report.inputs) inputs.push_back({{"role", in.role}, {"origin", in.origin}, {"sha256", in.sha256}});
    j["inputs"] = std::move(inputs);
  }
  if (!report.command.empty() || !report.items.empty()) j["verdict"] = verdict_name(report.verdict);
  if (!report.items.empty()) {
    Json items = Json::array();
    for (const auto& item : report.items) items.push_back(item_json(item, report));
    j["items"] = std::move(items);
  }
  if (!report.notes.empty()) {
    Json notes = Json::array();
    for (const auto& n : report.notes) {
      notes.push_back({{"attribute", n.attribute},
                       {"row", n.row.to_string()},
                       {"column", n.column.to_string()},
                       {"reference", n.reference},
                       {"computed", degree_json(n.computed)},
                       {"message", note_message(n)}});
    }
    j["notes"] = std::move(notes);
  }
  return j.dump(2) + "\n";
}

// ---- text ------------------------------------------------------------------

void text_degrees(std::ostream& os, const std::vector<DegreeOnSet>& degrees, const Schema& schema) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ' ';
    os << "ds" << format_subset(degrees[i].attributes, schema) << '=' << degrees[i].degree.display();
  }
}

void text_check(std::ostream& os, const CheckReport& c, const Schema& schema, const std::string& indent) {
  os << indent << dependency_keyword(c.dependency) << (c.holds ? " holds: " : " violated: ")
     << dependency_body(c.dependency, schema) << " [" << c.mode;
  if (c.alpha) os << ", alpha=" << c.alpha->exact();
  os << "]\n";
  if (c.joined) os << indent << "  joined tuples: " << c.joined->size() << '\n';
  for (const auto& p : c.pairs) {
    os << indent << "  components " << p.first + 1 << "," << p.second + 1 << ": "
       << format_subset(p.determinant, schema) << " ->> " << format_subset(p.dependent, schema)
       << (p.determinant_empty ? " (empty determinant)" : "") << (p.report.holds ? " holds" : " violated") << '\n';
    for (const auto& t : p.report.trace) {
      os << indent << "    " << tuple_refs(t.tuples) << ": ";
      text_degrees(os, t.degrees, schema);
      os << (t.satisfied ? "  ok" : "  FAIL") << '\n';
    }
  }
  if (!c.pairs.empty()) return;  // counterexamples already shown in the pair traces
  for (const auto& ce : c.counterexamples) {
    os << indent << "  counterexample";
    if (!ce.tuples.empty()) os << ' ' << tuple_refs(ce.tuples);
    if (ce.tuple) os << ' ' << tuple_text(*ce.tuple);
    if (!ce.degrees.empty()) {
      os << ": ";
      text_degrees(os, ce.degrees, schema);
    }
    os << " -- " << ce.reason << '\n';
  }
}

void text_tree(std::ostream& os, const DecompositionTree& t, const Schema& schema, const std::string& indent) {
  os << indent << format_subset(t.attributes, schema) << " (" << t.tuple_count << " tuples)";
  if (t.applied) {
    os << " split by " << format_dependency(*t.applied, schema) << (t.lossless_verified ? ", lossless" : ", LOSSY");
  } else {
    os << " leaf";
  }
  os << '\n';
  for (const auto& c : t.children) text_tree(os, c, schema, indent + "  ");
}

void text_matrix(std::ostream& os, const SimilarityMatrix& m) {
  std::size_t width = 4;
  for (const auto& l : m.labels) width = std::max(width, l.to_string().size());
  width += 2;
  const auto emit_row = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  os << "degree of similarity: " << m.attribute << '\n';
  std::string header = pad("", width);
  for (const auto& l : m.labels) header += pad(l.to_string(), width);
  emit_row(header);
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    std::string line = pad(m.labels[i].to_string(), width);
    for (const auto& d : m.entries[i]) line += pad(d.display(), width);
    emit_row(line);
  }
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& item : report.items) {
    std::visit(overloaded{
                   [&](const SimilarityMatrix& m) { text_matrix(os, m); },
                   [&](const CheckReport& c) { text_check(os, c, schema_for(report, {}), ""); },
                   [&](const KeyList& k) {
                     const auto schema = schema_for(report, {});
                     for (const auto& key : k.keys) os << "candidate key: " << format_subset(key, schema) << '\n';
                   },
                   [&](const NormalFormReport& nf) {
                     const auto schema = schema_for(report, {});
                     if (nf.holds) os << "in 5NF (" << to_string(nf.rule) << " rule)\n";
                     for (const auto& v : nf.violations) {
                       os << "NOT in 5NF: " << to_string(v.rule) << ' ' << format_subset(v.subset, schema)
                          << " is not a superkey (dependency " << v.dependency_index + 1 << ")\n";
                     }
                     for (const auto& key : nf.keys) os << "candidate key: " << format_subset(key, schema) << '\n';
                     for (const auto& c : nf.checks) text_check(os, c, schema, "");
                   },
                   [&](const DecompositionTree& t) { text_tree(os, t, schema_for(report, t.attributes), ""); },
                   [&](const LosslessResult& l) {
                     os << (l.lossless ? "lossless: " : "lossy: ")
                        << components_text(l.components, schema_for(report, {})) << " at alpha=" << l.alpha.exact()
                        << '\n';
                   },
                   [&](const crisp::Agreement& a) {
                     const auto schema = schema_for(report, {});
                     os << (a.agree() ? "agree: " : "DISAGREE: ") << format_dependency(a.dependency, schema)
                        << " (fuzzy " << (a.fuzzy ? "holds" : "violated") << ", classical "
                        << (a.classical ? "holds" : "violated") << ")\n";
                     if (!a.agree()) text_check(os, a.fuzzy_report, schema, "  ");
                   },
               },
               item);
  }
  if (!report.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : report.notes) os << "  " << note_message(n) << '\n';
  }
  return os.str();
}

// ---- supply reference ------------------------------------------------------

struct ReferenceTable {
  std::string_view attribute;
  std::vector<AttributeValue> rows;  // one per printed row, in tuple order
  std::vector<std::vector<std::string_view>> cells;
};

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = [] {
    const auto xy = AttributeValue::multi(SetValue{"ProjX", "ProjY"});
    const auto z = AttributeValue::multi(SetValue{"ProjZ"});
    return std::vector<ReferenceTable>{
        {"part_name",
         {AttributeValue::multi(SetValue{"P1", "P2"}), AttributeValue::multi(SetValue{"P1", "P3"}),
          AttributeValue::multi(SetValue{"P2"})},
         {{"1", "0.34", "0"}, {"0.34", "1", "0.34"}, {"0", "0.5", "1"}}},
        {"project_name", {xy, xy, z}, {{"1", "1", "0.33"}, {"1", "1", "0.33"}, {"0.7", "0.7", "1"}}},
    };
  }();
  return tables;
}

const RelationInstance& supply_reference() {
  static const RelationInstance supply = [] {
    Schema schema({{"supplier_name", AttributeKind::Atom},
                   {"part_name", AttributeKind::MultiSet},
                   {"project_name", AttributeKind::MultiSet}});
    const auto s = [](std::initializer_list<Label> l) { return AttributeValue::multi(SetValue(l)); };
    return RelationInstance(schema, {{AttributeValue::atom("ABC"), s({"P1", "P2"}), s({"ProjX", "ProjY"})},
                                     {AttributeValue::atom("MNO"), s({"P1", "P3"}), s({"ProjX", "ProjY"})},
                                     {AttributeValue::atom("XYZ"), s({"P2"}), s({"ProjZ"})}});
  }();
  return supply;
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(report) : render_text(report);
}

bool is_supply_reference(const RelationInstance& r) { return r.same_tuples(supply_reference()); }

std::vector<DivergenceNote> reference_divergences(const RelationInstance& r, const SimilarityMatrix& m) {
  std::vector<DivergenceNote> notes;
  if (!is_supply_reference(r)) return notes;
  for (const auto& table : reference_tables()) {
    if (table.attribute != m.attribute) continue;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      for (std::size_t j = 0; j < table.rows.size(); ++j) {
        const auto row = m.find(table.rows[i]);
        const auto col = m.find(table.rows[j]);
        if (!row || !col) continue;
        const auto& computed = m.at(*row, *col);
        const std::string printed(table.cells[i][j]);
        if (SimilarityDegree::parse(printed).display() == computed.display()) continue;
        const bool seen = std::any_of(notes.begin(), notes.end(), [&](const DivergenceNote& n) {
          return n.row == table.rows[i] && n.column == table.rows[j] && n.reference == printed;
        });
        if (!seen) notes.push_back({m.attribute, table.rows[i], table.rows[j], printed, computed});
      }
    }
  }
  return notes;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace fuzzynf
