#include "fuzzynf/fuzzynf.h"

#include <fstream>
#include <sstream>
#include <string>

#include "fuzzynf/crisp_oracle.hpp"
#include "fuzzynf/error.hpp"
#include "fuzzynf/io.hpp"
#include "fuzzynf/report.hpp"

using namespace fuzzynf;

struct fnf_relation {
  RelationInstance relation;
  InputDigest digest;
};

struct fnf_deps {
  std::vector<Dependency> dependencies;
  InputDigest digest;
};

struct fnf_report {
  Report report;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

class IoError : public Error {
 public:
  using Error::Error;
};

template <class F>
fnf_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return FNF_OK;
  } catch (const IoError& e) {
    last_error = e.what();
    return FNF_ERR_IO;
  } catch (const ParseError& e) {
    last_error = e.what();
    return FNF_ERR_PARSE;
  } catch (const SchemaError& e) {
    last_error = e.what();
    return FNF_ERR_SCHEMA;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return FNF_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FNF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return FNF_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
}

std::string read_file(const char* path) {
  require(path, "path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(std::string("cannot read '") + path + "'");
  return ss.str();
}

SimilarityDegree degree_of(fnf_degree d) { return SimilarityDegree(d.num, d.den); }

KeyRule rule_of(fnf_key_rule r) {
  switch (r) {
    case FNF_RULE_COMPONENT: return KeyRule::Component;
    case FNF_RULE_DETERMINANT: return KeyRule::Determinant;
  }
  throw ArgumentError("unknown 5NF rule");
}

void validate_all(const fnf_deps& deps, const Schema& schema) {
  for (const auto& d : deps.dependencies) validate(d, schema);
}

Report make_report(std::string command, const fnf_relation& rel, const fnf_deps* deps = nullptr) {
  Report r;
  r.command = std::move(command);
  r.inputs.push_back(rel.digest);
  if (deps) r.inputs.push_back(deps->digest);
  r.schema = rel.relation.schema();
  return r;
}

void emit(Report report, fnf_report** out) {
  require(out, "output pointer");
  *out = new fnf_report{std::move(report), {}};
}

Verdict verdict_of(bool holds) { return holds ? Verdict::Holds : Verdict::Violated; }

}  // namespace

extern "C" {

const char* fnf_version(void) { return "0.1.0"; }

const char* fnf_last_error(void) { return last_error.c_str(); }

fnf_status fnf_parse_degree(const char* text, fnf_degree* out) {
  return guarded([&] {
    require(text, "degree text");
    require(out, "output pointer");
    const auto d = SimilarityDegree::parse(text);
    *out = {d.numerator(), d.denominator()};
  });
}

fnf_status fnf_relation_parse(const char* text, const char* origin, fnf_relation** out) {
  return guarded([&] {
    require(text, "relation text");
    require(out, "output pointer");
    *out = new fnf_relation{parse_relation(text), {"relation", origin ? origin : "<memory>", sha256_hex(text)}};
  });
}

fnf_status fnf_relation_load(const char* path, fnf_relation** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto text = read_file(path);
    try {
      *out = new fnf_relation{parse_relation(text), {"relation", path, sha256_hex(text)}};
    } catch (const ParseError& e) {
      throw ParseError(std::string(path) + ": " + e.message(), e.line(), e.column());
    }
  });
}

size_t fnf_relation_tuple_count(const fnf_relation* rel) { return rel ? rel->relation.size() : 0; }

size_t fnf_relation_attribute_count(const fnf_relation* rel) { return rel ? rel->relation.schema().arity() : 0; }

void fnf_relation_free(fnf_relation* rel) { delete rel; }

fnf_status fnf_deps_parse(const char* text, const char* origin, fnf_deps** out) {
  return guarded([&] {
    require(text, "dependency text");
    require(out, "output pointer");
    *out = new fnf_deps{parse_deps(text), {"dependencies", origin ? origin : "<memory>", sha256_hex(text)}};
  });
}

fnf_status fnf_deps_load(const char* path, fnf_deps** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto text = read_file(path);
    try {
      *out = new fnf_deps{parse_deps(text), {"dependencies", path, sha256_hex(text)}};
    } catch (const ParseError& e) {
      throw ParseError(std::string(path) + ": " + e.message(), e.line(), e.column());
    }
  });
}

size_t fnf_deps_count(const fnf_deps* deps) { return deps ? deps->dependencies.size() : 0; }

void fnf_deps_free(fnf_deps* deps) { delete deps; }

fnf_status fnf_sim_matrix(const fnf_relation* rel, const char* attribute, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(attribute, "attribute");
    auto report = make_report("sim-matrix", *rel);
    auto matrix = sim_matrix(rel->relation, attribute);
    report.notes = reference_divergences(rel->relation, matrix);
    report.items.emplace_back(std::move(matrix));
    emit(std::move(report), out);
  });
}

fnf_status fnf_check(const fnf_relation* rel, const fnf_deps* deps, fnf_mvd_mode mvd_mode, fnf_jd_mode jd_mode,
                     fnf_degree alpha, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(deps, "dependencies");
    if (mvd_mode != FNF_MVD_WITNESS && mvd_mode != FNF_MVD_PAPER) throw ArgumentError("unknown MVD mode");
    if (jd_mode != FNF_JD_RECONSTRUCTION && jd_mode != FNF_JD_PAIRWISE) throw ArgumentError("unknown JD mode");
    const CheckOptions options{mvd_mode == FNF_MVD_PAPER ? MvdMode::Paper : MvdMode::Witness,
                               jd_mode == FNF_JD_PAIRWISE ? JdMode::Pairwise : JdMode::Reconstruction,
                               degree_of(alpha)};
    validate_all(*deps, rel->relation.schema());
    auto report = make_report("check", *rel, deps);
    bool holds = true;
    for (const auto& d : deps->dependencies) {
      auto c = check(rel->relation, d, options);
      holds = holds && c.holds;
      report.items.emplace_back(std::move(c));
    }
    report.verdict = verdict_of(holds);
    emit(std::move(report), out);
  });
}

fnf_status fnf_keys(const fnf_relation* rel, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    auto report = make_report("keys", *rel);
    report.items.emplace_back(KeyList{candidate_keys(rel->relation)});
    emit(std::move(report), out);
  });
}

fnf_status fnf_is_5nf(const fnf_relation* rel, const fnf_deps* deps, fnf_key_rule rule, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(deps, "dependencies");
    const auto key_rule = rule_of(rule);
    auto report = make_report("is-5nf", *rel, deps);
    auto nf = is_5nf(rel->relation, deps->dependencies, key_rule);
    report.verdict = verdict_of(nf.holds);
    report.items.emplace_back(std::move(nf));
    emit(std::move(report), out);
  });
}

fnf_status fnf_decompose(const fnf_relation* rel, const fnf_deps* deps, fnf_degree alpha, fnf_key_rule rule,
                         fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(deps, "dependencies");
    const auto key_rule = rule_of(rule);
    const auto level = degree_of(alpha);
    auto report = make_report("decompose", *rel, deps);
    auto tree = decompose_5nf(rel->relation, deps->dependencies, level, key_rule);
    report.verdict = verdict_of(tree.all_lossless());
    report.items.emplace_back(std::move(tree));
    emit(std::move(report), out);
  });
}

fnf_status fnf_verify_lossless(const fnf_relation* rel, const char* components, fnf_degree alpha, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(components, "components");
    const auto level = degree_of(alpha);
    auto parsed = parse_components(components);
    auto report = make_report("verify-lossless", *rel);
    report.inputs.push_back({"components", components, sha256_hex(components)});
    const bool lossless = verify_lossless(rel->relation, parsed, level);
    report.verdict = verdict_of(lossless);
    report.items.emplace_back(LosslessResult{std::move(parsed), level, lossless});
    emit(std::move(report), out);
  });
}

fnf_status fnf_oracle_diff(const fnf_relation* rel, const fnf_deps* deps, fnf_report** out) {
  return guarded([&] {
    require(rel, "relation");
    require(deps, "dependencies");
    const crisp::CrispRelation crisp(rel->relation);
    validate_all(*deps, rel->relation.schema());
    auto report = make_report("oracle-diff", *rel, deps);
    bool agree = true;
    for (const auto& d : deps->dependencies) {
      auto a = crisp::oracle_diff(crisp, d);
      agree = agree && a.agree();
      report.items.emplace_back(std::move(a));
    }
    report.verdict = verdict_of(agree);
    emit(std::move(report), out);
  });
}

fnf_verdict fnf_report_verdict(const fnf_report* report) {
  if (!report) return FNF_VERDICT_INFO;
  switch (report->report.verdict) {
    case Verdict::Holds: return FNF_VERDICT_HOLDS;
    case Verdict::Violated: return FNF_VERDICT_VIOLATED;
    case Verdict::Info: break;
  }
  return FNF_VERDICT_INFO;
}

const char* fnf_report_render(fnf_report* report, fnf_format format) {
  const char* result = nullptr;
  const auto status = guarded([&] {
    require(report, "report");
    if (format != FNF_FORMAT_TEXT && format != FNF_FORMAT_JSON) throw ArgumentError("unknown format");
    report->rendered = emit_report(report->report, format == FNF_FORMAT_JSON ? ReportFormat::Json : ReportFormat::Text);
    result = report->rendered.c_str();
  });
  return status == FNF_OK ? result : nullptr;
}

void fnf_report_free(fnf_report* report) { delete report; }

}  // extern "C"
