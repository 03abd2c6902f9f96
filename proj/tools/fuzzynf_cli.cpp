// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fuzzynf/fuzzynf.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

struct RelationDeleter {
  void operator()(fnf_relation* p) const { fnf_relation_free(p); }
};
struct DepsDeleter {
  void operator()(fnf_deps* p) const { fnf_deps_free(p); }
};
struct ReportDeleter {
  void operator()(fnf_report* p) const { fnf_report_free(p); }
};
using RelationPtr = std::unique_ptr<fnf_relation, RelationDeleter>;
using DepsPtr = std::unique_ptr<fnf_deps, DepsDeleter>;
using ReportPtr = std::unique_ptr<fnf_report, ReportDeleter>;

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void ok(fnf_status status) {
  if (status != FNF_OK) throw Failure(fnf_last_error());
}

RelationPtr load_relation(const std::string& path) {
  fnf_relation* rel = nullptr;
  ok(fnf_relation_load(path.c_str(), &rel));
  return RelationPtr(rel);
}

DepsPtr load_deps(const std::string& path) {
  fnf_deps* deps = nullptr;
  ok(fnf_deps_load(path.c_str(), &deps));
  return DepsPtr(deps);
}

fnf_degree parse_alpha(const std::string& text) {
  fnf_degree d{};
  if (fnf_parse_degree(text.c_str(), &d) != FNF_OK) throw Failure(std::string("--alpha: ") + fnf_last_error());
  return d;
}

struct Options {
  std::string format = "text";
  std::string relation;
  std::string deps;
  std::string attribute;
  std::string mode;
  std::string alpha = "1";
  std::string rule = "component";
  std::string components;
};

int finish(fnf_report* raw, const Options& opts) {
  ReportPtr report(raw);
  const char* text = fnf_report_render(report.get(), opts.format == "json" ? FNF_FORMAT_JSON : FNF_FORMAT_TEXT);
  if (!text) throw Failure(fnf_last_error());
  std::fputs(text, stdout);
  std::fflush(stdout);
  return fnf_report_verdict(report.get()) == FNF_VERDICT_VIOLATED ? kExitViolated : kExitHolds;
}

fnf_key_rule rule_of(const std::string& rule) {
  return rule == "determinant" ? FNF_RULE_DETERMINANT : FNF_RULE_COMPONENT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy functional, multivalued and join dependency checks over set-valued relations"};
  app.set_version_flag("--version", std::string(fnf_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  const auto relation_arg = [&](CLI::App* sub) {
    sub->add_option("relation", opts.relation, "Relation CSV file")->required();
  };
  const auto deps_arg = [&](CLI::App* sub) {
    sub->add_option("--deps", opts.deps, "Dependency declarations file")->required();
  };
  const auto alpha_arg = [&](CLI::App* sub) {
    sub->add_option("--alpha", opts.alpha, "Similarity threshold, p/q or decimal in [0,1]")->capture_default_str();
  };
  const auto rule_arg = [&](CLI::App* sub) {
    sub->add_option("--rule", opts.rule, "5NF key rule")
        ->check(CLI::IsMember({"component", "determinant"}))
        ->capture_default_str();
  };

  auto* sim = app.add_subcommand("sim-matrix", "Pairwise degree of similarity of one attribute");
  relation_arg(sim);
  sim->add_option("--attr", opts.attribute, "Attribute name")->required();

  auto* chk = app.add_subcommand("check", "Check every declared dependency");
  relation_arg(chk);
  deps_arg(chk);
  chk->add_option("--mode", opts.mode, "MVD mode (paper|witness) or JD mode (pairwise|reconstruction)")
      ->check(CLI::IsMember({"paper", "witness", "pairwise", "reconstruction"}));
  alpha_arg(chk);

  auto* keys = app.add_subcommand("keys", "List candidate keys");
  relation_arg(keys);

  auto* nf = app.add_subcommand("is-5nf", "Test fifth normal form");
  relation_arg(nf);
  deps_arg(nf);
  rule_arg(nf);

  auto* dec = app.add_subcommand("decompose", "Decompose into 5NF");
  relation_arg(dec);
  deps_arg(dec);
  alpha_arg(dec);
  rule_arg(dec);

  auto* lossless = app.add_subcommand("verify-lossless", "Test a decomposition for lossless join");
  relation_arg(lossless);
  lossless->add_option("--components", opts.components, "Components, e.g. \"(a,b),(b,c)\"")->required();
  alpha_arg(lossless);

  auto* diff = app.add_subcommand("oracle-diff", "Compare against the classical checkers (atom-only relations)");
  relation_arg(diff);
  deps_arg(diff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    // flags are fully validated before any file is opened
    const fnf_degree alpha = parse_alpha(opts.alpha);
    const fnf_mvd_mode mvd_mode = opts.mode == "paper" ? FNF_MVD_PAPER : FNF_MVD_WITNESS;
    const fnf_jd_mode jd_mode = opts.mode == "pairwise" ? FNF_JD_PAIRWISE : FNF_JD_RECONSTRUCTION;
    fnf_report* report = nullptr;

    if (sim->parsed()) {
      auto rel = load_relation(opts.relation);
      ok(fnf_sim_matrix(rel.get(), opts.attribute.c_str(), &report));
    } else if (chk->parsed()) {
      auto rel = load_relation(opts.relation);
      auto deps = load_deps(opts.deps);
      ok(fnf_check(rel.get(), deps.get(), mvd_mode, jd_mode, alpha, &report));
    } else if (keys->parsed()) {
      auto rel = load_relation(opts.relation);
      ok(fnf_keys(rel.get(), &report));
    } else if (nf->parsed()) {
      auto rel = load_relation(opts.relation);
      auto deps = load_deps(opts.deps);
      ok(fnf_is_5nf(rel.get(), deps.get(), rule_of(opts.rule), &report));
    } else if (dec->parsed()) {
      auto rel = load_relation(opts.relation);
      auto deps = load_deps(opts.deps);
      ok(fnf_decompose(rel.get(), deps.get(), alpha, rule_of(opts.rule), &report));
    } else if (lossless->parsed()) {
      auto rel = load_relation(opts.relation);
      ok(fnf_verify_lossless(rel.get(), opts.components.c_str(), alpha, &report));
    } else {
      auto rel = load_relation(opts.relation);
      auto deps = load_deps(opts.deps);
      ok(fnf_oracle_diff(rel.get(), deps.get(), &report));
    }
    return finish(report, opts);
  } catch (const std::exception& e) {
    std::cerr << "fuzzynf: error: " << e.what() << '\n';
    return kExitError;
  }
}
