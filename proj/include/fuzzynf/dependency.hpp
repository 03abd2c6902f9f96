#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzynf/relation.hpp"

namespace fuzzynf {

/// X ~> Y: tuples are at least as similar on Y as they are on X.
struct FunctionalDep {
  AttributeSubset lhs;
  AttributeSubset rhs;
  friend bool operator==(const FunctionalDep&, const FunctionalDep&) = default;
};

/// X ~>> Y. The remainder Z = R - X - Y is derived from the schema.
struct MultivaluedDep {
  AttributeSubset lhs;
  AttributeSubset rhs;
  friend bool operator==(const MultivaluedDep&, const MultivaluedDep&) = default;
};

/// JD(R1, ..., Rn); the components must cover the schema.
struct JoinDep {
  std::vector<AttributeSubset> components;
  friend bool operator==(const JoinDep&, const JoinDep&) = default;
};

using Dependency = std::variant<FunctionalDep, MultivaluedDep, JoinDep>;

/// Throws SchemaError when `dep` does not fit `schema`.
void validate(const Dependency& dep, const Schema& schema);

/// A JD is trivial when one of its components is the whole schema.
bool is_trivial(const JoinDep& jd, const Schema& schema);

/// `{a,b}` in schema order.
std::string format_subset(const AttributeSubset& subset, const Schema& schema);
/// The dependency in the declaration DSL, e.g. `MVD a ->> b,c`.
std::string format_dependency(const Dependency& dep, const Schema& schema);

enum class MvdMode {
  Paper,    // ds(X) <= ds(Y) implies ds(X) <= ds(Z), for every pair
  Witness,  // an intermediate tuple exists for every pair (classical MVD at alpha 1)
};
enum class JdMode {
  Pairwise,        // the pairwise MVDs (Ri ∩ Rj) ~>> (Ri - Rj), paper mode
  Reconstruction,  // project, join at alpha, mutual coverage
};
enum class KeyRule {
  Component,    // every component of a nontrivial JD is a superkey
  Determinant,  // every pairwise intersection of components is a superkey
};

std::string_view to_string(MvdMode mode) noexcept;
std::string_view to_string(JdMode mode) noexcept;
std::string_view to_string(KeyRule rule) noexcept;

struct DegreeOnSet {
  AttributeSubset attributes;
  SimilarityDegree degree;
  friend bool operator==(const DegreeOnSet&, const DegreeOnSet&) = default;
};

/// One evaluated inequality: the tuples involved and the degrees compared.
struct TraceRecord {
  std::vector<std::size_t> tuples;
  std::vector<DegreeOnSet> degrees;
  bool satisfied = true;
};

struct Counterexample {
  std::vector<std::size_t> tuples;    // indices into the checked instance
  std::optional<Tuple> tuple;         // uncovered tuple, reconstruction mode only
  std::vector<DegreeOnSet> degrees;
  std::string reason;
};

struct ComponentPairTrace;

struct CheckReport {
  Dependency dependency;
  std::string mode;  // "ffd", "paper", "witness", "pairwise", "reconstruction"
  std::optional<SimilarityDegree> alpha;
  bool holds = true;
  std::vector<Counterexample> counterexamples;
  std::vector<TraceRecord> trace;
  std::vector<ComponentPairTrace> pairs;  // pairwise JD mode
  std::optional<std::vector<Tuple>> joined;  // reconstruction mode, in schema order
};

struct ComponentPairTrace {
  std::size_t first = 0;
  std::size_t second = 0;
  AttributeSubset determinant;  // Ri ∩ Rj
  AttributeSubset dependent;    // Ri - Rj
  bool determinant_empty = false;
  CheckReport report;
};

CheckReport check_ffd(const RelationInstance& r, const FunctionalDep& fd);
CheckReport check_fmvd(const RelationInstance& r, const MultivaluedDep& mvd, MvdMode mode);
CheckReport check_fjd(const RelationInstance& r, const JoinDep& jd, SimilarityDegree alpha,
                      JdMode mode);

struct CheckOptions {
  MvdMode mvd_mode = MvdMode::Witness;
  JdMode jd_mode = JdMode::Reconstruction;
  SimilarityDegree alpha = SimilarityDegree::one();
};

/// Dispatches on the dependency kind; FDs ignore the options.
CheckReport check(const RelationInstance& r, const Dependency& dep, const CheckOptions& options = {});

/// X ~> R on the instance.
bool is_superkey(const RelationInstance& r, const AttributeSubset& x);

/// All subset-minimal superkeys, by ascending size and then schema order.
std::vector<AttributeSubset> candidate_keys(const RelationInstance& r);

/// Projects r onto each component, joins the projections at alpha and
/// requires mutual coverage with r. Throws SchemaError if the components do
/// not cover the schema.
bool verify_lossless(const RelationInstance& r, const std::vector<AttributeSubset>& components,
                     SimilarityDegree alpha);

struct KeyViolation {
  std::size_t dependency_index = 0;  // position in the declared list
  AttributeSubset subset;            // the component or determinant that is not a superkey
  KeyRule rule = KeyRule::Component;
};

struct NormalFormReport {
  KeyRule rule = KeyRule::Component;
  bool holds = true;
  std::vector<AttributeSubset> keys;
  std::vector<CheckReport> checks;  // one per declared dependency
  std::vector<KeyViolation> violations;
};

/// Every declared JD that holds (reconstruction, alpha = 1) and is nontrivial
/// must be keyed under `rule`. FDs and MVDs are checked and reported only.
NormalFormReport is_5nf(const RelationInstance& r, const std::vector<Dependency>& deps, KeyRule rule);

struct DecompositionTree {
  AttributeSubset attributes;
  std::size_t tuple_count = 0;
  std::vector<Dependency> dependencies;  // those inherited by this node
  std::optional<JoinDep> applied;
  std::vector<DecompositionTree> children;
  bool lossless_verified = true;

  std::size_t depth() const noexcept;
  std::size_t node_count() const noexcept;
  bool all_lossless() const noexcept;
};

/// Splits along violating JDs (most components first, then declaration
/// order) until every node is in 5NF with respect to what it inherited.
DecompositionTree decompose_5nf(const RelationInstance& r, const std::vector<Dependency>& deps,
                                SimilarityDegree alpha, KeyRule rule);

}  // namespace fuzzynf
