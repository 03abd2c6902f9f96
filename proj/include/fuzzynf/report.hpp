#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzynf/crisp_oracle.hpp"
#include "fuzzynf/dependency.hpp"

namespace fuzzynf {

enum class ReportFormat { Text, Json };

enum class Verdict {
  Info,      // nothing to decide (matrices, key listings)
  Holds,
  Violated,
};

struct InputDigest {
  std::string role;    // "relation", "dependencies", ...
  std::string origin;  // path or caller-supplied name
  std::string sha256;  // hex digest of the raw bytes
};

/// A value of the bundled supply reference tables that the set formula does
/// not reproduce.
struct DivergenceNote {
  std::string attribute;
  AttributeValue row;
  AttributeValue column;
  std::string reference;  // as printed, e.g. "0.34"
  SimilarityDegree computed;
};

struct KeyList {
  std::vector<AttributeSubset> keys;
};

struct LosslessResult {
  std::vector<AttributeSubset> components;
  SimilarityDegree alpha;
  bool lossless = false;
};

using ReportItem = std::variant<SimilarityMatrix, CheckReport, KeyList, NormalFormReport,
                                DecompositionTree, LosslessResult, crisp::Agreement>;

struct Report {
  std::string command;
  std::vector<InputDigest> inputs;
  std::optional<Schema> schema;  // orders attribute names in the output
  Verdict verdict = Verdict::Info;
  std::vector<ReportItem> items;
  std::vector<DivergenceNote> notes;
};

/// Text mode prints degrees rounded to two decimals. JSON mode carries every
/// degree as {"num","den","display"}; an empty report renders as `{}`.
std::string emit_report(const Report& report, ReportFormat format);

/// True if `r` is exactly the bundled three-tuple supply instance.
bool is_supply_reference(const RelationInstance& r);

/// One note per reference-table entry that disagrees with `m`. Empty unless
/// `r` is the supply reference instance.
std::vector<DivergenceNote> reference_divergences(const RelationInstance& r, const SimilarityMatrix& m);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace fuzzynf
