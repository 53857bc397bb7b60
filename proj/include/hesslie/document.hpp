#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hesslie/catalog.hpp"

namespace hesslie {

/// Result of one catalog check, carried in exported documents.
struct CheckRecord {
  std::string check;
  std::string expected;
  std::string actual;
  std::string source;

  bool operator==(const CheckRecord&) const = default;
};

/// In-memory form of an algebra file. All coefficients are exact; entries
/// omitted from the file are zero.
struct Document {
  static constexpr int kFormatVersion = 1;

  std::optional<std::string> name;
  LieAlgebra algebra;
  std::optional<Connection> connection;
  std::optional<Metric> metric;
  std::optional<ComplexStructure> complex_structure;
  std::map<std::string, KForm> forms;
  std::map<std::string, Rational> parameters;
  /// Index of the radiant generator, when the algebra is a cone extension.
  std::optional<Index> radiant;
  std::vector<std::string> notes;
  std::vector<CheckRecord> checks;

  explicit Document(LieAlgebra a) : algebra(std::move(a)) {}

  Index dim() const { return algebra.dim(); }
  bool operator==(const Document& other) const;
};

/// Parses one JSON object. Malformed text raises SyntaxError with line and
/// column; structural problems raise ValidationError naming the field.
Document parse_document(std::string_view text);

/// Canonical encoding: sorted indices, reduced rationals as "p/q" strings,
/// zero entries dropped, two-space indentation and a trailing newline.
std::string serialize_document(const Document& doc);

/// Exports a catalog entry with its curvature and pipeline t as parameters,
/// divergence notes and remarks as notes, and check results.
Document document_from_entry(const CatalogEntry& entry);

}  // namespace hesslie
