#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hesslie/geometry.hpp"

namespace hesslie {

struct RenderedWitness {
  std::string claim;
  std::vector<Index> indices;
  std::vector<std::string> labels;
  std::vector<std::string> residual;
  std::optional<std::vector<std::string>> detail;
};

/// Ordered key/value report shared by every CLI command. Rendering is a pure
/// function of the contents, so identical inputs give identical bytes.
struct Report {
  std::string command;
  std::optional<std::string> subject;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<RenderedWitness> witnesses;
  std::vector<std::string> notes;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
};

std::vector<std::string> rational_strings(const Vector& v);

/// Appends every populated verdict and witness of `sr`; labels name basis
/// vectors of the classified algebra.
void add_structure(Report& report, const StructureReport& sr, const std::vector<std::string>& labels);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace hesslie
