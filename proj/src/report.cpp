#include "hesslie/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hesslie/catalog.hpp"

namespace hesslie {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string curvature_text(const ConstantCurvature& cc) {
  if (const auto* v = std::get_if<CurvatureValue>(&cc)) return v->c.str();
  if (std::holds_alternative<CurvatureUnderdetermined>(cc)) return "underdetermined";
  return "none";
}

}  // namespace

std::vector<std::string> rational_strings(const Vector& v) {
  std::vector<std::string> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

void add_structure(Report& report, const StructureReport& sr, const std::vector<std::string>& labels) {
  const auto flag = [&](const char* key, const std::optional<bool>& v) {
    if (v) report.add(key, *v);
  };
  flag("is_lie", sr.is_lie);
  flag("is_torsion_free", sr.is_torsion_free);
  flag("is_flat", sr.is_flat);
  flag("is_codazzi", sr.is_codazzi);
  flag("is_positive_definite", sr.is_positive_definite);
  flag("is_statistical", sr.is_statistical);
  flag("is_hessian", sr.is_hessian);
  if (sr.constant_curvature) report.add("constant_curvature", curvature_text(*sr.constant_curvature));
  flag("is_integrable", sr.is_integrable);
  flag("is_closed", sr.is_closed);
  flag("is_compatible", sr.is_compatible);
  flag("is_kahler", sr.is_kahler);
  flag("is_lck", sr.is_lck);
  if (sr.lee_form) report.add("lee_form", format_combination(labels, sr.lee_form->as_vector()));

  for (const auto& w : sr.witnesses) {
    RenderedWitness r{w.claim, w.indices, {}, rational_strings(w.residual), std::nullopt};
    for (Index i : w.indices) r.labels.push_back(labels[static_cast<std::size_t>(i)]);
    if (w.detail) r.detail = rational_strings(*w.detail);
    report.witnesses.push_back(std::move(r));
  }
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  if (report.subject) os << "subject: " << *report.subject << "\n";
  os << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
  for (const auto& [key, value] : report.fields) os << "  " << key << ": " << value << "\n";
  for (const auto& w : report.witnesses) {
    os << "witness " << w.claim << " (" << join(w.labels, ", ") << "): residual [" << join(w.residual, ", ") << "]";
    if (w.detail) os << " detail [" << join(*w.detail, ", ") << "]";
    os << "\n";
  }
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string render_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["command"] = report.command;
  if (report.subject) root["subject"] = *report.subject;
  root["verdict"] = report.pass ? "pass" : "fail";
  json fields = json::object();
  for (const auto& [key, value] : report.fields) fields[key] = value;
  root["results"] = fields;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json item;
    item["claim"] = w.claim;
    item["indices"] = w.indices;
    item["labels"] = w.labels;
    item["residual"] = w.residual;
    if (w.detail) item["detail"] = *w.detail;
    witnesses.push_back(item);
  }
  root["witnesses"] = witnesses;
  root["notes"] = report.notes;
  return root.dump(2) + "\n";
}

}  // namespace hesslie
