#include "hesslie/document.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hesslie {

using json = nlohmann::ordered_json;

namespace {

constexpr Variance kCo = Variance::Covariant;
constexpr Variance kContra = Variance::Contravariant;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ValidationError, path + ": " + what);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Rational coefficient(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<unsigned long>()) : Rational(j.get<long>());
  if (!j.is_string()) invalid(path, "coefficient must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

Index index(const json& j, Index dim, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "index must be an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<unsigned long>();
    if (v < static_cast<unsigned long>(dim)) return static_cast<Index>(v);
  }
  invalid(path, "index out of range for dimension " + std::to_string(dim));
}

const json& array_field(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_array()) invalid(key, "must be an array");
  return v;
}

/// Splits each entry [i_1, ..., i_k, coeff] into indices and coefficient.
template <typename F>
void for_each_entry(const json& list, const std::string& path, std::size_t arity, Index dim, F&& f) {
  for (std::size_t e = 0; e < list.size(); ++e) {
    const json& entry = list[e];
    const std::string p = at(path, e);
    if (!entry.is_array() || entry.size() != arity + 1) invalid(p, "expected " + std::to_string(arity) + " indices and a coefficient");
    std::vector<Index> idx;
    for (std::size_t a = 0; a < arity; ++a) idx.push_back(index(entry[a], dim, at(p, a)));
    f(idx, coefficient(entry[arity], at(p, arity)), p);
  }
}

/// Sign of the permutation sorting idx, or 0 when an index repeats.
int sort_with_sign(std::vector<Index>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  return sign;
}

/// Writes value at every permutation of the sorted indices with its sign.
void fill_antisymmetric(Tensor<Rational>& t, std::vector<Index> sorted, const Rational& value) {
  std::vector<std::size_t> perm(sorted.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Index> idx;
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      idx.push_back(sorted[perm[a]]);
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) sign = -sign;
    }
    t.at(idx) = sign > 0 ? value : -value;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

LieAlgebra parse_algebra(const json& root) {
  if (!root.contains("basis")) invalid("basis", "missing");
  const json& basis = array_field(root, "basis");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string() || basis[i].get<std::string>().empty()) invalid(at("basis", i), "label must be a non-empty string");
    if (!seen.insert(basis[i].get<std::string>()).second) invalid(at("basis", i), "duplicate label");
    labels.push_back(basis[i].get<std::string>());
  }
  if (labels.empty()) invalid("basis", "must not be empty");
  const auto n = static_cast<Index>(labels.size());
  if (root.contains("dim")) {
    const json& d = root["dim"];
    if (!d.is_number_unsigned() || d.get<unsigned long>() != labels.size()) invalid("dim", "must equal the number of basis labels");
  }

  auto c = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
  if (root.contains("brackets")) {
    std::set<std::vector<Index>> keys;
    for_each_entry(array_field(root, "brackets"), "brackets", 3, n, [&](std::vector<Index> idx, Rational v, const std::string& p) {
      if (idx[0] == idx[1]) {
        if (!v.is_zero()) invalid(p, "[e_i, e_i] must vanish");
        return;
      }
      if (idx[0] > idx[1]) std::swap(idx[0], idx[1]), v = -v;
      if (!keys.insert(idx).second) invalid(p, "duplicate bracket entry");
      c(idx[0], idx[1], idx[2]) = v;
      c(idx[1], idx[0], idx[2]) = -v;
    });
  }
  return LieAlgebra(labels, c);
}

template <typename F>
void unique_entries(const json& root, const char* key, std::size_t arity, Index n, F&& f) {
  std::set<std::vector<Index>> keys;
  for_each_entry(array_field(root, key), key, arity, n, [&](std::vector<Index> idx, Rational v, const std::string& p) {
    f(idx, v, p, keys);
  });
}

std::map<std::string, KForm> parse_forms(const json& forms, Index n) {
  if (!forms.is_object()) invalid("forms", "must be an object");
  std::map<std::string, KForm> out;
  for (const auto& [name, block] : forms.items()) {
    const std::string path = "forms." + name;
    if (!block.is_object() || !block.contains("degree") || !block.contains("terms")) invalid(path, "needs degree and terms");
    const json& deg = block["degree"];
    if (!deg.is_number_unsigned() || deg.get<unsigned long>() < 1 || deg.get<unsigned long>() > 3)
      invalid(path + ".degree", "must be 1, 2 or 3");
    const auto k = deg.get<std::size_t>();
    if (!block["terms"].is_array()) invalid(path + ".terms", "must be an array");
    Tensor<Rational> t(std::vector<Index>(k, n), std::vector<Variance>(k, kCo));
    std::set<std::vector<Index>> keys;
    for_each_entry(block["terms"], path + ".terms", k, n, [&](std::vector<Index> idx, Rational v, const std::string& p) {
      const int sign = sort_with_sign(idx);
      if (sign == 0) {
        if (!v.is_zero()) invalid(p, "repeated index in an alternating form");
        return;
      }
      if (!keys.insert(idx).second) invalid(p, "duplicate form entry");
      fill_antisymmetric(t, idx, sign > 0 ? v : -v);
    });
    out.emplace(name, KForm(std::move(t)));
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.is_array()) invalid(key, "must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) invalid(at(key, i), "must be a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Document build(const json& root) {
  if (!root.is_object()) invalid("document", "must be a JSON object");
  static const std::set<std::string> known = {"format_version", "name", "dim", "basis", "brackets", "connection", "metric",
                                              "complex_structure", "forms", "parameters", "radiant", "notes", "checks"};
  for (const auto& [key, _] : root.items())
    if (!known.contains(key)) invalid(key, "unknown field");
  if (!root.contains("format_version")) invalid("format_version", "missing");
  if (!root["format_version"].is_number_integer() || root["format_version"].get<long>() != Document::kFormatVersion)
    invalid("format_version", "unsupported version");

  Document doc(parse_algebra(root));
  const Index n = doc.dim();

  if (root.contains("name")) {
    if (!root["name"].is_string()) invalid("name", "must be a string");
    doc.name = root["name"].get<std::string>();
  }
  if (root.contains("connection")) {
    auto gamma = Tensor<Rational>::cube(n, {kCo, kCo, kContra});
    unique_entries(root, "connection", 3, n, [&](const std::vector<Index>& idx, const Rational& v, const std::string& p, auto& keys) {
      if (!keys.insert(idx).second) invalid(p, "duplicate connection entry");
      gamma(idx[0], idx[1], idx[2]) = v;
    });
    doc.connection.emplace(doc.algebra, std::move(gamma));
  }
  if (root.contains("metric")) {
    Matrix g = Matrix::Zero(n, n);
    unique_entries(root, "metric", 2, n, [&](std::vector<Index> idx, const Rational& v, const std::string& p, auto& keys) {
      if (idx[0] > idx[1]) std::swap(idx[0], idx[1]);
      if (!keys.insert(idx).second) invalid(p, "duplicate metric entry");
      g(idx[0], idx[1]) = v;
      g(idx[1], idx[0]) = v;
    });
    doc.metric.emplace(doc.algebra, std::move(g));
  }
  if (root.contains("complex_structure")) {
    Matrix j = Matrix::Zero(n, n);
    unique_entries(root, "complex_structure", 2, n, [&](const std::vector<Index>& idx, const Rational& v, const std::string& p, auto& keys) {
      if (!keys.insert(idx).second) invalid(p, "duplicate complex_structure entry");
      j(idx[0], idx[1]) = v;
    });
    doc.complex_structure.emplace(doc.algebra, std::move(j));
  }
  if (root.contains("forms")) doc.forms = parse_forms(root["forms"], n);
  if (root.contains("parameters")) {
    const json& params = root["parameters"];
    if (!params.is_object()) invalid("parameters", "must be an object");
    for (const auto& [key, value] : params.items()) {
      if (key != "c" && key != "t") invalid("parameters." + key, "unknown parameter (expected c or t)");
      doc.parameters[key] = coefficient(value, "parameters." + key);
    }
  }
  if (root.contains("radiant")) doc.radiant = index(root["radiant"], n, "radiant");
  if (root.contains("notes")) doc.notes = string_list(root["notes"], "notes");
  if (root.contains("checks")) {
    const json& checks = root["checks"];
    if (!checks.is_array()) invalid("checks", "must be an array");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto fields = string_list(checks[i], "checks");
      if (fields.size() != 4) invalid(at("checks", i), "expected [check, expected, actual, source]");
      doc.checks.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
  }
  return doc;
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

// Objects one key per line; arrays of scalars stay on one line so that each
// coefficient entry reads as a single row.
void write(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << json(key).dump() << ": ";
      write(os, value, indent + 2);
    }
    os << "\n" << close << "}";
  } else if (j.is_array() && !std::all_of(j.begin(), j.end(), is_scalar)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) os << ",\n";
      os << pad;
      write(os, j[i], indent + 2);
    }
    os << "\n" << close << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace

bool Document::operator==(const Document& o) const {
  const auto same_j = [](const std::optional<ComplexStructure>& a, const std::optional<ComplexStructure>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->base() == b->base() && a->matrix() == b->matrix());
  };
  return name == o.name && algebra == o.algebra && connection == o.connection && metric == o.metric &&
         same_j(complex_structure, o.complex_structure) && forms == o.forms && parameters == o.parameters &&
         radiant == o.radiant && notes == o.notes && checks == o.checks;
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') ++line, column = 1;
      else ++column;
    }
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  return build(root);
}

std::string serialize_document(const Document& doc) {
  const Index n = doc.dim();
  json root;
  root["format_version"] = Document::kFormatVersion;
  if (doc.name) root["name"] = *doc.name;
  root["dim"] = n;
  root["basis"] = doc.algebra.labels();

  json brackets = json::array();
  const auto& c = doc.algebra.structure();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) brackets.push_back({i, j, k, c(i, j, k).str()});
  root["brackets"] = brackets;

  if (doc.connection) {
    json entries = json::array();
    const auto& g = doc.connection->gamma();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          if (!g(i, j, k).is_zero()) entries.push_back({i, j, k, g(i, j, k).str()});
    root["connection"] = entries;
  }
  if (doc.metric) {
    json entries = json::array();
    const Matrix& g = doc.metric->matrix();
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        if (!g(i, j).is_zero()) entries.push_back({i, j, g(i, j).str()});
    root["metric"] = entries;
  }
  if (doc.complex_structure) {
    json entries = json::array();
    const Matrix& m = doc.complex_structure->matrix();
    for (Index r = 0; r < n; ++r)
      for (Index col = 0; col < n; ++col)
        if (!m(r, col).is_zero()) entries.push_back({r, col, m(r, col).str()});
    root["complex_structure"] = entries;
  }
  if (!doc.forms.empty()) {
    json forms = json::object();
    for (const auto& [name, form] : doc.forms) {
      json terms = json::array();
      const auto& t = form.coefficients();
      for (Index flat = 0; flat < t.size(); ++flat) {
        const auto idx = t.unravel(flat);
        if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
        const Rational& v = t.entries()[static_cast<std::size_t>(flat)];
        if (v.is_zero()) continue;
        json entry = json::array();
        for (Index i : idx) entry.push_back(i);
        entry.push_back(v.str());
        terms.push_back(entry);
      }
      forms[name] = {{"degree", form.degree()}, {"terms", terms}};
    }
    root["forms"] = forms;
  }
  if (!doc.parameters.empty()) {
    json params = json::object();
    for (const auto& [key, value] : doc.parameters) params[key] = value.str();
    root["parameters"] = params;
  }
  if (doc.radiant) root["radiant"] = *doc.radiant;
  if (!doc.notes.empty()) root["notes"] = doc.notes;
  if (!doc.checks.empty()) {
    json checks = json::array();
    for (const auto& r : doc.checks) checks.push_back({r.check, r.expected, r.actual, r.source});
    root["checks"] = checks;
  }

  std::ostringstream os;
  write(os, root, 0);
  os << "\n";
  return os.str();
}

Document document_from_entry(const CatalogEntry& entry) {
  Document doc(entry.algebra);
  doc.name = entry.name;
  doc.connection = entry.connection;
  doc.metric = entry.metric;
  if (entry.curvature) doc.parameters["c"] = *entry.curvature;
  if (entry.pipeline_t) doc.parameters["t"] = *entry.pipeline_t;
  doc.notes = entry.divergence_notes();
  doc.notes.insert(doc.notes.end(), entry.remarks.begin(), entry.remarks.end());
  for (const auto& outcome : verify_entry(entry))
    doc.checks.push_back({outcome.expected.check, outcome.expected.outcome, outcome.actual,
                          std::string(to_string(outcome.expected.source))});
  return doc;
}

}  // namespace hesslie
