#include "hesslie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hesslie/catalog.hpp"
#include "hesslie/document.hpp"
#include "hesslie/report.hpp"

namespace hesslie {

namespace {

struct Options {
  std::string format = "text";
  std::string file;
  std::string as;
  std::string kind;
  std::string c;
  std::string t;
  std::string output;
  std::string example;
  std::vector<std::string> params;
};

/// Input problems that are not library errors (missing files, flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_verdict_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotStatistical:
    case ErrorKind::NotHessian:
    case ErrorKind::CurvatureMismatch:
    case ErrorKind::NoRealSolution:
    case ErrorKind::NotConical:
    case ErrorKind::MissingRadiant:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Rational flag_or_parameter(const std::string& flag, const Document& doc, const char* key) {
  if (!flag.empty()) return Rational::parse(flag);
  const auto it = doc.parameters.find(key);
  if (it == doc.parameters.end()) throw UsageError(std::string("--") + key + " is required (document has no parameter " + key + ")");
  return it->second;
}

const Connection& need_connection(const Document& doc) {
  if (!doc.connection) throw UsageError("document has no connection");
  return *doc.connection;
}

const Metric& need_metric(const Document& doc) {
  if (!doc.metric) throw UsageError("document has no metric");
  return *doc.metric;
}

struct Emitted {
  Report report;
  std::optional<std::string> document;
};

Emitted verify(const Options& o) {
  const Document doc = parse_document(read_file(o.file));
  const KForm* omega = nullptr;
  if (const auto it = doc.forms.find("omega"); it != doc.forms.end()) omega = &it->second;

  if ((o.as == "statistical" || o.as == "hessian") && (!doc.connection || !doc.metric))
    throw UsageError("--as " + o.as + " needs a connection and a metric");
  if ((o.as == "kahler" || o.as == "lck") && (!doc.complex_structure || omega == nullptr))
    throw UsageError("--as " + o.as + " needs a complex_structure and forms.omega");

  const ClassifyInput input{doc.algebra, doc.connection ? &*doc.connection : nullptr, doc.metric ? &*doc.metric : nullptr,
                            doc.complex_structure ? &*doc.complex_structure : nullptr, omega};
  const StructureReport sr = classify(input);

  Emitted e;
  e.report.command = o.as.empty() ? "verify" : "verify --as " + o.as;
  e.report.subject = doc.name;
  if (o.as.empty()) e.report.pass = *sr.is_lie;
  else if (o.as == "statistical") e.report.pass = *sr.is_lie && *sr.is_statistical;
  else if (o.as == "hessian") e.report.pass = *sr.is_lie && *sr.is_hessian;
  else if (o.as == "kahler") e.report.pass = *sr.is_kahler;
  else e.report.pass = *sr.is_lck;
  add_structure(e.report, sr, doc.algebra.labels());
  e.report.notes = doc.notes;
  return e;
}

Document doubled_document(const DoubledAlgebra& dbl, const Document& source, const std::string& what) {
  Document out(dbl.algebra);
  out.name = source.name ? *source.name + " " + what : what;
  out.complex_structure = dbl.j;
  out.notes = source.notes;
  return out;
}

Emitted construct(const Options& o) {
  const Document doc = parse_document(read_file(o.file));
  Emitted e;
  e.report.command = "construct " + o.kind;
  e.report.subject = doc.name;
  e.report.notes = doc.notes;

  if (o.kind == "double") {
    const auto dbl = semidirect_double(need_connection(doc));
    Document out = doubled_document(dbl, doc, "double");
    const auto sr = classify({dbl.algebra, nullptr, nullptr, &dbl.j, nullptr});
    add_structure(e.report, sr, dbl.algebra.labels());
    e.report.pass = *sr.is_lie;
    e.document = serialize_document(out);
  } else if (o.kind == "cone") {
    const Rational c = flag_or_parameter(o.c, doc, "c");
    const auto cone = cone_extend(need_connection(doc), need_metric(doc), c);
    Document out(cone.algebra);
    out.name = doc.name ? *doc.name + " cone" : "cone";
    out.connection = cone.nabla;
    out.radiant = cone.rho;
    out.parameters["c"] = c;
    out.notes = doc.notes;
    std::optional<Rational> t;
    if (!o.t.empty() || doc.parameters.contains("t")) t = flag_or_parameter(o.t, doc, "t");
    if (t) {
      out.metric = cone_metric(cone, *t);
      out.parameters["t"] = *t;
    }
    const auto sr = classify({cone.algebra, &cone.nabla, out.metric ? &*out.metric : nullptr});
    add_structure(e.report, sr, cone.algebra.labels());
    if (cone.hessian_at_critical_t) e.report.add("hessian_at_critical_t", *cone.hessian_at_critical_t);
    e.report.pass = *sr.is_lie && *sr.is_flat && *sr.is_torsion_free;
    e.document = serialize_document(out);
  } else if (o.kind == "lck") {
    const Rational c = flag_or_parameter(o.c, doc, "c");
    const Rational t = flag_or_parameter(o.t, doc, "t");
    const auto fam = lck_family(need_connection(doc), need_metric(doc), c, t);
    Document out = doubled_document(fam.doubled, doc, "lck");
    out.forms.emplace("omega", fam.omega);
    out.forms.emplace("theta", fam.theta);
    out.parameters["c"] = c;
    out.parameters["t"] = t;
    e.report.add("identity", fam.identity_holds);
    e.report.add("theta", format_combination(fam.doubled.algebra.labels(), fam.theta.as_vector()));
    e.report.add("theta_closed", fam.theta_closed);
    add_structure(e.report, fam.report, fam.doubled.algebra.labels());
    e.report.pass = *fam.report.is_lck && fam.identity_holds;
    e.document = serialize_document(out);
  } else {
    const auto k = kahler_form_from_hessian(need_connection(doc), need_metric(doc));
    Document out = doubled_document(k.doubled, doc, "kahler");
    out.forms.emplace("omega", k.omega);
    add_structure(e.report, k.report, k.doubled.algebra.labels());
    e.report.pass = *k.report.is_kahler;
    e.document = serialize_document(out);
  }
  return e;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, Rational> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=p/q, got '" + item + "'");
    out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
  }
  return out;
}

Emitted catalog_list() {
  Emitted e;
  e.report.command = "catalog list";
  for (const auto& info : list_examples()) {
    std::string value = info.summary;
    for (const auto& p : info.parameters)
      value += "; " + p.name + " = " + p.default_value.str() + " (" + p.constraint + ")";
    if (info.synthetic) value += "; synthetic fixture";
    e.report.add(info.name, value);
  }
  return e;
}

Emitted catalog_show(const Options& o) {
  const CatalogEntry entry = get_example(o.example, parse_params(o.params));
  const Document doc = document_from_entry(entry);
  Emitted e;
  e.report.command = "catalog show";
  e.report.subject = entry.name;
  for (const auto& [key, value] : entry.parameters) e.report.add("parameter " + key, value.str());
  for (const auto& r : doc.checks) {
    const bool ok = r.expected == r.actual;
    e.report.pass = e.report.pass && ok;
    e.report.add("check " + r.check, r.actual + " (expected " + r.expected + ", " + r.source + (ok ? ")" : ", MISMATCH)"));
  }
  for (const auto& claim : evaluate_claims(entry)) {
    e.report.add("claim " + claim.id,
                 "printed " + claim.printed + "; computed " + claim.computed + (claim.agrees ? "; agrees" : "; diverges"));
    // A divergence note must fire exactly when the computation disagrees.
    e.report.pass = e.report.pass && (claim.agrees == !claim.divergence.has_value());
  }
  e.report.notes = doc.notes;
  e.document = serialize_document(doc);
  return e;
}

Emitted lambda(const Options& o) {
  const Rational c = Rational::parse(o.c);
  const LambdaRoots roots = solve_lambda(c);
  Emitted e;
  e.report.command = "lambda";
  e.report.add("c", c.str());
  std::vector<std::string> values;
  for (const auto& r : roots.rational) values.push_back(r.str());
  e.report.add("rational_roots", values.empty() ? std::string("none") : [&] {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i];
    return s;
  }());
  if (roots.surd) {
    const auto& s = *roots.surd;
    const std::string q = s.q.is_integer() ? s.q.str() : "(" + s.q.str() + ")";
    e.report.add("surd_roots", "(" + s.p.str() + " +- sqrt(" + s.d.str() + "))/" + q);
  }
  bool verified = true;
  for (const auto& l : roots.rational) verified = verified && (Rational(2) * l - 1) / (l * l) == c;
  e.report.add("verified", verified);
  e.report.pass = verified;
  return e;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of Hessian, statistical and l.c.K. structures on Lie algebras", "hesslie"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report encoding")->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Classify the structures in an algebra file");
  verify_cmd->add_option("file", o.file, "Algebra document")->required();
  verify_cmd->add_option("--as", o.as, "Verdict to report")->check(CLI::IsMember({"statistical", "hessian", "kahler", "lck"}));

  auto* construct_cmd = app.add_subcommand("construct", "Build a derived algebra from an algebra file");
  construct_cmd->add_option("kind", o.kind, "Construction")->required()->check(CLI::IsMember({"double", "cone", "lck", "kahler"}));
  construct_cmd->add_option("file", o.file, "Algebra document")->required();
  construct_cmd->add_option("--c", o.c, "Curvature p/q");
  construct_cmd->add_option("--t", o.t, "Family parameter p/q");
  construct_cmd->add_option("-o,--output", o.output, "Write the document here instead of stdout");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List examples");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Verify and export one example");
  show_cmd->add_option("name", o.example, "Example name")->required();
  show_cmd->add_option("--param", o.params, "Parameter as key=p/q")->take_all();
  show_cmd->add_option("-o,--output", o.output, "Write the document here");

  auto* lambda_cmd = app.add_subcommand("lambda", "Solve c l^2 - 2 l + 1 = 0");
  lambda_cmd->add_option("--c", o.c, "Curvature p/q")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }
  (void)list_cmd;

  const auto render = [&](const Report& r) { return o.format == "json" ? render_json(r) : render_text(r); };
  try {
    Emitted e;
    bool document_on_stdout = false;
    if (verify_cmd->parsed()) {
      e = verify(o);
    } else if (construct_cmd->parsed()) {
      e = construct(o);
      document_on_stdout = o.output.empty();
    } else if (show_cmd->parsed()) {
      e = catalog_show(o);
      // JSON output of `catalog show` is the exported document itself.
      document_on_stdout = o.output.empty() && o.format == "json";
    } else if (lambda_cmd->parsed()) {
      e = lambda(o);
    } else {
      e = catalog_list();
    }

    if (e.document && !o.output.empty()) write_file(o.output, *e.document);
    if (document_on_stdout) {
      out << *e.document;
      err << render(e.report);
    } else {
      out << render(e.report);
    }
    return e.report.pass ? kExitPass : kExitVerdictFailure;
  } catch (const Error& e) {
    if (is_verdict_kind(e.kind())) {
      Report r;
      r.command = verify_cmd->parsed() ? "verify" : construct_cmd->parsed() ? "construct " + o.kind : "lambda";
      r.pass = false;
      r.add("error", std::string(e.what()));
      out << render(r);
      return kExitVerdictFailure;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hesslie
