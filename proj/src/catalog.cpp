#include "hesslie/catalog.hpp"

#include <algorithm>
#include <functional>

namespace hesslie {

namespace {

constexpr Variance kCo = Variance::Covariant;
constexpr Variance kContra = Variance::Contravariant;

using Params = std::map<std::string, Rational>;

Vector combo(Index n, std::initializer_list<std::pair<Index, Rational>> terms) {
  Vector v = Vector::Zero(n);
  for (const auto& [i, c] : terms) v(i) += c;
  return v;
}

Matrix diagonal(std::initializer_list<Rational> entries) {
  const auto n = static_cast<Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  Index i = 0;
  for (const auto& e : entries) m(i, i) = e, ++i;
  return m;
}

Index index_of(const LieAlgebra& algebra, const std::string& label) {
  const auto& labels = algebra.labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorKind::ValidationError, "no basis vector named " + label);
  return static_cast<Index>(it - labels.begin());
}

Params resolve(const std::string& name, const std::vector<ParameterSpec>& specs, const Params& given) {
  Params out;
  for (const auto& spec : specs) out[spec.name] = spec.default_value;
  for (const auto& [key, value] : given) {
    if (!out.contains(key)) throw Error(ErrorKind::BadParameters, name + " has no parameter '" + key + "'");
    out[key] = value;
  }
  return out;
}

// Triangular clan: u = diag(1, -1), v = E_12, [u, v] = 2v, with the
// statistical structure of curvature -c.
CatalogEntry clan(const Params& p) {
  const Rational c = p.at("c");
  if (!(c > 0)) throw Error(ErrorKind::BadParameters, "clan-triangular needs c > 0");
  auto algebra = LieAlgebra::from_brackets({"u", "v"}, {{0, 1, combo(2, {{1, 2}})}});
  auto gamma = Tensor<Rational>::cube(2, {kCo, kCo, kContra});
  gamma(1, 0, 1) = -2;  // D_v u = -2v
  gamma(1, 1, 0) = 1;   // D_v v = u
  Connection d(algebra, gamma);
  Metric g(algebra, diagonal({Rational(4) / c, Rational(2) / c}));

  CatalogEntry e{"clan-triangular",
                 "upper triangular traceless 2x2 matrices, [u,v] = 2v, statistical of curvature -c",
                 false,
                 p,
                 algebra,
                 d,
                 g,
                 -c,
                 Rational(1),
                 {},
                 {},
                 {}};
  e.expected = {
      {"jacobi", "pass", Source::printed},
      {"torsion_free", "pass", Source::printed},
      {"codazzi", "pass", Source::printed},
      {"positive_definite", "pass", Source::printed},
      {"statistical", "pass", Source::printed},
      {"flat", "fail", Source::derived},
      {"constant_curvature", (-c).str(), Source::printed},
      {"double.jacobi", "fail", Source::derived},
      {"cone.flat", "pass", Source::derived},
      {"cone.hessian_at_critical_t", "pass", Source::derived},
      {"lck.identity", "pass", Source::derived},
      {"lck.lck", "pass", Source::printed},
      {"lck.kahler", c == 1 ? "pass" : "fail", Source::derived},
      {"lck.lee_form", c == 1 ? "0" : format_combination({"rho1"}, combo(1, {{0, c - 1}})), Source::derived},
  };
  e.printed = {
      {"[u1,u2]", PrintedBracket{"u1", "u2", {{"rho2", -4}}},
       "printed [u1,u2] = -4*rho2; nabla_u u = D_u u - (-c) g(u,u) rho = 4*rho gives [u1,u2] = +4*rho2"},
      {"[v1,v2] first listing", PrintedBracket{"v1", "v2", {{"rho2", -2}}},
       "[v1,v2] is printed twice with different values; nabla_v v = u + 2*rho gives the single relation [v1,v2] = u2 + 2*rho2"},
      {"[rho1,rho2]", PrintedBracket{"rho1", "rho2", {{"rho2", 1}}}, std::nullopt},
      {"[u1,v1]", PrintedBracket{"u1", "v1", {{"v1", 2}}}, std::nullopt},
      {"[v1,u2]", PrintedBracket{"v1", "u2", {{"v2", -2}}}, std::nullopt},
      {"[v1,v2] second listing", PrintedBracket{"v1", "v2", {{"u2", 1}}},
       "[v1,v2] is printed twice with different values; nabla_v v = u + 2*rho gives the single relation [v1,v2] = u2 + 2*rho2"},
      {"[rho1,u2]", PrintedBracket{"rho1", "u2", {{"u2", 1}}}, std::nullopt},
      {"[rho1,v2]", PrintedBracket{"rho1", "v2", {{"v2", 1}}}, std::nullopt},
      {"omega_{c,t}", PrintedOmega{diagonal({Rational(4) / c, Rational(2) / c}), Rational(1)}, std::nullopt},
      {"matrix size", PrintedMatrixSize{3},
       "the example is labelled as the case n = 3 but its generators are 2x2 matrices; the 2x2 (rank 2) clan is implemented"},
  };
  if (c == 1) e.printed.push_back({"omega_{1,1} Kaehler", PrintedKahler{true}, std::nullopt});
  return e;
}

CatalogEntry su2(const Params& p) {
  const Rational s = p.at("scale");
  if (!(s > 0)) throw Error(ErrorKind::BadParameters, "su2 needs scale > 0");
  auto algebra = LieAlgebra::from_brackets(
      {"u", "v", "w"}, {{0, 1, combo(3, {{2, 2}})}, {1, 2, combo(3, {{0, 2}})}, {2, 0, combo(3, {{1, 2}})}});
  auto gamma = Tensor<Rational>::cube(3, {kCo, kCo, kContra});
  gamma(0, 1, 2) = 1;   // D_u v = w
  gamma(1, 2, 0) = 1;   // D_v w = u
  gamma(2, 0, 1) = 1;   // D_w u = v
  gamma(1, 0, 2) = -1;  // D_v u = -w
  gamma(2, 1, 0) = -1;  // D_w v = -u
  gamma(0, 2, 1) = -1;  // D_u w = -v
  Connection d(algebra, gamma);
  Metric g(algebra, diagonal({s, s, s}));
  const Rational curvature = Rational(1) / s;

  CatalogEntry e{"su2",
                 "su(2) with [u,v] = 2w, [v,w] = 2u, [w,u] = 2v, cyclic D, metric scale*identity, curvature 1/scale",
                 false,
                 p,
                 algebra,
                 d,
                 g,
                 curvature,
                 Rational(1),
                 {},
                 {},
                 {"D_v u = -w, D_w v = -u and D_u w = -v are the torsion-free completion of the printed half table"}};
  const Rational lee = -(Rational(1) + curvature);
  e.expected = {
      {"jacobi", "pass", Source::printed},
      {"torsion_free", "pass", Source::derived},
      {"codazzi", "pass", Source::printed},
      {"positive_definite", "pass", Source::printed},
      {"statistical", "pass", Source::printed},
      {"flat", "fail", Source::derived},
      {"constant_curvature", curvature.str(), Source::printed},
      {"double.jacobi", "fail", Source::derived},
      {"cone.flat", "pass", Source::derived},
      {"lck.identity", "pass", Source::derived},
      {"lck.lck", "pass", Source::printed},
      {"lck.kahler", "fail", Source::derived},
      {"lck.lee_form", format_combination({"rho1"}, combo(1, {{0, lee}})), Source::derived},
  };
  auto neg_rho = std::vector<std::pair<std::string, Rational>>{{"rho2", -curvature * s}};
  e.printed = {
      {"[u1,v1]", PrintedBracket{"u1", "v1", {{"w1", 2}}}, std::nullopt},
      {"[v1,w1]", PrintedBracket{"v1", "w1", {{"u1", 2}}}, std::nullopt},
      {"[w1,u1]", PrintedBracket{"w1", "u1", {{"v1", 2}}}, std::nullopt},
      {"[u1,v2]", PrintedBracket{"u1", "v2", {{"w2", 1}}}, std::nullopt},
      {"[v1,w2]", PrintedBracket{"v1", "w2", {{"u2", 1}}}, std::nullopt},
      {"[w1,u2]", PrintedBracket{"w1", "u2", {{"v2", 1}}}, std::nullopt},
      {"[u1,u2]", PrintedBracket{"u1", "u2", neg_rho}, std::nullopt},
      {"[v1,v2]", PrintedBracket{"v1", "v2", neg_rho}, std::nullopt},
      {"[w1,w2]", PrintedBracket{"w1", "w2", neg_rho}, std::nullopt},
      {"[rho1,u2]", PrintedBracket{"rho1", "u2", {{"u2", 1}}}, std::nullopt},
      {"[rho1,v2]", PrintedBracket{"rho1", "v2", {{"v2", 1}}}, std::nullopt},
      {"[rho1,rho2]", PrintedBracket{"rho1", "rho2", {{"rho2", 1}}}, std::nullopt},
      {"omega_{c,t}", PrintedOmega{diagonal({s, s, s}), Rational(1)}, std::nullopt},
      {"rescale by 1/c to curvature 1", PrintedRescaleToUnit{Rational(2)},
       "for curvature c > 1 the metric g/c has curvature c^2, not 1; the metric c*g has curvature 1"},
  };
  if (s == 1) {
    e.printed.push_back({"omega_{1,1} Kaehler", PrintedKahler{true},
                         "omega_{1,1} is printed as Kaehler, but 1 + ct = 2 != 0: d omega_{1,1} = -2 rho^1 ^ omega_{1,1}, "
                         "so the structure is l.c.K. with Lee form -2*rho1 and not Kaehler"});
  }
  return e;
}

CatalogEntry so2(const Params& p) {
  const Rational c = p.at("c");
  if (c.is_zero()) throw Error(ErrorKind::BadParameters, "so2 needs a nonzero declared curvature");
  auto algebra = LieAlgebra::abelian({"v"});
  Connection d = Connection::zero(algebra);
  Metric g(algebra, diagonal({Rational(1)}));
  CatalogEntry e{"so2",
                 "1-dimensional base (universal cover of SO(2)), D = 0, g = (v*)^2, curvature c declared by choice",
                 false,
                 p,
                 algebra,
                 d,
                 g,
                 c,
                 Rational(1),
                 {},
                 {},
                 {"the curvature condition is vacuous in dimension 1; c is chosen, not fitted"}};
  const Rational lee = -(Rational(1) + c);
  e.expected = {
      {"jacobi", "pass", Source::printed},
      {"torsion_free", "pass", Source::derived},
      {"codazzi", "pass", Source::derived},
      {"positive_definite", "pass", Source::printed},
      {"statistical", "pass", Source::derived},
      {"flat", "pass", Source::derived},
      {"hessian", "pass", Source::derived},
      {"constant_curvature", "underdetermined", Source::derived},
      {"double.jacobi", "pass", Source::derived},
      {"double.integrable", "pass", Source::derived},
      {"cone.flat", "pass", Source::derived},
      {"lck.identity", "pass", Source::derived},
      {"lck.lck", "pass", Source::printed},
      {"lck.kahler", lee.is_zero() ? "pass" : "fail", Source::derived},
      {"lck.lee_form", lee.is_zero() ? "0" : format_combination({"rho1"}, combo(1, {{0, lee}})), Source::derived},
  };
  if (c == 1) {
    e.printed = {
        {"[v1,v2]", PrintedBracket{"v1", "v2", {{"rho2", -1}}}, std::nullopt},
        {"[rho1,v2]", PrintedBracket{"rho1", "v2", {{"v2", 1}}}, std::nullopt},
        {"[rho1,rho2]", PrintedBracket{"rho1", "rho2", {{"rho2", 1}}}, std::nullopt},
        {"omega_{c,t}", PrintedOmega{diagonal({Rational(1)}), Rational(1)}, std::nullopt},
        {"omega_{1,1} Kaehler", PrintedKahler{true},
         "omega_{1,1} is printed as Kaehler, but 1 + ct = 2 != 0: d omega_{1,1} = -2 rho^1 ^ omega_{1,1}, "
         "so the structure is l.c.K. with Lee form -2*rho1 and not Kaehler"},
    };
  }
  return e;
}

CatalogEntry abelian(const Params& p) {
  const Rational nq = p.at("n");
  if (!nq.is_integer() || nq < 1 || nq > 16) throw Error(ErrorKind::BadParameters, "abelian-n needs an integer 1 <= n <= 16");
  const auto n = static_cast<Index>(nq.numerator().get_si());
  std::vector<std::string> labels;
  for (Index i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  auto algebra = LieAlgebra::abelian(labels);
  CatalogEntry e{"abelian-n",
                 "abelian R^n with the zero connection and the identity metric",
                 true,
                 p,
                 algebra,
                 Connection::zero(algebra),
                 Metric(algebra, Matrix::Identity(n, n)),
                 std::nullopt,
                 std::nullopt,
                 {},
                 {},
                 {}};
  e.expected = {
      {"jacobi", "pass", Source::synthetic},
      {"torsion_free", "pass", Source::synthetic},
      {"flat", "pass", Source::synthetic},
      {"codazzi", "pass", Source::synthetic},
      {"positive_definite", "pass", Source::synthetic},
      {"statistical", "pass", Source::synthetic},
      {"hessian", "pass", Source::synthetic},
      {"constant_curvature", n == 1 ? "underdetermined" : "0", Source::synthetic},
      {"double.jacobi", "pass", Source::synthetic},
      {"double.integrable", "pass", Source::synthetic},
      {"kahler_from_hessian.kahler", "pass", Source::synthetic},
  };
  return e;
}

CatalogEntry flat_torsionful(const Params& p) {
  auto algebra = LieAlgebra::abelian({"u", "v"});
  auto gamma = Tensor<Rational>::cube(2, {kCo, kCo, kContra});
  gamma(0, 1, 1) = 1;  // nabla_u v = v
  Connection d(algebra, gamma);
  CatalogEntry e{"flat-torsionful-fixture",
                 "abelian R^2 with the flat connection nabla_u v = v (torsion T(u,v) = v)",
                 true,
                 p,
                 algebra,
                 d,
                 Metric(algebra, Matrix::Identity(2, 2)),
                 std::nullopt,
                 std::nullopt,
                 {},
                 {},
                 {}};
  e.expected = {
      {"jacobi", "pass", Source::synthetic},
      {"torsion_free", "fail", Source::synthetic},
      {"flat", "pass", Source::synthetic},
      {"codazzi", "fail", Source::synthetic},
      {"statistical", "fail", Source::synthetic},
      {"double.jacobi", "pass", Source::synthetic},
      {"double.integrable", "fail", Source::synthetic},
  };
  return e;
}

CatalogEntry nonflat(const Params& p) {
  CatalogEntry e = clan({{"c", Rational(1)}});
  e.name = "nonflat-fixture";
  e.summary = "the clan connection used as an affine structure; torsion-free but not flat, so its naive double is not a Lie algebra";
  e.synthetic = true;
  e.parameters = p;
  e.curvature.reset();
  e.pipeline_t.reset();
  e.printed.clear();
  e.expected = {
      {"jacobi", "pass", Source::synthetic},
      {"torsion_free", "pass", Source::synthetic},
      {"flat", "fail", Source::synthetic},
      {"hessian", "fail", Source::synthetic},
      {"double.jacobi", "fail", Source::synthetic},
  };
  return e;
}

struct Builder {
  ExampleInfo info;
  std::function<CatalogEntry(const Params&)> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> all = {
      {{"clan-triangular", "2x2 triangular clan, statistical of constant curvature -c", {{"c", Rational(1), "c > 0"}}, false}, clan},
      {{"so2", "1-dimensional base whose l.c.K. double is the homothetic-motion algebra of the plane",
        {{"c", Rational(1), "c != 0"}}, false},
       so2},
      {{"su2", "su(2) with the cyclic statistical structure of curvature 1/scale", {{"scale", Rational(1), "scale > 0"}}, false},
       su2},
      {{"abelian-n", "abelian R^n, zero connection, identity metric", {{"n", Rational(2), "integer, 1 <= n <= 16"}}, true},
       abelian},
      {{"flat-torsionful-fixture", "flat connection with torsion on abelian R^2", {}, true}, flat_torsionful},
      {{"nonflat-fixture", "torsion-free non-flat connection (clan D)", {}, true}, nonflat},
  };
  return all;
}

std::string verdict(bool b) { return b ? "pass" : "fail"; }

Vector printed_vector(const LieAlgebra& algebra, const std::vector<std::pair<std::string, Rational>>& terms) {
  Vector v = Vector::Zero(algebra.dim());
  for (const auto& [label, c] : terms) v(index_of(algebra, label)) += c;
  return v;
}

}  // namespace

std::string_view to_string(Source source) {
  switch (source) {
    case Source::printed: return "printed";
    case Source::derived: return "derived";
    case Source::synthetic: return "synthetic";
  }
  return "unknown";
}

std::vector<std::string> CatalogEntry::divergence_notes() const {
  std::vector<std::string> out;
  for (const auto& claim : printed)
    if (claim.divergence) out.push_back(claim.id + ": " + *claim.divergence);
  return out;
}

std::string format_combination(const std::vector<std::string>& labels, const Vector& coefficients) {
  std::string out;
  for (Index i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients(i);
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    std::string term = mag == 1 ? labels[static_cast<std::size_t>(i)] : mag.str() + "*" + labels[static_cast<std::size_t>(i)];
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string format_form(const std::vector<std::string>& labels, const KForm& form) {
  const auto& t = form.coefficients();
  std::vector<std::string> names;
  Vector values(0);
  for (Index flat = 0; flat < t.size(); ++flat) {
    const auto idx = t.unravel(flat);
    if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
    const Rational& v = t.entries()[static_cast<std::size_t>(flat)];
    if (v.is_zero()) continue;
    std::string name;
    for (Index i : idx) name += (name.empty() ? "" : "^") + labels[static_cast<std::size_t>(i)];
    names.push_back(name);
    values.conservativeResize(values.size() + 1);
    values(values.size() - 1) = v;
  }
  return format_combination(names, values);
}

std::vector<ExampleInfo> list_examples() {
  std::vector<ExampleInfo> out;
  for (const auto& b : builders()) out.push_back(b.info);
  return out;
}

CatalogEntry get_example(const std::string& name, const Params& params) {
  for (const auto& b : builders()) {
    if (b.info.name == name) return b.build(resolve(name, b.info.parameters, params));
  }
  throw Error(ErrorKind::UnknownExample, "no catalog entry named '" + name + "'");
}

std::string run_check(const CatalogEntry& entry, const std::string& check) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::ValidationError, "check " + check + " needs " + what);
  };
  if (check == "jacobi") return verdict(jacobi_check(entry.algebra).passes());

  const Connection* d = entry.connection ? &*entry.connection : nullptr;
  const Metric* g = entry.metric ? &*entry.metric : nullptr;

  if (check == "torsion_free" || check == "flat" || check == "codazzi" || check == "positive_definite" ||
      check == "statistical" || check == "hessian" || check == "constant_curvature") {
    need(d != nullptr && g != nullptr, "a connection and a metric");
    const auto r = classify({entry.algebra, d, g});
    if (check == "torsion_free") return verdict(*r.is_torsion_free);
    if (check == "flat") return verdict(*r.is_flat);
    if (check == "codazzi") return verdict(*r.is_codazzi);
    if (check == "positive_definite") return verdict(*r.is_positive_definite);
    if (check == "statistical") return verdict(*r.is_statistical);
    if (check == "hessian") return verdict(*r.is_hessian);
    need(r.constant_curvature.has_value(), "a nondegenerate metric");
    if (const auto* v = std::get_if<CurvatureValue>(&*r.constant_curvature)) return v->c.str();
    if (std::holds_alternative<CurvatureUnderdetermined>(*r.constant_curvature)) return "underdetermined";
    return "none";
  }
  if (check == "double.jacobi" || check == "double.integrable") {
    need(d != nullptr, "a connection");
    const auto dbl = semidirect_double(*d);
    if (check == "double.jacobi") return verdict(dbl.jacobi.passes());
    return verdict(nijenhuis(dbl.algebra, dbl.j).is_zero());
  }
  if (check.starts_with("cone.")) {
    need(d != nullptr && g != nullptr && entry.curvature.has_value(), "a statistical bundle with curvature");
    const auto cone = cone_extend(*d, *g, *entry.curvature);
    if (check == "cone.flat") return verdict(curvature(cone.nabla).is_zero() && torsion(cone.nabla).is_zero());
    if (check == "cone.hessian_at_critical_t") {
      need(cone.hessian_at_critical_t.has_value(), "negative curvature");
      return verdict(*cone.hessian_at_critical_t);
    }
  }
  if (check.starts_with("lck.")) {
    need(d != nullptr && g != nullptr && entry.curvature && entry.pipeline_t, "pipeline parameters");
    const auto fam = lck_family(*d, *g, *entry.curvature, *entry.pipeline_t);
    if (check == "lck.identity") return verdict(fam.identity_holds);
    if (check == "lck.lck") return verdict(*fam.report.is_lck);
    if (check == "lck.kahler") return verdict(*fam.report.is_kahler);
    if (check == "lck.lee_form") {
      need(fam.report.lee_form.has_value(), "a solvable Lee form equation");
      return format_combination(fam.doubled.algebra.labels(), fam.report.lee_form->as_vector());
    }
  }
  if (check == "kahler_from_hessian.kahler") {
    need(d != nullptr && g != nullptr, "a connection and a metric");
    return verdict(*kahler_form_from_hessian(*d, *g).report.is_kahler);
  }
  throw Error(ErrorKind::ValidationError, "unknown check '" + check + "'");
}

std::vector<CheckOutcome> verify_entry(const CatalogEntry& entry) {
  std::vector<CheckOutcome> out;
  for (const auto& e : entry.expected) out.push_back({e, run_check(entry, e.check)});
  return out;
}

std::vector<ClaimOutcome> evaluate_claims(const CatalogEntry& entry) {
  std::vector<ClaimOutcome> out;
  if (entry.printed.empty()) return out;
  const auto fam = lck_family(*entry.connection, *entry.metric, *entry.curvature, *entry.pipeline_t);
  const LieAlgebra& dbl = fam.doubled.algebra;

  for (const auto& claim : entry.printed) {
    ClaimOutcome o{claim.id, claim.divergence, "", "", false};
    if (const auto* b = std::get_if<PrintedBracket>(&claim.printed)) {
      const Vector printed = printed_vector(dbl, b->value);
      const Vector computed = bracket(dbl, dbl.basis_vector(index_of(dbl, b->left)), dbl.basis_vector(index_of(dbl, b->right)));
      o.printed = format_combination(dbl.labels(), printed);
      o.computed = format_combination(dbl.labels(), computed);
      o.agrees = printed == computed;
    } else if (const auto* w = std::get_if<PrintedOmega>(&claim.printed)) {
      const Index half = fam.doubled.half;
      Matrix extended = Matrix::Zero(half, half);
      extended.topLeftCorner(half - 1, half - 1) = w->base_metric;
      const KForm printed = hessian_two_form(half, extended) +
                            w->t * wedge(KForm::covector(2 * half, fam.cone.rho), KForm::covector(2 * half, half + fam.cone.rho));
      o.printed = format_form(dbl.labels(), printed);
      o.computed = format_form(dbl.labels(), fam.omega);
      o.agrees = printed == fam.omega;
    } else if (const auto* k = std::get_if<PrintedKahler>(&claim.printed)) {
      o.printed = k->kahler ? "Kaehler" : "not Kaehler";
      o.computed = *fam.report.is_kahler ? "Kaehler"
                                         : "l.c.K. with Lee form " +
                                               format_combination(dbl.labels(), fam.report.lee_form->as_vector());
      o.agrees = k->kahler == *fam.report.is_kahler;
    } else if (const auto* m = std::get_if<PrintedMatrixSize>(&claim.printed)) {
      // Traceless upper triangular n x n matrices span n(n+1)/2 - 1 dimensions.
      Index n = 1;
      while (n * (n + 1) / 2 - 1 < entry.algebra.dim()) ++n;
      o.printed = "n = " + std::to_string(m->n);
      o.computed = "n = " + std::to_string(n);
      o.agrees = m->n == n;
    } else if (const auto* r = std::get_if<PrintedRescaleToUnit>(&claim.printed)) {
      // Start from the same D with the metric scaled so that the curvature is
      // r->curvature > 1, then apply the printed factor 1/c.
      const Rational c0 = *entry.curvature;
      const auto start = rescale_metric(*entry.connection, *entry.metric, c0, c0 / r->curvature);
      const auto printed_step = rescale_metric(start.d, start.g, start.c, Rational(1) / start.c);
      o.printed = "curvature 1";
      o.computed = "curvature " + printed_step.c.str();
      o.agrees = printed_step.c == 1;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace hesslie
