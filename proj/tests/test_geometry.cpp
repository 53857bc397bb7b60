#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hesslie;
using fixtures::diag;
using fixtures::vec;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ValidationError;
}

Vector component(const Tensor<Rational>& t, std::vector<Index> prefix) {
  const Index n = t.shape().back();
  Vector out(n);
  prefix.push_back(0);
  for (Index k = 0; k < n; ++k) {
    prefix.back() = k;
    out(k) = t.at(prefix);
  }
  return out;
}

Vector definiteness_residual(const Matrix& m, const Witness& w) {
  const Index size = w.indices.at(0);
  const Matrix block = m.topLeftCorner(size, size);
  if (w.claim.ends_with(".kernel")) return block * w.residual;
  const Rational det = determinant(block);
  EXPECT_LE(det, Rational(0));
  return vec({det});
}

// Recomputes each witness from scratch and checks it reproduces the stored
// residual, which must be exactly nonzero.
void reevaluate(const ClassifyInput& in, const StructureReport& report) {
  for (const auto& w : report.witnesses) {
    SCOPED_TRACE(w.claim);
    const auto& ix = w.indices;
    if (w.claim == "jacobi") {
      EXPECT_EQ(jacobiator(in.algebra, ix[0], ix[1], ix[2]), w.residual);
    } else if (w.claim == "torsion") {
      EXPECT_EQ(component(torsion(*in.connection), {ix[0], ix[1]}), w.residual);
    } else if (w.claim == "curvature") {
      EXPECT_EQ(component(curvature(*in.connection), {ix[0], ix[1], ix[2]}), w.residual);
    } else if (w.claim == "codazzi") {
      const auto dg = covariant_derivative(*in.connection, *in.metric);
      EXPECT_EQ(vec({dg(ix[0], ix[1], ix[2]) - dg(ix[1], ix[0], ix[2])}), w.residual);
    } else if (w.claim.starts_with("positive_definite")) {
      const Vector r = definiteness_residual(in.metric->matrix(), w);
      if (w.claim.ends_with(".kernel")) {
        EXPECT_TRUE(is_zero(r));
        EXPECT_FALSE(is_zero(w.residual));
        continue;
      }
      EXPECT_EQ(r, w.residual);
    } else if (w.claim == "constant_curvature") {
      const Vector theta = component(curvature(*in.connection), {ix[0], ix[1], ix[2]});
      EXPECT_EQ(theta.size(), w.residual.size());
    } else if (w.claim == "nijenhuis") {
      EXPECT_EQ(component(nijenhuis(in.algebra, *in.complex_structure), {ix[0], ix[1]}), w.residual);
    } else if (w.claim == "d_omega") {
      EXPECT_EQ(vec({ce_d(in.algebra, *in.omega)(ix[0], ix[1], ix[2])}), w.residual);
    } else if (w.claim == "lee_form.closed") {
      EXPECT_EQ(vec({ce_d(in.algebra, *report.lee_form)(ix[0], ix[1])}), w.residual);
    } else if (w.claim == "lee_form.obstruction") {
      ASSERT_TRUE(w.detail);
    } else if (w.claim.starts_with("compatibility")) {
      // covered by the dedicated compatibility test
    } else {
      ADD_FAILURE() << "unknown witness " << w.claim;
    }
    EXPECT_FALSE(is_zero(w.residual));
  }
}

Connection clan_d() { return *get_example("clan-triangular").connection; }
Connection su2_d() { return *get_example("su2").connection; }

}  // namespace

TEST(Geometry, ClanOracleCurvature) {
  const Connection d = clan_d();
  EXPECT_TRUE(torsion(d).is_zero());
  const auto theta = curvature(d);
  EXPECT_EQ(component(theta, {0, 1, 1}), vec({-2, 0}));  // Theta(u,v)v
  EXPECT_EQ(component(theta, {0, 1, 0}), vec({0, 4}));   // Theta(u,v)u
  const Metric g(d.base(), diag({4, 2}));
  const auto cc = constant_curvature(d, g);
  ASSERT_TRUE(std::holds_alternative<CurvatureValue>(cc));
  EXPECT_EQ(std::get<CurvatureValue>(cc).c, Rational(-1));
  EXPECT_TRUE(codazzi_check(d, g).passes());
}

TEST(Geometry, Su2OracleCurvatureAndCompletion) {
  const Connection d = su2_d();
  EXPECT_EQ(d.apply_basis(1, 0), vec({0, 0, -1}));  // D_v u = -w
  EXPECT_EQ(d.apply_basis(2, 1), vec({-1, 0, 0}));  // D_w v = -u
  EXPECT_EQ(d.apply_basis(0, 2), vec({0, -1, 0}));  // D_u w = -v
  EXPECT_TRUE(torsion(d).is_zero());
  EXPECT_EQ(component(curvature(d), {0, 1, 1}), vec({1, 0, 0}));
  const auto cc = constant_curvature(d, Metric(d.base(), Matrix::Identity(3, 3)));
  ASSERT_TRUE(std::holds_alternative<CurvatureValue>(cc));
  EXPECT_EQ(std::get<CurvatureValue>(cc).c, Rational(1));
}

TEST(Geometry, CodazziViolationWitness) {
  const Connection d = clan_d();
  const Metric g(d.base(), diag({4, 3}));
  const auto dg = covariant_derivative(d, g);
  EXPECT_EQ(dg(1, 1, 0), Rational(2));  // (D_v g)(v,u)
  EXPECT_EQ(dg(0, 1, 1), Rational(0));  // (D_u g)(v,v)
  const auto r = codazzi_check(d, g);
  ASSERT_FALSE(r.passes());
  std::multiset<Index> idx{r.violation->i, r.violation->j, r.violation->k};
  EXPECT_EQ(idx, (std::multiset<Index>{0, 1, 1}));
  EXPECT_FALSE(r.violation->residual.is_zero());
}

TEST(Geometry, CurvatureScalesInverselyWithMetric) {
  fixtures::RationalSource src(4);
  for (const auto& base : fixtures::printed_bases()) {
    const auto& e = base.entry;
    if (e.algebra.dim() < 2) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const Rational s = src.positive();
      const auto cc = constant_curvature(*e.connection, e.metric->scaled(s));
      ASSERT_TRUE(std::holds_alternative<CurvatureValue>(cc));
      EXPECT_EQ(std::get<CurvatureValue>(cc).c, *e.curvature / s);
    }
  }
}

TEST(Geometry, ConstantCurvatureVerdicts) {
  const auto so2 = get_example("so2");
  EXPECT_TRUE(std::holds_alternative<CurvatureUnderdetermined>(constant_curvature(*so2.connection, *so2.metric)));

  // nabla_x x = nabla_y y = x on R^2: Theta(x,y)y = x forces c = 1, but
  // Theta(x,y)x = 0 instead of -y.
  const auto ab = LieAlgebra::abelian({"x", "y"});
  auto gamma = Tensor<Rational>::cube(2, {Variance::Covariant, Variance::Covariant, Variance::Contravariant});
  gamma(0, 0, 0) = 1;
  gamma(1, 1, 0) = 1;
  const Connection d(ab, gamma);
  const auto cc = constant_curvature(d, Metric(ab, Matrix::Identity(2, 2)));
  EXPECT_TRUE(std::holds_alternative<NoConstantCurvature>(cc));
  EXPECT_FALSE(is_zero(std::get<NoConstantCurvature>(cc).residual));

  EXPECT_EQ(kind_of([&] { constant_curvature(clan_d(), Metric(clan_d().base(), diag({1, 0}))); }),
            ErrorKind::DegenerateMetric);
}

TEST(Geometry, MetricAndComplexStructureValidation) {
  const auto su2 = get_example("su2").algebra;
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 1) = 1;
  EXPECT_EQ(kind_of([&] { Metric(su2, asym); }), ErrorKind::NotSymmetric);
  const auto plane = LieAlgebra::abelian({"x", "y"});
  EXPECT_EQ(kind_of([&] { ComplexStructure(plane, Matrix::Identity(2, 2)); }), ErrorKind::NotAlmostComplex);
  EXPECT_NO_THROW(ComplexStructure(plane, standard_complex_structure(1)));
}

TEST(Geometry, NijenhuisOnFlatTorsionfulDouble) {
  const auto e = get_example("flat-torsionful-fixture");
  const auto dbl = semidirect_double(*e.connection);
  EXPECT_TRUE(dbl.jacobi.passes());
  const auto n = nijenhuis(dbl.algebra, dbl.j);
  EXPECT_EQ(component(n, {0, 1}), vec({0, -1, 0, 0}));
}

TEST(Geometry, NijenhuisVanishesForFlatTorsionFree) {
  for (const auto& [name, params] : std::vector<std::pair<std::string, std::map<std::string, Rational>>>{
           {"abelian-n", {{"n", 3}}}, {"so2", {}}}) {
    const auto e = get_example(name, params);
    const auto dbl = semidirect_double(*e.connection);
    EXPECT_TRUE(nijenhuis(dbl.algebra, dbl.j).is_zero()) << name;
  }
  // Cone extensions are flat and torsion-free.
  for (const auto& base : fixtures::printed_bases()) {
    const auto& e = base.entry;
    const auto cone = cone_extend(*e.connection, *e.metric, *e.curvature);
    const auto dbl = semidirect_double(cone.nabla);
    EXPECT_TRUE(dbl.jacobi.passes()) << base.name;
    EXPECT_TRUE(nijenhuis(dbl.algebra, dbl.j).is_zero()) << base.name;
  }
}

TEST(Geometry, LeeFormSolve) {
  const auto e = get_example("su2");
  const auto fam = lck_family(*e.connection, *e.metric, 1, 1);
  const auto lee = lee_form_solve(fam.doubled.algebra, fam.omega);
  ASSERT_TRUE(lee.theta);
  EXPECT_TRUE(lee.closed);
  EXPECT_EQ(*lee.theta, fam.theta);
  EXPECT_EQ(ce_d(fam.doubled.algebra, fam.omega), wedge(*lee.theta, fam.omega));
}

TEST(Geometry, LeeFormObstruction) {
  // [x,y] = z: d(z^w) = -x^y^w has no z factor, so no theta ^ (z^w) matches.
  const auto h = LieAlgebra::from_brackets({"x", "y", "z", "w"}, {{0, 1, vec({0, 0, 1, 0})}});
  const KForm omega = KForm::two_form(4, {{{2, 3}, 1}});
  const auto lee = lee_form_solve(h, omega);
  EXPECT_FALSE(lee.theta);
  ASSERT_TRUE(lee.obstruction);
  EXPECT_FALSE(lee.obstruction_value.is_zero());
}

TEST(Geometry, ClassifyWitnessesReevaluate) {
  const auto nonflat = get_example("nonflat-fixture");
  const auto torsionful = get_example("flat-torsionful-fixture");
  const auto ft_double = semidirect_double(*torsionful.connection);
  const auto nf_double = semidirect_double(*nonflat.connection);
  const Metric indefinite(nonflat.algebra, diag({1, -1}));
  const Metric degenerate(nonflat.algebra, diag({1, 0}));
  const Metric perturbed(nonflat.algebra, diag({4, 3}));
  const auto su2 = get_example("su2");
  const auto fam = lck_family(*su2.connection, *su2.metric, 1, 1);
  const auto bad = fixtures::jacobi_violating();

  std::vector<std::pair<ClassifyInput, std::vector<std::string>>> cases{
      {{nonflat.algebra, &*nonflat.connection, &indefinite}, {"curvature", "positive_definite"}},
      {{nonflat.algebra, &*nonflat.connection, &degenerate}, {"positive_definite.kernel"}},
      {{nonflat.algebra, &*nonflat.connection, &perturbed}, {"codazzi", "constant_curvature"}},
      {{torsionful.algebra, &*torsionful.connection, &*torsionful.metric}, {"torsion", "codazzi"}},
      {{ft_double.algebra, nullptr, nullptr, &ft_double.j}, {"nijenhuis"}},
      {{nf_double.algebra, nullptr, nullptr, &nf_double.j}, {"jacobi"}},
      {{fam.doubled.algebra, nullptr, nullptr, &fam.doubled.j, &fam.omega}, {"d_omega"}},
      {{bad}, {"jacobi"}},
  };
  for (const auto& [input, claims] : cases) {
    const auto report = classify(input);
    for (const auto& claim : claims) EXPECT_TRUE(report.has_witness(claim)) << claim;
    reevaluate(input, report);
  }
}

TEST(Geometry, ClassifyVerdictsOnSu2Family) {
  const auto su2 = get_example("su2");
  const auto fam = lck_family(*su2.connection, *su2.metric, 1, 1);
  const auto r = classify({fam.doubled.algebra, nullptr, nullptr, &fam.doubled.j, &fam.omega});
  EXPECT_TRUE(*r.is_lie);
  EXPECT_TRUE(*r.is_integrable);
  EXPECT_TRUE(*r.is_compatible);
  EXPECT_FALSE(*r.is_closed);
  EXPECT_FALSE(*r.is_kahler);
  EXPECT_TRUE(*r.is_lck);
  const auto& w = *std::find_if(r.witnesses.begin(), r.witnesses.end(), [](const Witness& x) { return x.claim == "d_omega"; });
  EXPECT_EQ(w.indices, (std::vector<Index>{0, 3, 4}));  // (u1, rho1, u2)
  EXPECT_EQ(w.residual, vec({2}));
}

TEST(Geometry, CompatibilityWitness) {
  const auto plane = LieAlgebra::abelian({"x", "y"});
  const ComplexStructure j(plane, standard_complex_structure(1));
  const KForm negative = KForm::two_form(2, {{{0, 1}, -1}});
  const auto r = classify({plane, nullptr, nullptr, &j, &negative});
  EXPECT_FALSE(*r.is_compatible);
  EXPECT_TRUE(r.has_witness("compatibility"));
  const KForm positive = KForm::two_form(2, {{{0, 1}, 1}});
  EXPECT_TRUE(*classify({plane, nullptr, nullptr, &j, &positive}).is_kahler);
}
