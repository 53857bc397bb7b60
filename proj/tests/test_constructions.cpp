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

Vector basis_bracket(const LieAlgebra& l, Index i, Index j) { return l.bracket_of_basis(i, j); }

Vector e(Index n, std::initializer_list<std::pair<Index, Rational>> terms) {
  Vector v = Vector::Zero(n);
  for (const auto& [i, c] : terms) v(i) = c;
  return v;
}

}  // namespace

TEST(Double, LabelsAndComplexStructure) {
  const auto dbl = semidirect_double(*get_example("clan-triangular").connection);
  EXPECT_EQ(dbl.algebra.labels(), (std::vector<std::string>{"u1", "v1", "u2", "v2"}));
  EXPECT_EQ(dbl.half, 2);
  EXPECT_EQ(dbl.j.apply(vec({1, 0, 0, 0})), vec({0, 0, 1, 0}));
  EXPECT_EQ(dbl.j.apply(vec({0, 0, 1, 0})), vec({-1, 0, 0, 0}));
}

TEST(Double, NaiveDoubleOfNonflatConnectionViolatesJacobi) {
  const auto dbl = semidirect_double(*get_example("nonflat-fixture").connection);
  ASSERT_FALSE(dbl.jacobi.passes());
  const auto& v = *dbl.jacobi.violation;
  EXPECT_EQ((std::array<Index, 3>{v.i, v.j, v.k}), (std::array<Index, 3>{0, 1, 2}));  // (u1, v1, u2)
  EXPECT_EQ(v.residual, vec({0, 0, 0, -4}));
}

TEST(Cone, ClanDoubleBrackets) {
  const auto c = get_example("clan-triangular");
  const auto fam = lck_family(*c.connection, *c.metric, -1, 1);
  const auto& l = fam.doubled.algebra;
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"u1", "v1", "rho1", "u2", "v2", "rho2"}));
  EXPECT_EQ(basis_bracket(l, 0, 3), e(6, {{5, 4}}));          // [u1,u2] = 4 rho2
  EXPECT_EQ(basis_bracket(l, 1, 4), e(6, {{3, 1}, {5, 2}}));  // [v1,v2] = u2 + 2 rho2
  EXPECT_EQ(basis_bracket(l, 1, 3), e(6, {{4, -2}}));         // [v1,u2] = -2 v2
  EXPECT_EQ(basis_bracket(l, 2, 5), e(6, {{5, 1}}));          // [rho1,rho2] = rho2
}

TEST(Cone, Su2DoubleBrackets) {
  const auto s = get_example("su2");
  const auto fam = lck_family(*s.connection, *s.metric, 1, 1);
  const auto& l = fam.doubled.algebra;
  EXPECT_EQ(basis_bracket(l, 0, 4), e(8, {{7, -1}}));  // [u1,u2] = -rho2
  EXPECT_EQ(basis_bracket(l, 0, 5), e(8, {{6, 1}}));   // [u1,v2] = w2
}

TEST(Cone, ExtensionsAreFlatTorsionFreeWithRadiant) {
  for (const auto& base : fixtures::printed_bases()) {
    const auto& en = base.entry;
    const auto cone = cone_extend(*en.connection, *en.metric, *en.curvature);
    EXPECT_TRUE(curvature(cone.nabla).is_zero()) << base.name;
    EXPECT_TRUE(torsion(cone.nabla).is_zero()) << base.name;
    const Index n = cone.algebra.dim();
    EXPECT_EQ(cone.algebra.labels().back(), "rho");
    for (Index i = 0; i < n; ++i) {
      EXPECT_EQ(cone.nabla.apply_basis(i, cone.rho), cone.algebra.basis_vector(i));
      EXPECT_EQ(cone.nabla.apply_basis(cone.rho, i), cone.algebra.basis_vector(i));
    }
  }
}

TEST(Cone, Errors) {
  const auto c = get_example("clan-triangular");
  EXPECT_EQ(kind_of([&] { cone_extend(*c.connection, *c.metric, 0); }), ErrorKind::ZeroCurvature);
  EXPECT_EQ(kind_of([&] { cone_extend(*c.connection, *c.metric, 1); }), ErrorKind::CurvatureMismatch);
  const Metric perturbed(c.algebra, diag({4, 3}));
  EXPECT_EQ(kind_of([&] { cone_extend(*c.connection, perturbed, -1); }), ErrorKind::NotStatistical);
  const auto t = get_example("flat-torsionful-fixture");
  EXPECT_EQ(kind_of([&] { cone_extend(*t.connection, *t.metric, 1); }), ErrorKind::NotStatistical);
  const auto s = get_example("su2");
  EXPECT_EQ(kind_of([&] { cone_extend(*s.connection, *c.metric, 1); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { lck_family(*c.connection, *c.metric, -1, 0); }), ErrorKind::NonPositiveT);
  EXPECT_EQ(kind_of([&] { lck_family(*c.connection, *c.metric, -1, -2); }), ErrorKind::NonPositiveT);
}

TEST(Lck, OracleLeeCoefficientsAndFirstEntries) {
  struct Case {
    std::string name;
    std::map<std::string, Rational> params;
    Rational c, t, lee;
    std::optional<std::array<Index, 3>> first;
    Rational value;
  };
  const std::vector<Case> cases{
      {"clan-triangular", {}, -1, 1, 0, std::nullopt, 0},
      {"su2", {}, 1, 1, -2, std::array<Index, 3>{0, 3, 4}, 2},
      {"so2", {}, 1, 2, -3, std::array<Index, 3>{0, 1, 2}, 3},
      {"clan-triangular", {{"c", Rational(1, 2)}}, Rational(-1, 2), 3, Rational(1, 2), std::array<Index, 3>{0, 2, 3}, -4},
  };
  for (const auto& k : cases) {
    SCOPED_TRACE(k.name);
    const auto en = get_example(k.name, k.params);
    const auto fam = lck_family(*en.connection, *en.metric, k.c, k.t);
    const Index rho1 = fam.cone.rho;
    EXPECT_EQ(fam.theta, k.lee * KForm::covector(fam.omega.dim(), rho1));
    EXPECT_TRUE(fam.identity_holds);
    EXPECT_TRUE(fam.theta_closed);
    const KForm d = ce_d(fam.doubled.algebra, fam.omega);
    std::optional<std::array<Index, 3>> first;
    for (const auto& tri : sorted_triples(fam.omega.dim()))
      if (!d(tri[0], tri[1], tri[2]).is_zero()) {
        first = tri;
        break;
      }
    EXPECT_EQ(first, k.first);
    if (first) EXPECT_EQ(d((*first)[0], (*first)[1], (*first)[2]), k.value);
  }
}

TEST(Lck, IdentityAndKahlerCriterionOnRandomParameters) {
  fixtures::RationalSource src(1234);
  for (const auto& base : fixtures::printed_bases()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto& en = base.entry;
      const Rational s = src.positive(4, 3);
      const auto r = rescale_metric(*en.connection, *en.metric, *en.curvature, s);
      const Rational t = base.name == "clan-triangular" && trial % 3 == 0 ? Rational(-1) / r.c : src.positive(10, 3);
      const auto fam = lck_family(r.d, r.g, r.c, t);
      const Rational k = Rational(1) + r.c * t;
      const KForm rho1 = KForm::covector(fam.omega.dim(), fam.cone.rho);
      EXPECT_TRUE((ce_d(fam.doubled.algebra, fam.omega) + k * wedge(rho1, fam.omega)).is_zero());
      EXPECT_EQ(*fam.report.is_kahler, k.is_zero());
      EXPECT_TRUE(*fam.report.is_lck);
    }
  }
}

TEST(KahlerFromHessian, MatchesLckFamilyAtCriticalT) {
  const auto c = get_example("clan-triangular");
  const auto fam = lck_family(*c.connection, *c.metric, -1, 1);
  const auto g_t = cone_metric(fam.cone, 1);
  const auto r = classify({fam.cone.algebra, &fam.cone.nabla, &g_t});
  EXPECT_TRUE(*r.is_hessian);
  const auto k = kahler_form_from_hessian(fam.cone.nabla, g_t);
  EXPECT_EQ(k.omega, fam.omega);
  EXPECT_TRUE(*k.report.is_kahler);
  EXPECT_EQ(fam.cone.hessian_at_critical_t, std::optional<bool>(true));
}

TEST(KahlerFromHessian, RejectsNonHessianInput) {
  const auto c = get_example("clan-triangular");
  EXPECT_EQ(kind_of([&] { kahler_form_from_hessian(*c.connection, *c.metric); }), ErrorKind::NotHessian);
  const auto t = get_example("flat-torsionful-fixture");
  EXPECT_EQ(kind_of([&] { kahler_form_from_hessian(*t.connection, *t.metric); }), ErrorKind::NotHessian);
  const auto a = get_example("abelian-n");
  const Metric indefinite(a.algebra, diag({1, -1}));
  EXPECT_EQ(kind_of([&] { kahler_form_from_hessian(*a.connection, indefinite); }), ErrorKind::NotHessian);
  EXPECT_TRUE(*kahler_form_from_hessian(*a.connection, *a.metric).report.is_kahler);
}

TEST(Lambda, Roots) {
  auto roots = solve_lambda(-3);
  EXPECT_EQ(roots.rational, (std::vector<Rational>{-1, Rational(1, 3)}));
  EXPECT_FALSE(roots.surd);
  roots = solve_lambda(1);
  EXPECT_EQ(roots.rational, (std::vector<Rational>{1}));
  roots = solve_lambda(Rational(1, 2));
  EXPECT_TRUE(roots.rational.empty());
  ASSERT_TRUE(roots.surd);
  EXPECT_EQ(roots.surd->d, Rational(1, 2));
  EXPECT_EQ(kind_of([] { solve_lambda(2); }), ErrorKind::NoRealSolution);
  EXPECT_EQ(kind_of([] { solve_lambda(0); }), ErrorKind::ZeroCurvature);
}

TEST(Lambda, RootsSatisfyEquationAndAvoidExcludedValues) {
  for (long p = -12; p <= 12; ++p)
    for (long q = 1; q <= 6; ++q) {
      const Rational c(p, q);
      if (c.is_zero() || c > 1) continue;
      for (const auto& l : solve_lambda(c).rational) {
        EXPECT_EQ((Rational(2) * l - 1) / (l * l), c);
        EXPECT_NE(l, Rational(0));
        EXPECT_NE(l, Rational(1, 2));
      }
    }
}

TEST(Extract, RoundTripOnPrintedExamples) {
  for (const auto& base : fixtures::printed_bases()) {
    const auto& en = base.entry;
    const auto cone = cone_extend(*en.connection, *en.metric, *en.curvature);
    const auto back = extract_statistical(cone.nabla, en.metric->matrix(), cone.rho);
    EXPECT_EQ(back.d, *en.connection) << base.name;
    EXPECT_EQ(back.c, *en.curvature) << base.name;
  }
}

TEST(Extract, Errors) {
  const auto c = get_example("clan-triangular");
  const auto cone = cone_extend(*c.connection, *c.metric, -1);
  // rho is not radiant when we pretend u is the distinguished vector.
  EXPECT_EQ(kind_of([&] { extract_statistical(cone.nabla, c.metric->matrix(), 0); }), ErrorKind::MissingRadiant);
  EXPECT_EQ(kind_of([&] { extract_statistical(cone.nabla, Matrix::Zero(2, 2), cone.rho); }), ErrorKind::NotConical);
  EXPECT_EQ(kind_of([&] { extract_statistical(cone.nabla, diag({4, 3}), cone.rho); }), ErrorKind::NotConical);
}

TEST(Rescale, ScalesCurvatureInversely) {
  const auto s = get_example("su2");
  const auto r = rescale_metric(*s.connection, *s.metric, 1, Rational(1, 2));
  EXPECT_EQ(r.c, Rational(2));
  // Reaching curvature 1 from c = 2 takes the factor c, not 1/c.
  EXPECT_EQ(rescale_metric(r.d, r.g, r.c, r.c).c, Rational(1));
  EXPECT_EQ(rescale_metric(r.d, r.g, r.c, Rational(1) / r.c).c, Rational(4));
  EXPECT_EQ(kind_of([&] { rescale_metric(*s.connection, *s.metric, 1, 0); }), ErrorKind::NonPositiveScale);
  EXPECT_EQ(kind_of([&] { rescale_metric(*s.connection, *s.metric, 2, 1); }), ErrorKind::CurvatureMismatch);
}
